#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ampwick/rational.hpp"

namespace ampwick {

// Rooted tree with ordered children and a coefficient per vertex.  Vertex 0
// is the root.  Depths count distance from the root (root = 0); the paper's
// generation of a vertex is horizon - depth.
class UnlabeledTree {
  public:
    UnlabeledTree();

    int add_child(int parent, RootRational coeff = RootRational());

    int size() const { return static_cast<int>(parent_.size()); }
    int edge_count() const { return size() - 1; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(children(v).size()); }
    bool is_leaf(int v) const { return children(v).empty(); }
    int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }
    int height() const;

    const RootRational& coeff(int v) const { return coeff_[static_cast<std::size_t>(v)]; }
    void set_coeff(int v, RootRational c) { coeff_[static_cast<std::size_t>(v)] = std::move(c); }

    // Whether v contributes an x^0 factor to Val.  By default every leaf does;
    // with a horizon only leaves at depth == horizon do; explicit flags win.
    bool carries_initial(int v) const;
    int initial_count() const;
    void set_initial_flags(std::vector<bool> flags) { initial_ = std::move(flags); }

    std::optional<int> horizon;
    std::optional<int> root_index;

    std::vector<int> bfs_order() const;
    UnlabeledTree subtree(int v) const;

    // AHU string of the unordered shape: "(" + sorted child strings + ")".
    std::string canonical() const;
    std::string canonical(int v) const;
    static UnlabeledTree from_canonical(const std::string& s);

  private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    std::vector<RootRational> coeff_;
    std::vector<bool> initial_;
};

// Identify the two roots; children of b follow those of a.
UnlabeledTree glue(const UnlabeledTree& a, const UnlabeledTree& b);

UnlabeledTree star_tree(int k);
UnlabeledTree path_tree(int k);

struct LabeledTree {
    UnlabeledTree base;
    std::vector<int> labels;  // 1-based labels, labels[0] is the root label

    int label(int v) const { return labels[static_cast<std::size_t>(v)]; }
    int root_label() const { return labels.at(0); }
};

bool is_non_backtracking(const LabeledTree& t);
bool has_self_loop(const LabeledTree& t);

}  // namespace ampwick
