#include "ampwick/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace ampwick {

UnlabeledTree::UnlabeledTree() : parent_{-1}, children_(1), depth_{0}, coeff_(1) {}

int UnlabeledTree::add_child(int parent, RootRational coeff) {
    if (parent < 0 || parent >= size()) throw std::out_of_range("bad parent vertex");
    int v = size();
    parent_.push_back(parent);
    children_.emplace_back();
    children_[static_cast<std::size_t>(parent)].push_back(v);
    depth_.push_back(depth(parent) + 1);
    coeff_.push_back(std::move(coeff));
    if (!initial_.empty()) initial_.push_back(true);
    return v;
}

int UnlabeledTree::height() const { return *std::max_element(depth_.begin(), depth_.end()); }

bool UnlabeledTree::carries_initial(int v) const {
    if (!initial_.empty()) return initial_[static_cast<std::size_t>(v)];
    if (!is_leaf(v) || (v == 0 && size() > 1)) return false;
    return !horizon || depth(v) == *horizon;
}

int UnlabeledTree::initial_count() const {
    int c = 0;
    for (int v = 0; v < size(); ++v) c += carries_initial(v);
    return c;
}

std::vector<int> UnlabeledTree::bfs_order() const {
    std::vector<int> order{0};
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int c : children(order[k])) order.push_back(c);
    return order;
}

UnlabeledTree UnlabeledTree::subtree(int v) const {
    UnlabeledTree t;
    t.set_coeff(0, coeff(v));
    std::vector<std::pair<int, int>> queue{{v, 0}};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        auto [u, tu] = queue[k];
        for (int c : children(u)) queue.push_back({c, t.add_child(tu, coeff(c))});
    }
    if (horizon) t.horizon = *horizon - depth(v);
    return t;
}

std::string UnlabeledTree::canonical(int v) const {
    std::vector<std::string> parts;
    for (int c : children(v)) parts.push_back(canonical(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ")";
    return s;
}

std::string UnlabeledTree::canonical() const { return canonical(0); }

UnlabeledTree UnlabeledTree::from_canonical(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad canonical string");
    UnlabeledTree t;
    std::vector<int> stack{0};
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        if (s[k] == '(') {
            stack.push_back(t.add_child(stack.back()));
        } else if (s[k] == ')') {
            if (stack.size() < 2) throw std::invalid_argument("bad canonical string");
            stack.pop_back();
        } else {
            throw std::invalid_argument("bad canonical string");
        }
    }
    if (stack.size() != 1) throw std::invalid_argument("bad canonical string");
    return t;
}

UnlabeledTree glue(const UnlabeledTree& a, const UnlabeledTree& b) {
    UnlabeledTree t;
    t.root_index = a.root_index ? a.root_index : b.root_index;
    t.set_coeff(0, a.coeff(0));
    for (const UnlabeledTree* src : {&a, &b}) {
        std::vector<std::pair<int, int>> queue;
        for (int c : src->children(0)) queue.push_back({c, t.add_child(0, src->coeff(c))});
        for (std::size_t k = 0; k < queue.size(); ++k) {
            auto [u, tu] = queue[k];
            for (int c : src->children(u)) queue.push_back({c, t.add_child(tu, src->coeff(c))});
        }
    }
    if (a.horizon && b.horizon && *a.horizon == *b.horizon) t.horizon = a.horizon;
    return t;
}

UnlabeledTree star_tree(int k) {
    UnlabeledTree t;
    for (int j = 0; j < k; ++j) t.add_child(0);
    return t;
}

UnlabeledTree path_tree(int k) {
    UnlabeledTree t;
    int v = 0;
    for (int j = 0; j < k; ++j) v = t.add_child(v);
    return t;
}

bool is_non_backtracking(const LabeledTree& t) {
    for (int v = 1; v < t.base.size(); ++v) {
        int p = t.base.parent(v);
        if (p > 0 && t.label(t.base.parent(p)) == t.label(v)) return false;
    }
    return true;
}

bool has_self_loop(const LabeledTree& t) {
    for (int v = 1; v < t.base.size(); ++v)
        if (t.label(t.base.parent(v)) == t.label(v)) return true;
    return false;
}

}  // namespace ampwick
