#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ampwick/rational.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

enum class EdgeClass { T1, T2, T3 };

const char* to_string(EdgeClass c);

// Edges are identified by their child vertex.  Deepest edges first, then
// generation by generation towards the root; within a generation by parent
// position in BFS order, then child order.
std::vector<int> standard_ordering(const UnlabeledTree& t);

// Classes listed in standard_ordering order.  The walk visits the generations
// root-first: T1 when the child label is new (the root label starts out
// seen), T2 for the second occurrence of a label pair whose first was T1,
// T3 otherwise.
std::vector<EdgeClass> classify_edges(const LabeledTree& t);

Rational excess(const LabeledTree& t);

bool assumption_filter(const LabeledTree& t);

using LabelPair = std::pair<int, int>;  // first <= second

struct BadSubtree {
    std::vector<int> bad_vertices;
    std::vector<int> branch_vertices;
    std::vector<int> boundary_vertices;
    std::vector<std::pair<int, int>> branch_edges;    // (parent, child)
    std::vector<std::pair<int, int>> boundary_edges;  // (parent, child)
    std::vector<std::pair<int, int>> boundary_pairs;  // boundary vertices sharing a label
    bool empty() const { return branch_vertices.empty(); }
};

BadSubtree bad_subtree(const LabeledTree& t);

struct TreeDiagnostics {
    Rational excess;
    std::vector<int> edge_order;
    std::vector<EdgeClass> edge_classes;
    std::map<int, int> label_multiplicities;          // N_i, all vertices
    std::map<LabelPair, int> edge_multiplicities;     // b_ij
    int root_extra = 0;                               // M_r
    int bad_pairs = 0;
    bool passes_filter = false;
    BadSubtree bad;

    int count(EdgeClass c) const;
};

TreeDiagnostics diagnose(const LabeledTree& t);

// T1/T2 pairs whose parent vertices sit in different generations.
int count_bad_pairs(const LabeledTree& t);

}  // namespace ampwick
