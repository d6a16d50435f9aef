#pragma once

#include <functional>
#include <vector>

#include "ampwick/rational.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

// Vertex partition of a tree.  block[v] is the block of vertex v; block 0 is
// the root's block, so a vertex in block 0 is root-labeled.
struct IsomorphismClass {
    UnlabeledTree base;
    std::vector<int> block;

    int block_count() const;
};

// Block b gets label b + 1.
LabeledTree induced_labeling(const IsomorphismClass& c);
Rational excess(const IsomorphismClass& c);

// Every partition whose induced labelings are non-backtracking, blocks
// numbered by first appearance in BFS order.  Optionally capped in block
// count and restricted to partitions without a self-loop edge.
void enumerate_classes(const UnlabeledTree& t, const std::function<void(const IsomorphismClass&)>& visit,
                       int max_blocks = -1, bool skip_self_loops = false);

// Classes with excess 0 that pass the edge-pair filter and carry no
// self-loop edge, enumerated explicitly with pruning.
void enumerate_delta_zero_classes(const UnlabeledTree& t,
                                  const std::function<void(const IsomorphismClass&)>& visit);
Integer count_delta_zero_classes(const UnlabeledTree& t);

// Same count by a forward dynamic program over the BFS order whose state is
// the forest of label pairs used once, restricted to blocks still reachable
// from unprocessed vertices.
Integer count_delta_zero_classes_dp(const UnlabeledTree& t);

}  // namespace ampwick
