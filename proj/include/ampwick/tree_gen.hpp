#pragma once

#include <string>
#include <vector>

#include "ampwick/random.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

// Canonical strings of all unordered rooted trees with exactly `edges` edges
// and every out-degree <= max_degree (root included); max_degree < 0 means
// unbounded.
std::vector<std::string> canonical_trees(int edges, int max_degree = -1);
std::vector<std::string> canonical_trees_up_to(int max_edges, int max_degree = -1);

// Random recursive tree: vertex k attaches to a uniform earlier vertex.
UnlabeledTree random_tree(int edges, Rng& rng);

// Random labeled tree with at most max_edges edges, root label 1, labels in
// [1, K] for a random K in [2, 5]; rejection-sampled until non-backtracking,
// free of self-loop edges, and passing the edge-pair filter.
LabeledTree random_valid_labeled_tree(int max_edges, Rng& rng);

}  // namespace ampwick
