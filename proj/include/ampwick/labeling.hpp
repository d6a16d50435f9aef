#pragma once

#include <functional>
#include <vector>

#include "ampwick/matrix.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

// Streams every non-backtracking labeling of the non-root vertices by [N]
// (root fixed), lexicographic over the BFS vertex order.  Labelings with a
// child equal to its parent are emitted; they are valued 0 by the zero diagonal.
void enumerate_labelings(const UnlabeledTree& t, int N, int root_label,
                         const std::function<void(const LabeledTree&)>& visit);

std::vector<LabeledTree> labelings(const UnlabeledTree& t, int N, int root_label);

// prod_v c_v * prod_edges A_{l(u) l(v)} * prod_{initial leaves} x0_{l}
double val(const LabeledTree& t, const Matrix& A, const std::vector<double>& x0);
double val_forest(const std::vector<LabeledTree>& forest, const Matrix& A, const std::vector<double>& x0);

// Cuts t along a root-containing subtree S (in_s closed under parents).  The
// first piece is S itself; each edge leaving S gives a piece rooted at its
// S endpoint.  Val of t is the product over the pieces.
std::vector<LabeledTree> cut_forest(const LabeledTree& t, const std::vector<bool>& in_s);

// Sum of val over all non-backtracking labelings with the given root label,
// by dynamic programming over the tree in O(N^2 |V|).
double labeled_sum(const UnlabeledTree& t, const Matrix& A, const std::vector<double>& x0, int root_label);

}  // namespace ampwick
