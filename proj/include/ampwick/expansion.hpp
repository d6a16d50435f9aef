#pragma once

#include <cstddef>
#include <vector>

#include "ampwick/polynomial.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

constexpr std::size_t kDefaultBudget = 1'000'000;

// One unordered monomial-tree shape from the expansion of (x_i^t)^m.
// multiplicity counts the ordered monomial choices that produce the shape;
// weight = multiplicity * prod_v c_v.
struct WeightedTree {
    UnlabeledTree tree;
    Integer multiplicity;
    RootRational weight;
};

// Shapes come out in canonical-string order.  F must hold f_0..f_{t-1} with
// f_0 the identity.  Vertex coefficients are set from the chosen monomials
// and the tree horizon is t.
std::vector<WeightedTree> expand_iterate(const std::vector<Polynomial>& F, int t, int m,
                                         std::size_t budget = kDefaultBudget);

}  // namespace ampwick
