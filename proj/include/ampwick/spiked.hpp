#pragma once

#include <vector>

#include "ampwick/tree.hpp"
#include "ampwick/tree_io.hpp"

namespace ampwick {

struct ColoredTree {
    UnlabeledTree base;
    std::vector<EdgeColor> color;  // color of the edge above each vertex; color[0] unused
    int root_label = 1;

    int yellow_edges() const;
};

ColoredTree colored(const ParsedTree& p);
ColoredTree all_blue(const UnlabeledTree& t, int root_label = 1);

struct SpikeConfig {
    double lambda = 1.0;
    std::vector<double> v_star;
    double mu1 = 0.0;     // reported only
    double sigma0 = 0.0;  // reported only

    int N() const { return static_cast<int>(v_star.size()); }
    // Throws unless ||v_star||^2 = N to relative tolerance 1e-12.
    void validate() const;
    static SpikeConfig ones(double lambda, int N);
};

// Wick_S with the root labeled root_index (1-based).  Blue pairs are
// evaluated as the average over the label of the glued root; yellow children
// contribute (lambda/N) sum_j v_i v_j Wick_S(T_k rooted at j).
double spiked_wick(const ColoredTree& t, const SpikeConfig& cfg, int root_index);

// Same recursion evaluated with explicit sums over every label; O(N) per
// subtree and used to check the closed form above.
double spiked_wick_direct(const ColoredTree& t, const SpikeConfig& cfg, int root_index);

}  // namespace ampwick
