#include "doctest.h"

#include <cmath>

#include "ampwick/spiked.hpp"
#include "ampwick/tree_gen.hpp"
#include "ampwick/tree_io.hpp"
#include "ampwick/wick.hpp"

using namespace ampwick;

namespace {

SpikeConfig random_spike(double lambda, int N, unsigned seed) {
    Rng rng(seed);
    std::normal_distribution<double> g;
    SpikeConfig c;
    c.lambda = lambda;
    c.v_star.resize(static_cast<std::size_t>(N));
    double s = 0;
    for (auto& v : c.v_star) {
        v = g(rng);
        s += v * v;
    }
    for (auto& v : c.v_star) v *= std::sqrt(N / s);
    return c;
}

}  // namespace

TEST_CASE("base cases") {
    ColoredTree leaf = all_blue(UnlabeledTree());
    CHECK(spiked_wick(leaf, SpikeConfig::ones(2.0, 5), 1) == 1.0);
    ColoredTree y = colored(parse_tree("(root (color=y))"));
    CHECK(spiked_wick(y, SpikeConfig::ones(1.5, 100), 1) == 1.5);
    CHECK(y.yellow_edges() == 1);
}

TEST_CASE("all blue reduces to wick_count") {
    auto cfg = random_spike(0.7, 9, 1);
    for (const auto& s : canonical_trees_up_to(6)) {
        auto t = UnlabeledTree::from_canonical(s);
        CHECK(spiked_wick(all_blue(t), cfg, 3) == doctest::Approx(wick_count(t).get_d()));
    }
}

TEST_CASE("closed form agrees with the direct recursion") {
    auto cfg = random_spike(1.3, 6, 2);
    for (const char* s : {"(root (color=y) (color=y))", "(root (color=y (color=y)) (color=b) (color=b))",
                          "(root (color=b (color=y) (color=y)) (color=b (color=b)) (color=y ()))",
                          "(root (color=y (() ())) (color=b (color=y)) (color=b (color=y)))"}) {
        ColoredTree t = colored(parse_tree(s));
        for (int i = 1; i <= 6; ++i)
            CHECK(spiked_wick(t, cfg, i) == doctest::Approx(spiked_wick_direct(t, cfg, i)).epsilon(1e-10));
    }
}

TEST_CASE("homogeneity in lambda for yellow root leaves") {
    ColoredTree t = colored(parse_tree("(root (color=y) (color=y) (color=y) (color=b) (color=b))"));
    auto a = random_spike(1.0, 7, 3), b = a;
    b.lambda = 2.5;
    CHECK(spiked_wick(t, b, 2) == doctest::Approx(std::pow(2.5, 3) * spiked_wick(t, a, 2)));
}

TEST_CASE("v_star normalization is checked") {
    SpikeConfig c;
    c.v_star = {1.0, 2.0};
    CHECK_THROWS(c.validate());
}
