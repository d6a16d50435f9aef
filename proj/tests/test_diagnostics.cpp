#include "doctest.h"

#include <algorithm>

#include "ampwick/diagnostics.hpp"
#include "ampwick/partitions.hpp"
#include "ampwick/tree_gen.hpp"
#include "ampwick/tree_io.hpp"
#include "ampwick/wick.hpp"

using namespace ampwick;

namespace {

LabeledTree labeled(const char* s) { return to_labeled(parse_tree(s)); }

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("standard ordering") {
    CHECK(standard_ordering(star_tree(1)) == std::vector<int>{1});
    auto t = parse_tree("(root (() () ()))").tree;
    CHECK(standard_ordering(t) == std::vector<int>{2, 3, 4, 1});
    auto u = parse_tree("(root (()) (()))").tree;
    CHECK(standard_ordering(u) == std::vector<int>{2, 4, 1, 3});
}

TEST_CASE("edge classes") {
    using E = EdgeClass;
    CHECK(classify_edges(labeled("(root i=1 (l=2) (l=2))")) == std::vector<E>{E::T1, E::T2});
    CHECK(classify_edges(labeled("(root i=1 (l=2) (l=2) (l=2))")) == std::vector<E>{E::T1, E::T2, E::T3});
    CHECK(classify_edges(labeled("(root i=1 (l=2) (l=3))")) == std::vector<E>{E::T1, E::T1});
}

TEST_CASE("excess and filter") {
    CHECK(excess(labeled("(root i=1 (l=2) (l=2))")) == 0);
    CHECK(excess(labeled("(root i=1 (l=2) (l=2) (l=2))")) == Rational(1, 2));
    CHECK(excess(labeled("(root i=1 (l=2 (l=3) (l=4) (l=5)))")) == -2);
    CHECK(assumption_filter(labeled("(root i=1 (l=2) (l=2))")));
    CHECK_FALSE(assumption_filter(labeled("(root i=1 (l=2) (l=3))")));
    CHECK_FALSE(assumption_filter(labeled("(root i=1 (l=2 (l=3)))")));
}

TEST_CASE("bad subtree of a star with a repeated pair") {
    auto t = labeled("(root i=1 (l=2) (l=2) (l=2))");
    auto d = diagnose(t);
    CHECK(sorted(d.bad.bad_vertices) == std::vector<int>{0, 1, 2, 3});
    CHECK(sorted(d.bad.branch_vertices) == std::vector<int>{0, 1, 2, 3});
    CHECK(d.bad.boundary_vertices.empty());
}

TEST_CASE("bad subtree of the two-level example") {
    // Preorder ids: a1 = 1, a11 = 2, a12 = 6, a13 = 8, a14 = 12, a2 = 14, a21 = 15.
    auto t = labeled(
        "(root i=3"
        " (l=2 (l=4 (l=9) (l=10) (l=10)) (l=4 (l=12)) (l=6 (l=13) (l=13) (l=15)) (l=6 (l=15)))"
        " (l=2 (l=4 (l=12) (l=9))))");
    auto d = diagnose(t);
    CHECK(d.excess == Rational(1, 2));
    CHECK(d.passes_filter);
    CHECK(d.count(EdgeClass::T3) == 1);
    CHECK(sorted(d.bad.bad_vertices) == std::vector<int>{1, 2, 6, 14, 15});
    CHECK(sorted(d.bad.branch_vertices) == std::vector<int>{0, 1, 2, 6, 14, 15});
    for (int v : d.bad.boundary_vertices) {
        CHECK(std::find(d.bad.bad_vertices.begin(), d.bad.bad_vertices.end(), v) == d.bad.bad_vertices.end());
        int same = 0;
        for (int w : d.bad.boundary_vertices) same += t.label(w) == t.label(v);
        CHECK(same >= 2);
    }
    CHECK(std::find(d.bad.boundary_vertices.begin(), d.bad.boundary_vertices.end(), 8) !=
          d.bad.boundary_vertices.end());
}

TEST_CASE("Delta = 0 trees have no bad structure") {
    auto t = labeled("(root i=1 (l=2 (l=3) (l=3)) (l=2 (l=4) (l=4)))");
    auto d = diagnose(t);
    CHECK(d.excess == 0);
    CHECK(d.bad.empty());
    CHECK(d.bad_pairs == 0);
}

TEST_CASE("random trees satisfy the excess bounds") {
    Rng rng(11);
    for (int k = 0; k < 500; ++k) {
        auto t = random_valid_labeled_tree(10, rng);
        auto d = diagnose(t);
        CHECK(sgn(d.excess) >= 0);
        CHECK(d.count(EdgeClass::T3) <= 2 * d.excess);
        CHECK(d.root_extra <= 2 * d.excess);
    }
}

TEST_CASE("Delta = 0 class counters agree") {
    WickCache cache;
    for (const auto& s : canonical_trees_up_to(7)) {
        auto t = UnlabeledTree::from_canonical(s);
        Integer explicit_count = count_delta_zero_classes(t);
        CHECK(count_delta_zero_classes_dp(t) == explicit_count);
        CHECK(explicit_count == wick_count(s, &cache));
    }
    long seen = 0;
    enumerate_delta_zero_classes(star_tree(4), [&](const IsomorphismClass& c) {
        CHECK(excess(c) == 0);
        ++seen;
    });
    CHECK(seen == 3);
}
