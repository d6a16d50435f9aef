#include "doctest.h"

#include <set>

#include "ampwick/errors.hpp"
#include "ampwick/expansion.hpp"
#include "ampwick/labeling.hpp"
#include "ampwick/matrix.hpp"
#include "ampwick/tree.hpp"
#include "ampwick/tree_gen.hpp"
#include "ampwick/tree_io.hpp"

using namespace ampwick;

TEST_CASE("canonical form ignores child order") {
    auto a = parse_tree("(root (()) () (()()))").tree;
    auto b = parse_tree("(root (()()) () (()))").tree;
    CHECK(a.canonical() == b.canonical());
    CHECK(UnlabeledTree::from_canonical(a.canonical()).canonical() == a.canonical());
    CHECK(a.size() == 7);
    CHECK(a.height() == 2);
}

TEST_CASE("glue merges roots") {
    auto e = star_tree(1);
    auto g = glue(e, e);
    CHECK(g.canonical() == star_tree(2).canonical());
    CHECK(path_tree(3).height() == 3);
}

TEST_CASE("rooted tree counts") {
    // Unordered rooted trees with n vertices: 1, 1, 2, 4, 9, 20, 48, 115, 286, 719.
    const int expect[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
    for (int e = 0; e < 10; ++e) CHECK(canonical_trees(e).size() == static_cast<std::size_t>(expect[e]));
    // Out-degree at most 2: 1, 1, 2, 3, 6, 11, 23.
    const int binary[] = {1, 1, 2, 3, 6, 11, 23};
    for (int e = 0; e < 7; ++e) CHECK(canonical_trees(e, 2).size() == static_cast<std::size_t>(binary[e]));
    auto all = canonical_trees_up_to(6);
    CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("expansion of monomial trees") {
    auto z = Polynomial::identity();
    SUBCASE("cubic") {
        auto trees = expand_iterate({z, Polynomial::monomial(3)}, 2, 1);
        REQUIRE(trees.size() == 1);
        CHECK(trees[0].tree.canonical() == "((()()()))");
        CHECK(trees[0].weight.exact() == 1);
    }
    SUBCASE("mixed quadratic") {
        auto trees = expand_iterate({z, Polynomial({0, 1, 1})}, 2, 1);
        REQUIRE(trees.size() == 2);
        std::set<std::string> shapes;
        for (const auto& w : trees) {
            shapes.insert(w.tree.canonical());
            CHECK(w.weight.exact() == 1);
        }
        CHECK(shapes == std::set<std::string>{"((()()))", "((()))"});
    }
    SUBCASE("linear power") {
        auto trees = expand_iterate({z}, 1, 3);
        REQUIRE(trees.size() == 1);
        CHECK(trees[0].tree.canonical() == "(()()())");
    }
    SUBCASE("ordered choices become multiplicity") {
        auto trees = expand_iterate({z, Polynomial({0, 1, 1})}, 2, 2);
        CHECK(trees.size() == 3);
        Integer total = 0;
        for (const auto& w : trees) total += w.multiplicity;
        CHECK(total == 4);
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(expand_iterate({z, Polynomial({1, 1, 1, 1}), Polynomial({1, 1, 1, 1})}, 3, 4, 100),
                        BudgetExceeded);
    }
}

TEST_CASE("Val") {
    Matrix A(2);
    A(0, 1) = A(1, 0) = 0.5;
    LabeledTree e{star_tree(1), {1, 2}};
    CHECK(val(e, A, {1.0, 1.0}) == 0.5);

    Matrix B(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) B(i, j) = 0.3;
    LabeledTree s{parse_tree("(root (()()()))").tree, {1, 2, 3, 4, 1}};
    CHECK(val(s, B, {1, 1, 1, 1}) == doctest::Approx(0.3 * 0.3 * 0.3 * 0.3));

    auto z = parse_tree("(root (c=0))").tree;
    CHECK(val(LabeledTree{z, {1, 2}}, A, {1.0, 1.0}) == 0.0);
    CHECK_THROWS_AS(val(LabeledTree{star_tree(1), {1, 3}}, A, {1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("labeling enumeration") {
    CHECK(labelings(star_tree(1), 3, 1).size() == 3);
    CHECK(labelings(path_tree(2), 2, 1).size() == 2);
    CHECK(labelings(star_tree(2), 2, 1).size() == 4);
    for (const auto& l : labelings(path_tree(3), 3, 1)) CHECK(is_non_backtracking(l));
}

TEST_CASE("labeled_sum matches explicit enumeration") {
    Rng rng(7);
    for (const char* s : {"(()())", "((()())())", "((()()())(()))", "(((())))"}) {
        auto t = UnlabeledTree::from_canonical(s);
        for (int N : {3, 4}) {
            Matrix A(N);
            std::normal_distribution<double> g(0.0, 1.0);
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) A(i, j) = A(j, i) = g(rng);
            std::vector<double> x0(static_cast<std::size_t>(N));
            for (auto& x : x0) x = g(rng);
            double brute = 0.0;
            enumerate_labelings(t, N, 2, [&](const LabeledTree& l) { brute += val(l, A, x0); });
            CHECK(labeled_sum(t, A, x0, 2) == doctest::Approx(brute).epsilon(1e-12));
        }
    }
}

TEST_CASE("tree file round trip") {
    auto p = parse_tree("# comment\n(root i=3 (l=2 color=y (l=4)) (l=2 c=1/2 r=2))");
    CHECK(p.tree.size() == 4);
    CHECK(p.labels[0] == 3);
    CHECK(p.colors[1] == EdgeColor::Yellow);
    CHECK(p.tree.coeff(3).square() == Rational(1, 2));
    LabeledTree t = to_labeled(p);
    auto q = parse_tree(format_tree(t.base, &t.labels, &p.colors));
    CHECK(q.tree.canonical() == p.tree.canonical());
    CHECK(to_labeled(q).labels == t.labels);
    CHECK_THROWS_AS(parse_tree("(root (l=2)"), ParseError);
    CHECK_THROWS_AS(parse_tree("(root (x=2))"), ParseError);
}
