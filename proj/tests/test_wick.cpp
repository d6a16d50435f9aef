#include "doctest.h"

#include "ampwick/errors.hpp"
#include "ampwick/tree_gen.hpp"
#include "ampwick/wick.hpp"

using namespace ampwick;

namespace {

UnlabeledTree T(const char* s) { return UnlabeledTree::from_canonical(s); }

const char* kPairA = "((()()()())(()))";
const char* kPairB = "((()())(()()(()())))";

}  // namespace

TEST_CASE("wick_count") {
    CHECK(wick_count(T("()")) == 1);
    CHECK(wick_count(T("(())")) == 0);
    CHECK(wick_count(T("((()()())(()()()))")) == 15);
    CHECK(wick_count(glue(T(kPairA), T(kPairB))) == 45);
    CHECK(wick_count(T("(()()()())")) == 3);
}

TEST_CASE("wick_multi") {
    auto e = star_tree(1);
    CHECK(wick_multi({e, e}) == 1);
    CHECK(wick_multi({T(kPairA), T(kPairB)}) == 45);
    CHECK(wick_multi({e, e, e}) == 0);
}

TEST_CASE("shared cache gives the same answers") {
    WickCache cache;
    for (const auto& s : canonical_trees_up_to(8)) CHECK(wick_count(s, &cache) == wick_count(s));
    CHECK(cache.size() > 0);
}

TEST_CASE("star product") {
    auto e = star_tree(1);
    AlgebraElement a = AlgebraElement::basis(e, 2), b = AlgebraElement::basis(e, 3);
    AlgebraElement p = star(a, b);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->first == star_tree(2).canonical());
    CHECK(p.terms().begin()->second == 6);
    AlgebraElement c(2);
    c.add(e, 1);
    CHECK(star(a, c).is_zero());
}

TEST_CASE("inner product") {
    auto e = star_tree(1);
    CHECK(inner(AlgebraElement::basis(e), AlgebraElement::basis(e)) == 1);
    AlgebraElement lin = AlgebraElement::basis(T("((()))"));
    AlgebraElement mix = lin + AlgebraElement::basis(T("((()()()))"));
    CHECK(inner(mix, lin) == 4);
}

TEST_CASE("isserlis") {
    CHECK(isserlis({{1, 2}, {2, 5}}) == 2);
    CHECK(isserlis({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 0);
    std::vector<std::vector<Rational>> ones(4, std::vector<Rational>(4, 1));
    CHECK(isserlis(ones) == 3);
}

TEST_CASE("se_functional") {
    CHECK(se_functional(T("()")) == 1);
    CHECK(se_functional(T("(()())")) == 1);
    CHECK(se_functional(T("((()()())(()()()))")) == 15);
    CHECK(se_functional(glue(T(kPairA), T(kPairB))) == 45);
    CHECK_THROWS_AS(se_functional(path_tree(6), 3), RecursionDepthExceeded);
}
