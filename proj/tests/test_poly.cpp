#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "stairtab/poly.hpp"

using namespace stairtab;

namespace {

MultiPoly x(int m, int i) { return MultiPoly::variable(m, i); }

}  // namespace

TEST_CASE("product of sum and difference") {
    MultiPoly lhs = (x(2, 1) + x(2, 2)) * (x(2, 1) - x(2, 2));
    MultiPoly expected(2);
    expected.add_term(ExponentKey{{2, 0}, 0, 0}, 1);
    expected.add_term(ExponentKey{{0, 2}, 0, 0}, -1);
    CHECK(lhs == expected);
}

TEST_CASE("substitution by monomials") {
    MultiPoly p = x(2, 1) * x(2, 2);
    std::vector<MultiPoly::VarSub> subs{
        {1, {1, 0}, 1, 0},  // x1 -> t x1
        {1, {0, 1}, 0, 0},  // x2 -> x2
    };
    MultiPoly expected(2);
    expected.add_term(ExponentKey{{1, 1}, 1, 0}, 1);
    CHECK(p.substituted(2, subs) == expected);
}

TEST_CASE("additive inverse gives the empty term map") {
    MultiPoly p = x(3, 1) * x(3, 2) + MultiPoly::constant(3, 7);
    CHECK((p + p.scaled(-1)).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("mixed variable counts are rejected") {
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 1) * x(3, 1), std::invalid_argument);
    MultiPoly p(2);
    CHECK_THROWS_AS(p.add_term(ExponentKey{{1}, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("coefficient overflow is detected, never wrapped") {
    long long big = std::numeric_limits<long long>::max();
    MultiPoly p = MultiPoly::constant(1, big);
    CHECK_THROWS_AS(p + MultiPoly::constant(1, 1), std::overflow_error);
    CHECK_THROWS_AS(p * MultiPoly::constant(1, 2), std::overflow_error);
    CHECK_THROWS_AS(p.scaled(-2), std::overflow_error);
}

TEST_CASE("t and r manipulations") {
    MultiPoly p(1);
    p.add_term(ExponentKey{{2}, 1, 0}, 3);  // 3 t x1^2
    p.add_term(ExponentKey{{0}, 0, 2}, 5);  // 5 r^2
    MultiPoly swapped(1);
    swapped.add_term(ExponentKey{{2}, 0, 1}, 3);
    swapped.add_term(ExponentKey{{0}, 2, 0}, 5);
    CHECK(p.swapped_tr() == swapped);
    MultiPoly ones(1);
    ones.add_term(ExponentKey{{2}, 0, 0}, 3);
    ones.add_term(ExponentKey{{0}, 0, 0}, 5);
    CHECK(p.at_t_r_one() == ones);
}

TEST_CASE("x swap and zero handling") {
    MultiPoly p = x(2, 1);
    CHECK(p.with_x_swapped(1, 2) == x(2, 2));
    CHECK(MultiPoly(4).is_zero());
    MultiPoly q(1);
    q.add_term(ExponentKey{{1}, 0, 0}, 0);
    CHECK(q.is_zero());
}
