#include "tqschur/laurent.hpp"

#include <doctest.h>

using namespace tqs;

namespace {

LaurentPoly V(int k) { return LaurentPoly::v_pow(k); }

// independent q-Pascal oracle for the Gaussian binomials:
// C(m, k) = v^k C(m-1, k) + v^{k-m} C(m-1, k-1)
LaurentPoly pascal(int m, int k) {
    if (k < 0 || k > m) return LaurentPoly();
    if (k == 0 || k == m) return LaurentPoly::one();
    return pascal(m - 1, k).shifted(k) + pascal(m - 1, k - 1).shifted(k - m);
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly a = V(2) + V(-1);
    LaurentPoly b = V(1) - V(0);
    CHECK((a * b) == V(3) - V(2) + V(0) - V(-1));
    CHECK((a + b - a) == b);
    CHECK((a - a).is_zero());
    CHECK(a.pow(0).is_one());
    CHECK(a.pow(2) == a * a);
    CHECK(a.min_exp() == -1);
    CHECK(a.max_exp() == 2);
}

TEST_CASE("quantum integers and factorials") {
    CHECK(qint(0).is_one());
    CHECK(qint(1).is_one());
    CHECK(qint(2) == V(1) + V(-1));
    CHECK(qint(3) == V(2) + V(0) + V(-2));
    CHECK(qfactorial(3) == qint(3) * qint(2));
    // [t] (v - v^-1) = v^t - v^-t
    for (unsigned t = 1; t <= 6; ++t)
        CHECK(qint(t) * (V(1) - V(-1)) == V(static_cast<int>(t)) - V(-static_cast<int>(t)));
}

TEST_CASE("geometric brackets") {
    CHECK(bracket_geom(0, 2).is_zero());
    CHECK(bracket_geom(1, 2).is_one());
    CHECK(bracket_geom(2, 2) == V(0) + V(2));
    CHECK(bracket_geom(3, -2) == V(0) + V(-2) + V(-4));
    // [[k]]_x (x - 1) = x^k - 1 at x = v^2
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(bracket_geom(k, 2) * (V(2) - V(0)) == V(2 * static_cast<int>(k)) - V(0));
}

TEST_CASE("exact division") {
    LaurentPoly a = V(3) + V(1) - V(0) + V(-2);
    LaurentPoly b = V(2) - V(-1);
    CHECK(div_exact(a * b, b) == a);
    CHECK(div_exact(a * a * b, a) == a * b);
    CHECK_THROWS_AS(div_exact(V(1) + V(0), V(1) - V(-1)), std::domain_error);
}

TEST_CASE("rational scalar canonical form") {
    RatScalar x(V(2) - V(-2), V(1) - V(-1));  // = v + v^-1 exactly
    CHECK(x == RatScalar(qint(2)));
    CHECK(x.is_laurent());
    RatScalar y(V(1), V(1) + V(-1));
    CHECK_FALSE(y.is_laurent());
    CHECK(y * y.inverse() == RatScalar::one());
    CHECK((y + y) == y * RatScalar::from_int(2));
    CHECK((y - y).is_zero());
    // equivalent fractions canonicalize structurally
    RatScalar z((V(1)) * (V(3) + V(0)), (V(1) + V(-1)) * (V(3) + V(0)));
    CHECK(z == y);
    CHECK(RatScalar(V(0), V(0) + V(0)).str() == "1*v^0 / 2*v^0");
}

TEST_CASE("gaussian binomials against the q-Pascal oracle") {
    for (int p = 1; p <= 12; ++p)
        for (int u = 0; u < p; ++u)
            CHECK(gauss_binom(static_cast<unsigned>(p), static_cast<unsigned>(u)) ==
                  pascal(p - 1, u));
    for (int p = 1; p <= 6; ++p)
        for (int u = p; u <= 8; ++u)
            CHECK(gauss_binom(static_cast<unsigned>(p), static_cast<unsigned>(u)).is_zero());
}

TEST_CASE("canonical text rendering") {
    CHECK(LaurentPoly::one().str() == "1*v^0");
    CHECK(qint(2).str() == "1*v^1 + 1*v^-1");
    RatScalar y(V(1), V(1) + V(-1));
    CHECK(y.str() == "1*v^2 / 1*v^2 + 1*v^0");
}
