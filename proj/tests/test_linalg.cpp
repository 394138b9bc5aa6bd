#include <doctest.h>

#include <tqschur/linalg.hpp>

using namespace tqs;

namespace {

AlgebraElement basis_at(int pick, int n, int r) {
    auto all = enumerate_basis(n, r);
    return AlgebraElement::basis(all[static_cast<size_t>(pick)], r);
}

}  // namespace

TEST_CASE("insert grows only on independent vectors") {
    SpanBasis s;
    AlgebraElement a = basis_at(0, 2, 1), b = basis_at(1, 2, 1);
    CHECK(s.insert(a));
    CHECK(s.dim() == 1);
    CHECK_FALSE(s.insert(a.scaled(RatScalar::v_pow(3))));
    CHECK(s.insert(a + b.scaled(RatScalar::v_pow(-1))));
    CHECK(s.dim() == 2);
    CHECK_FALSE(s.insert(b));
    CHECK_FALSE(s.insert(AlgebraElement(2, 1)));
    CHECK(s.contains(a - b));
    CHECK(s.reduce(basis_at(2, 2, 1)).coeff(enumerate_basis(2, 1)[2]) ==
          RatScalar::one());
}

TEST_CASE("echelon form is reduced") {
    SpanBasis s;
    AlgebraElement a = basis_at(0, 2, 1), b = basis_at(1, 2, 1);
    s.insert(a + b);
    s.insert(b.scaled(RatScalar::v_pow(2)));
    REQUIRE(s.dim() == 2);
    // pivots are normalized to 1 and cleared from the other vectors
    CHECK(s.vectors()[0] == a);
    CHECK(s.vectors()[1] == b);
}

TEST_CASE("coordinates reproduce the vector") {
    SpanBasis s;
    AlgebraElement a = basis_at(0, 2, 2), b = basis_at(3, 2, 2), c = basis_at(5, 2, 2);
    s.insert(a + b);
    s.insert(b - c);
    AlgebraElement x = (a + b).scaled(RatScalar::v_pow(1)) +
                       (b - c).scaled(RatScalar::from_int(-3));
    auto co = s.coords(x);
    REQUIRE(co.has_value());
    AlgebraElement back(2, 2);
    for (size_t i = 0; i < co->size(); ++i) back += s.vectors()[i].scaled((*co)[i]);
    CHECK(back == x);
    CHECK_FALSE(s.coords(c).has_value());
}

TEST_CASE("span_of and direct sums") {
    AlgebraElement a = basis_at(0, 2, 1), b = basis_at(1, 2, 1), c = basis_at(2, 2, 1);
    SpanBasis s = span_of({a, b, a + b});
    CHECK(s.dim() == 2);

    SpanBasis p1 = span_of({a}), p2 = span_of({b, c}), p3 = span_of({a + b});
    CHECK(certify_direct_sum({p1, p2}));
    CHECK_FALSE(certify_direct_sum({p1, p2, p3}));
    CHECK(certify_direct_sum({}));
}
