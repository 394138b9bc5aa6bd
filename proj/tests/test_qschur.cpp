#include <doctest.h>

#include <tqschur/qschur.hpp>

#include <stdexcept>

using namespace tqs;

namespace {

SuperMatrixIndex row1(int n, std::vector<int> even, std::vector<int> odd) {
    SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
    for (int i = 0; i < n; ++i) {
        a.e(0, i) = even[static_cast<size_t>(i)];
        a.o(0, i) = odd[static_cast<size_t>(i)];
    }
    return a;
}

}  // namespace

TEST_CASE("generator names render and classify") {
    CHECK(gen_K(2).str() == "K2");
    CHECK(gen_Kinv(1).str() == "K1^-1");
    CHECK(gen_Kbar(2).str() == "Kbar2");
    CHECK(gen_Ebar(1).str() == "Ebar1");
    CHECK_FALSE(gen_E(1).is_odd());
    CHECK(gen_Fbar(1).is_odd());
}

TEST_CASE("algebra element arithmetic") {
    SuperMatrixIndex a = row1(2, {2, 0}, {0, 0});
    AlgebraElement x = AlgebraElement::basis(a, 2);
    CHECK(x.coeff(a) == RatScalar::one());
    AlgebraElement y = x.scaled(RatScalar::v_pow(1));
    y -= x.scaled(RatScalar::v_pow(1));
    CHECK(y.is_zero());
    CHECK(x.leading_index() == a);
}

TEST_CASE("K acts by the row-sum power of v") {
    // ro(A) = (2,0) gives eigenvalue v^2 for K_1 and v^0 for K_2
    for (auto& a : enumerate_basis(2, 2)) {
        if (a.row_sums() != Composition{2, 0}) continue;
        AlgebraElement x = AlgebraElement::basis(a, 2);
        CHECK(act_generator(gen_K(1), x) == x.scaled(RatScalar::v_pow(2)));
        CHECK(act_generator(gen_K(2), x) == x);
        CHECK(act_generator(gen_Kinv(1), x) == x.scaled(RatScalar::v_pow(-2)));
    }
}

TEST_CASE("generators shift weights by simple roots") {
    for (auto& a : enumerate_basis(2, 2)) {
        Composition lam = a.row_sums();
        AlgebraElement x = AlgebraElement::basis(a, 2);
        AlgebraElement ex = act_generator(gen_E(1), x);
        for (auto& w : weights_of(ex)) {
            CHECK(w[0] == lam[0] + 1);
            CHECK(w[1] == lam[1] - 1);
        }
        AlgebraElement fx = act_generator(gen_F(1), x);
        for (auto& w : weights_of(fx)) {
            CHECK(w[0] == lam[0] - 1);
            CHECK(w[1] == lam[1] + 1);
        }
        for (auto& g : {gen_Kbar(1), gen_Kbar(2)})
            for (auto& w : weights_of(act_generator(g, x))) CHECK(w == lam);
    }
}

TEST_CASE("acting on the unit recovers the generator image") {
    // left multiplication by eta(g) applied to 1_r is eta(g) itself
    for (int r : {1, 2, 3}) {
        AlgebraElement unit = unit_element(2, r);
        for (auto& g : {gen_K(1), gen_Kinv(1), gen_E(1), gen_F(1), gen_Kbar(2),
                        gen_Kbar(1), gen_Ebar(1), gen_Fbar(1)})
            CHECK(act_generator(g, unit) == generator_image(g, 2, r));
    }
}

TEST_CASE("long elements") {
    int n = 2, r = 2;
    // |A*| > r gives zero
    SuperMatrixIndex big = SuperMatrixIndex::zeros(n);
    big.e(0, 1) = 3;
    CHECK(long_element(big, {0, 0}, r).is_zero());
    // a nonzero even diagonal is rejected
    SuperMatrixIndex diag = SuperMatrixIndex::zeros(n);
    diag.e(0, 0) = 1;
    CHECK_THROWS_AS(long_element(diag, {0, 0}, r), std::invalid_argument);
    // the zero matrix with j = 0 is the unit
    CHECK(long_element(SuperMatrixIndex::zeros(n), {0, 0}, r) == unit_element(n, r));
}

TEST_CASE("kappa recovers basis idempotent-like elements") {
    for (auto nr : {std::pair{2, 3}, std::pair{3, 3}}) {
        auto [n, r] = nr;
        // kappa(0) = 1_r
        CHECK(kappa(std::vector<int>(static_cast<size_t>(n), 0), n, r) ==
              unit_element(n, r));
        // kappa(alpha) = Phi_{(alpha|O)} for every full composition alpha
        for (auto& alpha : enumerate_compositions(n, r)) {
            SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
            for (int i = 0; i < n; ++i) a.e(i, i) = alpha[static_cast<size_t>(i)];
            CHECK(kappa(alpha, n, r) == AlgebraElement::basis(a, r));
        }
    }
}

TEST_CASE("divided powers") {
    int n = 2, r = 3;
    AlgebraElement m = AlgebraElement::basis(row1(n, {3, 0}, {0, 0}), r);
    // p = 1 is plain F
    CHECK(divided_power_F(1, 1, m) == act_generator(gen_F(1), m));
    // [2]! F^{(2)} = F^2
    AlgebraElement f2 = act_generator(gen_F(1), act_generator(gen_F(1), m));
    CHECK(divided_power_F(1, 2, m).scaled(RatScalar(qfactorial(2))) == f2);
    // [3]! F^{(3)} = F^3
    AlgebraElement f3 = act_generator(gen_F(1), f2);
    CHECK(divided_power_F(1, 3, m).scaled(RatScalar(qfactorial(3))) == f3);
}

TEST_CASE("derived generators satisfy their defining words") {
    // Ebar_j = -v K_{j+1} Kbar_{j+1} E_j + v^{-1} E_j K_{j+1} Kbar_{j+1}
    int n = 2, r = 2;
    for (auto& a : enumerate_basis(n, r)) {
        AlgebraElement x = AlgebraElement::basis(a, r);
        AlgebraElement lhs = act_generator(gen_Ebar(1), x);
        AlgebraElement rhs =
            apply_word({gen_K(2), gen_Kbar(2), gen_E(1)}, x).scaled(-RatScalar::v_pow(1)) +
            apply_word({gen_E(1), gen_K(2), gen_Kbar(2)}, x).scaled(RatScalar::v_pow(-1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weight components partition an element") {
    int n = 2, r = 2;
    AlgebraElement x;
    for (auto& a : enumerate_basis(n, r)) x += AlgebraElement::basis(a, r);
    AlgebraElement sum(n, r);
    for (auto& w : weights_of(x)) sum += weight_component(x, w);
    CHECK(sum == x);
}
