#pragma once

// Compositions, super matrix indices and their statistics: the labels
// M(n,r) of the Phi basis, the sets J_mu, and the simple-root partial
// order on weights.

#include <compare>
#include <cstdint>
#include <vector>

namespace tqs {

// n-tuple of naturals summing to r.
using Composition = std::vector<int>;

int composition_sum(const Composition& c);

// Number of nonzero parts, the statistic d(mu).
int d_stat(const Composition& mu);

// All compositions of r with n parts, lexicographic order.
std::vector<Composition> enumerate_compositions(int n, int r);

// Basis label (A0|A1): an n x n natural matrix plus an n x n bit matrix.
struct SuperMatrixIndex {
    int n = 0;
    std::vector<int> even;  // row-major n*n
    std::vector<int> odd;   // row-major n*n, entries in {0,1}

    SuperMatrixIndex() = default;
    SuperMatrixIndex(int n_, std::vector<int> even_, std::vector<int> odd_);
    static SuperMatrixIndex zeros(int n);

    int& e(int i, int j) { return even[static_cast<size_t>(i) * n + j]; }
    int& o(int i, int j) { return odd[static_cast<size_t>(i) * n + j]; }
    int e(int i, int j) const { return even[static_cast<size_t>(i) * n + j]; }
    int o(int i, int j) const { return odd[static_cast<size_t>(i) * n + j]; }
    // Entry of A = A0 + A1.
    int a(int i, int j) const { return e(i, j) + o(i, j); }

    int total() const;                 // |A*| = sum of all entries of A
    int parity() const;                // sum of odd entries mod 2
    Composition row_sums() const;      // ro(A)
    Composition col_sums() const;      // co(A)
    bool zero_even_diagonal() const;

    // Canonical order: lexicographic on (even, odd) flattened.
    auto operator<=>(const SuperMatrixIndex&) const = default;
};

// delta(A*) = sum_{i>=k, j<l} a_{i,j} a_{k,l} + sum_{i,j} a1_{i,j} a0_{i,j}.
int delta(const SuperMatrixIndex& a);

// All (A0|A1) with |A0+A1| = r, in canonical order.
std::vector<SuperMatrixIndex> enumerate_basis(int n, int r);

// lambda = (lambda0 | lambda1), lambda1 a bit vector; lambda_i = even_i + odd_i.
struct SuperComposition {
    Composition even;
    std::vector<int> odd;

    int parity() const;  // sum of odd bits mod 2
    auto operator<=>(const SuperComposition&) const = default;
};

// J_mu: all splittings of mu into (even | bit vector); #J_mu = 2^{d(mu)}.
std::vector<SuperComposition> j_mu(const Composition& mu);

// Weight v^lambda stored by its exponent vector.
using WeightExponent = std::vector<int>;

// True iff omega - gamma is a nonnegative integer combination of the
// simple roots alpha_j = eps_j - eps_{j+1}: all prefix sums of the
// difference are >= 0 and the total difference is 0.
bool weight_leq(const WeightExponent& gamma, const WeightExponent& omega);

}  // namespace tqs
