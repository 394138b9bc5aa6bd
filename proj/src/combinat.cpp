#include "tqschur/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tqs {

int composition_sum(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

int d_stat(const Composition& mu) {
    int d = 0;
    for (int x : mu)
        if (x > 0) ++d;
    return d;
}

std::vector<Composition> enumerate_compositions(int n, int r) {
    if (n < 1) throw std::invalid_argument("enumerate_compositions: n must be >= 1");
    std::vector<Composition> out;
    Composition cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, r);
    return out;
}

SuperMatrixIndex::SuperMatrixIndex(int n_, std::vector<int> even_, std::vector<int> odd_)
    : n(n_), even(std::move(even_)), odd(std::move(odd_)) {
    size_t cells = static_cast<size_t>(n) * n;
    if (even.size() != cells || odd.size() != cells)
        throw std::invalid_argument("SuperMatrixIndex: bad matrix size");
    for (int x : even)
        if (x < 0) throw std::invalid_argument("SuperMatrixIndex: negative even entry");
    for (int x : odd)
        if (x != 0 && x != 1) throw std::invalid_argument("SuperMatrixIndex: odd entry not a bit");
}

SuperMatrixIndex SuperMatrixIndex::zeros(int n) {
    size_t cells = static_cast<size_t>(n) * n;
    return SuperMatrixIndex(n, std::vector<int>(cells, 0), std::vector<int>(cells, 0));
}

int SuperMatrixIndex::total() const {
    return std::accumulate(even.begin(), even.end(), 0) +
           std::accumulate(odd.begin(), odd.end(), 0);
}

int SuperMatrixIndex::parity() const {
    return std::accumulate(odd.begin(), odd.end(), 0) % 2;
}

Composition SuperMatrixIndex::row_sums() const {
    Composition r(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[static_cast<size_t>(i)] += a(i, j);
    return r;
}

Composition SuperMatrixIndex::col_sums() const {
    Composition c(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] += a(i, j);
    return c;
}

bool SuperMatrixIndex::zero_even_diagonal() const {
    for (int i = 0; i < n; ++i)
        if (e(i, i) != 0) return false;
    return true;
}

int delta(const SuperMatrixIndex& a) {
    int s = 0;
    int n = a.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.a(i, j) == 0) continue;
            for (int k = 0; k <= i; ++k)
                for (int l = j + 1; l < n; ++l) s += a.a(i, j) * a.a(k, l);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += a.o(i, j) * a.e(i, j);
    return s;
}

std::vector<SuperMatrixIndex> enumerate_basis(int n, int r) {
    if (n < 1) throw std::invalid_argument("enumerate_basis: n must be >= 1");
    size_t cells = static_cast<size_t>(n) * n;
    std::vector<SuperMatrixIndex> out;
    std::vector<int> even(cells, 0), odd(cells, 0);
    // Fill cell by cell with a split (even, odd-bit) amount; lexicographic
    // order on (even, odd) follows from iteration order below.
    auto rec = [&](auto&& self, size_t cell, int left) -> void {
        if (cell == cells) {
            if (left == 0) out.emplace_back(n, even, odd);
            return;
        }
        for (int ev = 0; ev <= left; ++ev) {
            even[cell] = ev;
            for (int od = 0; od <= 1 && ev + od <= left; ++od) {
                odd[cell] = od;
                self(self, cell + 1, left - ev - od);
            }
            odd[cell] = 0;
        }
        even[cell] = 0;
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

int SuperComposition::parity() const {
    return std::accumulate(odd.begin(), odd.end(), 0) % 2;
}

std::vector<SuperComposition> j_mu(const Composition& mu) {
    std::vector<SuperComposition> out;
    size_t n = mu.size();
    SuperComposition cur{Composition(n, 0), std::vector<int>(n, 0)};
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int bit = 0; bit <= (mu[i] > 0 ? 1 : 0); ++bit) {
            cur.odd[i] = bit;
            cur.even[i] = mu[i] - bit;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool weight_leq(const WeightExponent& gamma, const WeightExponent& omega) {
    if (gamma.size() != omega.size())
        throw std::invalid_argument("weight_leq: length mismatch");
    long prefix = 0;
    for (size_t i = 0; i < gamma.size(); ++i) {
        prefix += omega[i] - gamma[i];
        if (i + 1 < gamma.size() && prefix < 0) return false;
    }
    return prefix == 0;
}

}  // namespace tqs
