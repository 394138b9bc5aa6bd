#include "tqschur/hecke_clifford.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tqs {

Perm perm_identity(int r) {
    Perm w(static_cast<size_t>(r));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

int perm_length(const Perm& w) {
    int len = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++len;
    return len;
}

std::vector<int> reduced_word(const Perm& w) {
    Perm u = w;
    std::vector<int> desc;  // right descents peeled off u, in peel order
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < u.size(); ++i) {
            if (u[i] > u[i + 1]) {
                std::swap(u[i], u[i + 1]);
                desc.push_back(static_cast<int>(i) + 1);
                moved = true;
                break;
            }
        }
    }
    std::reverse(desc.begin(), desc.end());
    return desc;
}

std::vector<Perm> young_subgroup(const Composition& mu) {
    int r = composition_sum(mu);
    std::vector<Perm> out{perm_identity(r)};
    int start = 0;
    for (int part : mu) {
        if (part > 1) {
            std::vector<int> block(static_cast<size_t>(part));
            std::iota(block.begin(), block.end(), start);
            std::vector<Perm> next;
            do {
                for (const Perm& base : out) {
                    Perm w = base;
                    for (int k = 0; k < part; ++k)
                        w[static_cast<size_t>(start + k)] = block[static_cast<size_t>(k)];
                    next.push_back(std::move(w));
                }
            } while (std::next_permutation(block.begin(), block.end()));
            out = std::move(next);
        }
        start += part;
    }
    return out;
}

HCElement HCElement::unit(int r) {
    HCElement x(r);
    x.add_term({perm_identity(r), 0}, RatScalar::one());
    return x;
}

void HCElement::add_term(const HCWord& t, const RatScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HCElement& HCElement::operator+=(const HCElement& o) {
    if (o.is_zero()) return *this;
    if (terms_.empty() && r_ == 0) r_ = o.r_;
    if (r_ != o.r_) throw std::invalid_argument("HCElement: mixed r contexts");
    for (auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

HCElement& HCElement::operator-=(const HCElement& o) {
    return *this += o.scaled(-RatScalar::one());
}

HCElement HCElement::scaled(const RatScalar& c) const {
    HCElement x(r_);
    if (c.is_zero()) return x;
    for (auto& [t, k] : terms_) x.terms_.emplace(t, k * c);
    return x;
}

namespace {

const RatScalar kQ = RatScalar::v_pow(2);
const RatScalar kQm1 = RatScalar::v_pow(2) - RatScalar::one();

// T_w T_i by the length rule.
void mul_word_T(const Perm& w, int i, const RatScalar& c, HCElement& out, unsigned beta) {
    Perm ws = w;
    std::swap(ws[static_cast<size_t>(i - 1)], ws[static_cast<size_t>(i)]);
    if (w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)]) {
        out.add_term({std::move(ws), beta}, c);
    } else {
        out.add_term({std::move(ws), beta}, c * kQ);
        out.add_term({w, beta}, c * kQm1);
    }
}

}  // namespace

HCElement hc_mul_T(const HCElement& x, int i) {
    if (i < 1 || i >= x.r()) throw std::invalid_argument("hc_mul_T: index out of range");
    HCElement out(x.r());
    unsigned lo = 1u << (i - 1), hi = 1u << i;
    for (auto& [t, c] : x.terms()) {
        bool bi = t.beta & lo, bj = t.beta & hi;
        if (!bi && !bj) {
            mul_word_T(t.w, i, c, out, t.beta);
        } else if (bi && !bj) {
            // c_i T_i = T_i c_{i+1} + (q-1)(c_i - c_{i+1})
            unsigned swapped = (t.beta & ~lo) | hi;
            mul_word_T(t.w, i, c, out, swapped);
            out.add_term({t.w, t.beta}, c * kQm1);
            out.add_term({t.w, swapped}, -(c * kQm1));
        } else if (!bi && bj) {
            // c_{i+1} T_i = T_i c_i
            unsigned swapped = (t.beta & ~hi) | lo;
            mul_word_T(t.w, i, c, out, swapped);
        } else {
            // c_i c_{i+1} T_i = -T_i c_i c_{i+1} + (q-1)(c_i c_{i+1} - 1)
            mul_word_T(t.w, i, -c, out, t.beta);
            out.add_term({t.w, t.beta}, c * kQm1);
            out.add_term({t.w, t.beta & ~(lo | hi)}, -(c * kQm1));
        }
    }
    return out;
}

HCElement hc_mul_c(const HCElement& x, int j) {
    if (j < 1 || j > x.r()) throw std::invalid_argument("hc_mul_c: index out of range");
    HCElement out(x.r());
    unsigned bit = 1u << (j - 1);
    for (auto& [t, c] : x.terms()) {
        // move c_j left past the higher-index factors of c^beta
        int crossings = std::popcount(t.beta >> j);
        RatScalar k = (crossings % 2 != 0) ? -c : c;
        if (t.beta & bit) k = -k;  // c_j^2 = -1
        out.add_term({t.w, t.beta ^ bit}, k);
    }
    return out;
}

HCElement hc_mul_Tw(const HCElement& x, const Perm& w) {
    HCElement out = x;
    for (int i : reduced_word(w)) out = hc_mul_T(out, i);
    return out;
}

HCElement hc_mul(const HCElement& x, const HCElement& y) {
    HCElement out(x.r());
    for (auto& [t, c] : y.terms()) {
        HCElement part = hc_mul_Tw(x, t.w);
        for (int j = 1; j <= x.r(); ++j)
            if (t.beta & (1u << (j - 1))) part = hc_mul_c(part, j);
        out += part.scaled(c);
    }
    return out;
}

HCElement build_x_lambda(const Composition& lambda, int r) {
    if (composition_sum(lambda) != r)
        throw std::invalid_argument("build_x_lambda: |lambda| != r");
    HCElement x(r);
    for (auto& w : young_subgroup(lambda)) {
        // every w in S_lambda is reached by length-increasing steps, so the
        // coefficient of T_w in the sum is 1
        x.add_term({w, 0}, RatScalar::one());
    }
    return x;
}

HCElement hc_mul_cq(const HCElement& x, int i, int j) {
    HCElement out(x.r());
    for (int k = i; k <= j; ++k) out += hc_mul_c(x, k).scaled(RatScalar::v_pow(2 * (j - k)));
    return out;
}

Perm d_of(const SuperMatrixIndex& a) {
    int n = a.n, r = a.total();
    // first positions of the pieces P_{i,j} (inside row blocks of ro(A))
    // and Q_{i,j} (inside column blocks of co(A))
    std::vector<int> pstart(static_cast<size_t>(n) * n), qstart(static_cast<size_t>(n) * n);
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            pstart[static_cast<size_t>(i) * n + j] = pos;
            pos += a.a(i, j);
        }
    pos = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            qstart[static_cast<size_t>(i) * n + j] = pos;
            pos += a.a(i, j);
        }
    Perm d(static_cast<size_t>(r));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < a.a(i, j); ++k)
                d[static_cast<size_t>(qstart[static_cast<size_t>(i) * n + j] + k)] =
                    pstart[static_cast<size_t>(i) * n + j] + k;
    return d;
}

Composition nu_of(const SuperMatrixIndex& a) {
    Composition nu;
    for (int j = 0; j < a.n; ++j)
        for (int i = 0; i < a.n; ++i) nu.push_back(a.a(i, j));
    return nu;
}

HCElement t_tail(const SuperMatrixIndex& a) {
    int r = a.total();
    HCElement x = HCElement::unit(r);
    x = hc_mul_Tw(x, d_of(a));

    // c_{A*}: one c_{q,s+1,s+len} factor per nu_A block carrying an odd entry,
    // taken in reading order
    int start = 0;
    for (int j = 0; j < a.n; ++j)
        for (int i = 0; i < a.n; ++i) {
            int len = a.a(i, j);
            if (a.o(i, j) == 1) x = hc_mul_cq(x, start + 1, start + len);
            start += len;
        }

    // sum over D_{nu_A} cap S_{co(A)}: members of S_mu with no descent
    // inside any nu_A block
    Composition mu = a.col_sums(), nu = nu_of(a);
    HCElement out(r);
    for (auto& sigma : young_subgroup(mu)) {
        // sigma is a minimal-length representative of S_nu sigma iff
        // sigma^{-1} has no descent inside the nu_A blocks
        Perm inv(sigma.size());
        for (size_t i = 0; i < sigma.size(); ++i) inv[static_cast<size_t>(sigma[i])] = static_cast<int>(i);
        bool ok = true;
        int s = 0;
        for (int part : nu) {
            for (int k = 1; k < part && ok; ++k)
                if (inv[static_cast<size_t>(s + k - 1)] > inv[static_cast<size_t>(s + k)])
                    ok = false;
            s += part;
        }
        if (ok) out += hc_mul_Tw(x, sigma);
    }
    return out;
}

HCElement t_element(const SuperMatrixIndex& a) {
    return hc_mul(build_x_lambda(a.row_sums(), a.total()), t_tail(a));
}

std::map<Composition, HCElement> compose_at_xmu(const AlgebraElement& g,
                                                const SuperMatrixIndex& a) {
    Composition lambda = a.row_sums();
    HCElement tail = t_tail(a);
    int pa = a.parity();
    std::map<Composition, HCElement> out;
    for (auto& [b, c] : g.terms()) {
        if (b.col_sums() != lambda) continue;
        RatScalar k = c;
        if (pa == 1 && b.parity() == 1) k = -k;
        out[b.row_sums()] += hc_mul(t_element(b), tail).scaled(k);
    }
    return out;
}

AlgebraElement in_phi_basis(const HCElement& x, const Composition& mu,
                            const Composition& lambda, int n) {
    int r = composition_sum(mu);
    std::vector<SuperMatrixIndex> cand;
    std::vector<HCElement> cols;
    for (auto& cm : enumerate_basis(n, r)) {
        if (cm.col_sums() != mu || cm.row_sums() != lambda) continue;
        cand.push_back(cm);
        cols.push_back(t_element(cm));
    }

    // coordinatize over the union of supports and solve exactly
    std::map<HCWord, size_t> rows;
    for (auto& col : cols)
        for (auto& [t, c] : col.terms()) rows.emplace(t, rows.size());
    for (auto& [t, c] : x.terms()) rows.emplace(t, rows.size());

    size_t m = rows.size(), k = cand.size();
    std::vector<std::vector<RatScalar>> aug(m, std::vector<RatScalar>(k + 1, RatScalar::zero()));
    for (size_t j = 0; j < k; ++j)
        for (auto& [t, c] : cols[j].terms()) aug[rows[t]][j] = c;
    for (auto& [t, c] : x.terms()) aug[rows[t]][k] = c;

    std::vector<size_t> pivot_of_col(k, m);
    size_t prow = 0;
    for (size_t j = 0; j < k && prow < m; ++j) {
        size_t sel = m;
        for (size_t i = prow; i < m; ++i)
            if (!aug[i][j].is_zero()) { sel = i; break; }
        if (sel == m) continue;
        std::swap(aug[prow], aug[sel]);
        RatScalar inv = aug[prow][j].inverse();
        for (size_t jj = j; jj <= k; ++jj) aug[prow][jj] = aug[prow][jj] * inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == prow || aug[i][j].is_zero()) continue;
            RatScalar f = aug[i][j];
            for (size_t jj = j; jj <= k; ++jj) aug[i][jj] -= f * aug[prow][jj];
        }
        pivot_of_col[j] = prow;
        ++prow;
    }
    for (size_t i = prow; i < m; ++i)
        if (!aug[i][k].is_zero())
            throw std::domain_error("in_phi_basis: element outside the Phi span");

    AlgebraElement out(n, r);
    for (size_t j = 0; j < k; ++j)
        if (pivot_of_col[j] != m) out.add_term(cand[j], aug[pivot_of_col[j]][k]);
    return out;
}

AlgebraElement oracle_act(const AlgebraElement& g, const SuperMatrixIndex& a) {
    AlgebraElement out(a.n, a.total());
    for (auto& [lambda, part] : compose_at_xmu(g, a))
        out += in_phi_basis(part, a.col_sums(), lambda, a.n);
    return out;
}

}  // namespace tqs
