// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything is exact; there are no tolerances.

#include <tqschur/hecke_clifford.hpp>
#include <tqschur/linalg.hpp>
#include <tqschur/repr.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace tqs;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %d. %s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

const std::vector<std::pair<int, int>> kRelationSizes = {{2, 1}, {2, 2}, {2, 3}, {3, 2}};
const std::vector<std::pair<int, int>> kOracleSizes = {{2, 1}, {2, 2}, {2, 3}};

// ---- 1. defining relations on every basis vector ----
bool criterion_relations(std::string& detail) {
    int total = 0;
    for (auto [n, r] : kRelationSizes) {
        CheckReport rep = check_relations(n, r);
        total += rep.checks;
        if (!rep.ok()) {
            detail = "(" + std::to_string(n) + "," + std::to_string(r) + "): " + rep.failures.front();
            return false;
        }
    }
    detail = std::to_string(total) + " relation instances";
    return true;
}

// ---- 2. closed formulas vs the Hecke-Clifford model ----
bool criterion_oracle(std::string& detail) {
    int total = 0;
    for (auto [n, r] : kOracleSizes) {
        std::vector<GeneratorName> gens;
        for (int h = 1; h <= n; ++h) {
            gens.push_back(gen_K(h));
            gens.push_back(gen_Kinv(h));
        }
        for (int h = 1; h < n; ++h) {
            gens.push_back(gen_E(h));
            gens.push_back(gen_F(h));
        }
        gens.push_back(gen_Kbar(n));
        for (const auto& a : enumerate_basis(n, r)) {
            AlgebraElement x = AlgebraElement::basis(a, r);
            for (const auto& g : gens) {
                ++total;
                if (act_generator(g, x) != oracle_act(generator_image(g, n, r), a)) {
                    detail = g.str() + " on a basis vector at (" + std::to_string(n) + "," +
                             std::to_string(r) + ")";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(total) + " generator/basis pairs";
    return true;
}

// Certificates for criteria 3 and 4, computed once.
std::map<std::pair<int, int>, std::vector<DecompositionCertificate>> all_certs() {
    std::map<std::pair<int, int>, std::vector<DecompositionCertificate>> out;
    for (auto [n, r] : kRelationSizes)
        for (const auto& mu : enumerate_compositions(n, r))
            out[{n, r}].push_back(decompose_block(mu, r));
    return out;
}

// ---- 3. block decomposition certificates + dimension tally ----
bool criterion_decomposition(
    const std::map<std::pair<int, int>, std::vector<DecompositionCertificate>>& certs,
    std::string& detail) {
    for (auto& [nr, list] : certs) {
        auto [n, r] = nr;
        int block_total = 0;
        for (const auto& c : list) {
            if (!c.passed()) {
                detail = "certificate failed at (" + std::to_string(n) + "," +
                         std::to_string(r) + ")" +
                         (c.failures.empty() ? "" : ": " + c.failures.front());
                return false;
            }
            size_t expect = r == 1 ? 2u : (1u << (d_stat(c.mu) - 1));
            if (c.summands.size() != expect) {
                detail = "wrong summand count";
                return false;
            }
            block_total += build_block(c.mu, r).basis.dim();
        }
        int full = static_cast<int>(enumerate_basis(n, r).size());
        if (block_total != full) {
            detail = "block dims " + std::to_string(block_total) + " != " + std::to_string(full);
            return false;
        }
        if (n == 2 && r == 2 && full != 32) {
            detail = "expected 32 basis elements at (2,2)";
            return false;
        }
    }
    detail = "all certificates passed; block dims tally (32 at (2,2))";
    return true;
}

// ---- 4. highest weight space dimensions and the r = 1 eigen-split ----
bool criterion_highest_weight(
    const std::map<std::pair<int, int>, std::vector<DecompositionCertificate>>& certs,
    std::string& detail) {
    for (auto& [nr, list] : certs) {
        auto [n, r] = nr;
        for (const auto& c : list) {
            if (r == 1) {
                std::vector<int> eig;
                for (const auto& s : c.summands) {
                    if (s.hw_dim != 1) {
                        detail = "hw_dim != 1 at r = 1";
                        return false;
                    }
                    eig.push_back(s.eigen);
                }
                std::sort(eig.begin(), eig.end());
                if (eig != std::vector<int>{-1, 1}) {
                    detail = "Kbar_1 eigenvalues are not exactly {+1, -1}";
                    return false;
                }
            } else {
                for (const auto& s : c.summands)
                    if (s.hw_dim != 2) {
                        detail = "hw_dim != 2 at r = " + std::to_string(r);
                        return false;
                    }
            }
        }
    }
    detail = "hw_dim = 2 for r in {2,3}, eigen-split at r = 1";
    return true;
}

// ---- 5. kappa(alpha) = Phi_{(alpha|O)}, kappa(0) = 1_r, integrality ----
bool criterion_kappa(std::string& detail) {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
        for (const auto& alpha : enumerate_compositions(n, r)) {
            SuperMatrixIndex d = SuperMatrixIndex::zeros(n);
            for (int i = 0; i < n; ++i) d.e(i, i) = alpha[static_cast<size_t>(i)];
            if (kappa(alpha, n, r) != AlgebraElement::basis(d, r)) {
                detail = "kappa(alpha) != Phi_{(alpha|O)}";
                return false;
            }
        }
        if (kappa(std::vector<int>(static_cast<size_t>(n), 0), n, r) != unit_element(n, r)) {
            detail = "kappa(0) != 1_r";
            return false;
        }
        // every [K_r; k] with 0 <= k_i <= r has Z[v, v^-1] coefficients
        std::vector<int> k(static_cast<size_t>(n), 0);
        while (true) {
            AlgebraElement kk = kappa(k, n, r);
            for (auto& [a, c] : kk.terms())
                if (!c.is_laurent() || !c.num().integer_coeffs()) {
                    detail = "coefficient outside Z[v, v^-1]";
                    return false;
                }
            size_t i = 0;
            while (i < k.size() && k[i] == r) k[i++] = 0;
            if (i == k.size()) break;
            ++k[i];
        }
    }
    detail = "(2,3) and (3,3), all k in {0..r}^n integral";
    return true;
}

// ---- 6. Gaussian binomials ----
bool criterion_gauss(std::string& detail) {
    for (unsigned p = 1; p <= 12; ++p)
        for (unsigned u = 0; u < p; ++u)
            if (!gauss_binom(p, u).integer_coeffs()) {
                detail = "gauss_binom(" + std::to_string(p) + "," + std::to_string(u) +
                         ") not in Z[v, v^-1]";
                return false;
            }
    for (unsigned p = 1; p <= 12; ++p)
        for (unsigned u = p; u <= 12; ++u)
            if (!gauss_binom(p, u).is_zero()) {
                detail = "gauss_binom nonzero for u >= p";
                return false;
            }
    detail = "integral for 0 <= u < p <= 12, zero for u >= p";
    return true;
}

// ---- 7. E_1 F_1^{(p)} on highest weight vectors of weight (v^3, 1) ----
bool criterion_divided_power(std::string& detail) {
    int checked = 0;
    for (const auto& a : enumerate_basis(2, 3)) {
        if (a.row_sums() != Composition{3, 0}) continue;
        AlgebraElement m = AlgebraElement::basis(a, 3);
        for (unsigned p = 1; p <= 3; ++p) {
            // (w1 w2^-1 v^{1-p} - w1^-1 w2 v^{p-1})/(v - v^-1) = [4 - p]
            AlgebraElement lhs = act_generator(gen_E(1), divided_power_F(1, p, m));
            AlgebraElement rhs =
                divided_power_F(1, p - 1, m).scaled(RatScalar(qint(4 - p)));
            if (lhs != rhs) {
                detail = "recursion fails at p = " + std::to_string(p);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " instances at (2,3)";
    return true;
}

// ---- 8. F-reordering rank-1 checks at (3,3) ----
bool criterion_f_reordering(std::string& detail) {
    int checked = 0;
    for (const auto& a : enumerate_basis(3, 3)) {
        Composition lam = a.row_sums();
        AlgebraElement m = AlgebraElement::basis(a, 3);
        for (int i = 1; i + 1 <= 2; ++i) {  // both F_i and F_{i+1} must exist at n = 3
            if (lam[static_cast<size_t>(i)] != 0) continue;  // lambda_{i+1} = 0
            for (int p = 1; p <= 3; ++p)
                for (int k = 0; p + k <= 3; ++k) {
                    std::vector<GeneratorName> w1, w2;
                    w1.push_back(gen_F(i));
                    for (int t = 0; t < p; ++t) w1.push_back(gen_F(i + 1));
                    for (int t = 0; t < k; ++t) w1.push_back(gen_F(i));
                    for (int t = 0; t < p; ++t) w2.push_back(gen_F(i + 1));
                    for (int t = 0; t < k + 1; ++t) w2.push_back(gen_F(i));
                    SpanBasis s = span_of({apply_word(w1, m), apply_word(w2, m)});
                    if (s.dim() > 1) {
                        detail = "independent pair at i = " + std::to_string(i) + ", p = " +
                                 std::to_string(p) + ", k = " + std::to_string(k);
                        return false;
                    }
                    ++checked;
                }
        }
    }
    detail = std::to_string(checked) + " rank-1 checks";
    return true;
}

// ---- 9. weight surjectivity on certified summands ----
bool criterion_surjectivity(std::string& detail) {
    int total = 0;
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        CheckReport rep = check_weight_surjectivity(n, r);
        total += rep.checks;
        if (!rep.ok()) {
            detail = "(" + std::to_string(n) + "," + std::to_string(r) + "): " + rep.failures.front();
            return false;
        }
    }
    detail = std::to_string(total) + " span equalities";
    return true;
}

}  // namespace

int main() {
    std::string d;

    d.clear(); report(1, "defining relations on every basis vector", criterion_relations(d), d);
    d.clear(); report(2, "generator actions match the Hecke-Clifford model", criterion_oracle(d), d);

    auto certs = all_certs();
    d.clear(); report(3, "block decomposition into irreducible summands", criterion_decomposition(certs, d), d);
    d.clear(); report(4, "highest weight space dimensions", criterion_highest_weight(certs, d), d);
    d.clear(); report(5, "kappa operators and their integrality", criterion_kappa(d), d);
    d.clear(); report(6, "Gaussian binomial integrality", criterion_gauss(d), d);
    d.clear(); report(7, "divided power recursion E_1 F_1^(p)", criterion_divided_power(d), d);
    d.clear(); report(8, "F-reordering linear dependence", criterion_f_reordering(d), d);
    d.clear(); report(9, "weight-space surjectivity of F_i", criterion_surjectivity(d), d);

    if (g_failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
