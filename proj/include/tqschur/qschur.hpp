#pragma once

// Elements of the twisted queer q-Schur superalgebra as exact linear
// combinations of the Phi basis, together with the generator actions,
// long elements, divided powers and the [K;k] operators.

#include "tqschur/combinat.hpp"
#include "tqschur/laurent.hpp"

#include <map>
#include <vector>

namespace tqs {

enum class GenKind { K, Kinv, Kbar, E, Ebar, F, Fbar };

// Generator name: K_i / K_i^{-1} / Kbar_i for 1 <= i <= n,
// E_j / Ebar_j / F_j / Fbar_j for 1 <= j <= n-1.  Indices are 1-based.
struct GeneratorName {
    GenKind kind;
    int index;

    auto operator<=>(const GeneratorName&) const = default;
    bool is_odd() const {
        return kind == GenKind::Kbar || kind == GenKind::Ebar || kind == GenKind::Fbar;
    }
    std::string str() const;
};

GeneratorName gen_K(int i);
GeneratorName gen_Kinv(int i);
GeneratorName gen_Kbar(int i);
GeneratorName gen_E(int j);
GeneratorName gen_Ebar(int j);
GeneratorName gen_F(int j);
GeneratorName gen_Fbar(int j);

// Finitely supported map SuperMatrixIndex -> RatScalar in a fixed (n, r)
// context.  Immutable value semantics; no stored coefficient is zero.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(int n, int r) : n_(n), r_(r) {}

    static AlgebraElement basis(const SuperMatrixIndex& a, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SuperMatrixIndex, RatScalar>& terms() const { return terms_; }

    void add_term(const SuperMatrixIndex& a, const RatScalar& c);
    RatScalar coeff(const SuperMatrixIndex& a) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement scaled(const RatScalar& c) const;
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    // Smallest supported index in the canonical order; element must be nonzero.
    const SuperMatrixIndex& leading_index() const;

private:
    int n_ = 0, r_ = 0;
    std::map<SuperMatrixIndex, RatScalar> terms_;
};

// Action of a base generator {K_h, K_h^{-1}, E_h, F_h, Kbar_n} by the
// closed basis-level formulas, extended linearly.  Terms whose target
// matrix would leave M(n,r) are dropped.
AlgebraElement act_base_generator(const GeneratorName& g, const AlgebraElement& x);

// Action of any generator; the odd family {Ebar_j, Fbar_j, Kbar_j (j<n)}
// is evaluated through the even generators and Kbar_n, recursing downward.
AlgebraElement act_generator(const GeneratorName& g, const AlgebraElement& x);

// Right-to-left application of a word of generators.
AlgebraElement apply_word(const std::vector<GeneratorName>& word, const AlgebraElement& x);

// Long element A(A*, j, r): sum over diagonal completions lambda of
// v^{lambda . j} [A0 + lambda | A1], with [X*] = v^{-delta(X*)} Phi_{X*}.
// Requires zero even diagonal; zero when |A*| > r.
AlgebraElement long_element(const SuperMatrixIndex& a, const std::vector<int>& j, int r);

// eta_r(xi_n(g)): the image of a generator inside the level-r algebra.
AlgebraElement generator_image(const GeneratorName& g, int n, int r);

// The unit 1_r = sum over lambda of Phi_{(lambda|O)}.
AlgebraElement unit_element(int n, int r);

// F_j^{(p)} x = F_j^p x / [p]!.
AlgebraElement divided_power_F(int j, unsigned p, const AlgebraElement& x);

// [K_r; k] = sum_{lambda >= k} prod_i prod_{t=1..k_i}
// (v^{lambda_i+1-t} - v^{-lambda_i-1+t})/(v^t - v^{-t}) Phi_{(lambda|O)}.
AlgebraElement kappa(const std::vector<int>& kvec, int n, int r);

// Weight component: the part of x supported on indices with ro(A) = lambda.
AlgebraElement weight_component(const AlgebraElement& x, const Composition& lambda);

// Row-sum weights occurring in the support of x.
std::vector<Composition> weights_of(const AlgebraElement& x);

}  // namespace tqs
