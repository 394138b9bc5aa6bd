#pragma once

// The Hecke-Clifford superalgebra H^c_r over Q(v) with q = v^2, in the
// normal form T_w c^beta, and the evaluation of Phi-operator composites
// against it.  This module is the independent model the closed action
// formulas are checked against.

#include "tqschur/combinat.hpp"
#include "tqschur/laurent.hpp"
#include "tqschur/qschur.hpp"

#include <map>
#include <vector>

namespace tqs {

// One-line permutation of {0, ..., r-1}: w[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int r);
int perm_length(const Perm& w);  // inversion count
// Reduced word s_{i_1} ... s_{i_k} = w, 1-based simple reflections,
// listed so that right-multiplying T_id by T_{i_1}, ..., T_{i_k} in order
// yields T_w.
std::vector<int> reduced_word(const Perm& w);

// The Young subgroup S_mu of S_r, mu a composition of r.
std::vector<Perm> young_subgroup(const Composition& mu);

struct HCWord {
    Perm w;
    unsigned beta = 0;  // bit j-1 set iff c_j present

    auto operator<=>(const HCWord&) const = default;
};

class HCElement {
public:
    HCElement() = default;
    explicit HCElement(int r) : r_(r) {}

    static HCElement unit(int r);

    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<HCWord, RatScalar>& terms() const { return terms_; }

    void add_term(const HCWord& t, const RatScalar& c);
    HCElement& operator+=(const HCElement& o);
    HCElement& operator-=(const HCElement& o);
    friend HCElement operator+(HCElement a, const HCElement& b) { return a += b; }
    friend HCElement operator-(HCElement a, const HCElement& b) { return a -= b; }
    HCElement scaled(const RatScalar& c) const;
    friend bool operator==(const HCElement& a, const HCElement& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

private:
    int r_ = 0;
    std::map<HCWord, RatScalar> terms_;
};

// Right multiplication by T_i (1 <= i <= r-1), c_j (1 <= j <= r), T_w,
// and a general element.
HCElement hc_mul_T(const HCElement& x, int i);
HCElement hc_mul_c(const HCElement& x, int j);
HCElement hc_mul_Tw(const HCElement& x, const Perm& w);
HCElement hc_mul(const HCElement& x, const HCElement& y);

// x_lambda = sum of T_w over the Young subgroup S_lambda.
HCElement build_x_lambda(const Composition& lambda, int r);

// Right multiplication by c_{q,i,j} = q^{j-i} c_i + q^{j-i-1} c_{i+1} + ... + c_j.
HCElement hc_mul_cq(const HCElement& x, int i, int j);

// The distinguished minimal-length representative of S_{ro(A)} d S_{co(A)}
// determined by A = A0 + A1.
Perm d_of(const SuperMatrixIndex& a);

// nu_A: column-by-column reading of the entries of A (a refinement of co(A)).
Composition nu_of(const SuperMatrixIndex& a);

// The tail of T_{A*} without the leading x_{ro(A)} factor:
// T_{d_A} c_{A*} sum_{sigma in D_{nu_A} cap S_{co(A)}} T_sigma.
// It is homogeneous of parity p(A*).
HCElement t_tail(const SuperMatrixIndex& a);

// T_{A*} itself.
HCElement t_element(const SuperMatrixIndex& a);

// Evaluates the composite g . Phi_{A*} at x_{co(A)} inside H^c_r, where g
// is given by its Phi-expansion (a sum over B* with co(B) = ro(A); other
// supports contribute zero).  The value lands in different summands of
// the direct sum over row weights, so it is returned grouped by ro(B).
std::map<Composition, HCElement> compose_at_xmu(const AlgebraElement& g,
                                                const SuperMatrixIndex& a);

// Expresses an element of the x_lambda-summand known to lie in the span of
// {T_{C*} : co(C) = mu, ro(C) = lambda} back in the Phi basis.  Throws if
// the element is outside that span.
AlgebraElement in_phi_basis(const HCElement& x, const Composition& mu,
                            const Composition& lambda, int n);

// Oracle action: g . Phi_{A*} computed entirely through H^c_r.
AlgebraElement oracle_act(const AlgebraElement& g, const SuperMatrixIndex& a);

}  // namespace tqs
