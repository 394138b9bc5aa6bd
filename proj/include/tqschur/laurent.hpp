#pragma once

// Exact scalar arithmetic for the rational-function field Q(v):
// sparse Laurent polynomials in v with rational coefficients, and
// reduced fractions of them.  All values are immutable after
// construction and safe to share across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace tqs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(const Rat& c, int exp) {
        if (c != 0) coeffs_[exp] = c;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }
    static LaurentPoly v_pow(int k) { return LaurentPoly(Rat(1), k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }
    bool is_constant() const {
        return coeffs_.empty() ||
               (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    // Lowest/highest exponent with a nonzero coefficient; poly must be nonzero.
    int min_exp() const { require_nonzero(); return coeffs_.begin()->first; }
    int max_exp() const { require_nonzero(); return coeffs_.rbegin()->first; }

    Rat coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    const std::map<int, Rat>& terms() const { return coeffs_; }

    bool integer_coeffs() const {
        for (auto& [e, c] : coeffs_)
            if (denominator(c) != 1) return false;
        return true;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
        return r;
    }
    LaurentPoly shifted(int by) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
        return r;
    }
    LaurentPoly pow(unsigned t) const {
        LaurentPoly r = one();
        for (unsigned i = 0; i < t; ++i) r = r * (*this);
        return r;
    }

    // Canonical text form: terms "c*v^k" in decreasing exponent order.
    std::string str() const;

private:
    void add_term(int e, const Rat& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    void require_nonzero() const {
        if (coeffs_.empty()) throw std::logic_error("zero Laurent polynomial has no degree");
    }

    std::map<int, Rat> coeffs_;  // exponent -> nonzero coefficient
};

// Exact division; throws if b does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// gcd up to the canonical unit: integer primitive, positive leading
// coefficient, valuation zero.  gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Reduced fraction of Laurent polynomials.  Canonical form: numerator and
// denominator coprime with integer coefficients, gcd of their contents 1,
// denominator of valuation zero with positive lowest coefficient.  Equality
// is structural.
class RatScalar {
public:
    RatScalar() : num_(), den_(LaurentPoly::one()) {}
    RatScalar(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) { canonicalize(); }
    RatScalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::invalid_argument("RatScalar: zero denominator");
        canonicalize();
    }

    static RatScalar zero() { return RatScalar(); }
    static RatScalar one() { return RatScalar(LaurentPoly::one()); }
    static RatScalar from_int(long k) { return RatScalar(LaurentPoly(Rat(k))); }
    static RatScalar v_pow(int k) { return RatScalar(LaurentPoly::v_pow(k)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_laurent() const { return den_.is_one(); }

    RatScalar inverse() const {
        if (is_zero()) throw std::domain_error("RatScalar: inverse of zero");
        return RatScalar(den_, num_);
    }

    friend RatScalar operator+(const RatScalar& a, const RatScalar& b) {
        return RatScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatScalar operator-(const RatScalar& a, const RatScalar& b) {
        return RatScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatScalar operator*(const RatScalar& a, const RatScalar& b) {
        return RatScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatScalar operator/(const RatScalar& a, const RatScalar& b) {
        return a * b.inverse();
    }
    RatScalar operator-() const {
        RatScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatScalar& operator+=(const RatScalar& o) { return *this = *this + o; }
    RatScalar& operator-=(const RatScalar& o) { return *this = *this - o; }
    RatScalar& operator*=(const RatScalar& o) { return *this = *this * o; }

    friend bool operator==(const RatScalar& a, const RatScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatScalar& a, const RatScalar& b) { return !(a == b); }

    // "num/den"; the "/den" part is omitted when the denominator is 1.
    std::string str() const;

private:
    void canonicalize();

    LaurentPoly num_, den_;
};

// Quantum integer [t] = (v^t - v^-t)/(v - v^-1); [0] = 1 by convention.
LaurentPoly qint(unsigned t);

// [t]! = [t][t-1]...[1]; [0]! = 1.
LaurentPoly qfactorial(unsigned t);

// [[k]]_x at x = v^step: 1 + v^step + ... + v^{(k-1)*step}; k = 0 gives 0.
LaurentPoly bracket_geom(unsigned k, int step);

// prod_{t=1..u} (v^{p-t} - v^{-p+t})/(v^t - v^{-t}); lies in Z[v,v^-1] for
// p > u and vanishes for u >= p (the factor at t = p is zero).
LaurentPoly gauss_binom(unsigned p, unsigned u);

}  // namespace tqs
