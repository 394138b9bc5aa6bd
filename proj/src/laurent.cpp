#include "tqschur/laurent.hpp"

#include <sstream>
#include <vector>

namespace tqs {

namespace {

// Dense ordinary polynomial over Q, used only inside division/gcd.
using Dense = std::vector<Rat>;

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d(static_cast<size_t>(p.max_exp() - shift) + 1, Rat(0));
    for (auto& [e, c] : p.terms()) d[static_cast<size_t>(e - shift)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly r;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) r += LaurentPoly(d[i], static_cast<int>(i) + shift);
    return r;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder of a by b, both trimmed, b nonempty; a is consumed.
Dense dense_rem(Dense a, const Dense& b) {
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    if (a.is_zero()) return LaurentPoly::zero();
    int sa = a.min_exp(), sb = b.min_exp();
    Dense da = to_dense(a, sa), db = to_dense(b, sb);
    Dense q(da.size(), Rat(0));
    while (da.size() >= db.size()) {
        Rat f = da.back() / db.back();
        size_t off = da.size() - db.size();
        q[off] = f;
        for (size_t i = 0; i < db.size(); ++i) da[off + i] -= f * db[i];
        trim(da);
        if (da.empty()) break;
    }
    if (!da.empty()) throw std::domain_error("div_exact: not divisible");
    trim(q);
    return from_dense(q, sa - sb);
}

namespace {

// Scale to integer coefficients with content 1 and positive lowest
// coefficient; exposes the canonical associate.
LaurentPoly make_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int l = 1;
    for (auto& [e, c] : p.terms()) l = lcm(l, denominator(c));
    Int g = 0;
    for (auto& [e, c] : p.terms()) g = gcd(g, Int(numerator(c) * (l / denominator(c))));
    Rat scale = Rat(l, g);
    if (p.terms().begin()->second < 0) scale = -scale;
    return p.scaled(scale);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : make_primitive(b.shifted(-b.min_exp()));
    if (b.is_zero()) return make_primitive(a.shifted(-a.min_exp()));
    Dense x = to_dense(a, a.min_exp());
    Dense y = to_dense(b, b.min_exp());
    while (!y.empty()) {
        Dense r = dense_rem(x, y);
        // Keep the remainder monic so coefficient growth stays tame.
        if (!r.empty()) {
            Rat lead = r.back();
            for (auto& c : r) c /= lead;
        }
        x = std::move(y);
        y = std::move(r);
    }
    return make_primitive(from_dense(x, 0));
}

void RatScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    // Fold the denominator's v-valuation into the numerator.
    int s = den_.min_exp();
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
    // Joint scaling: integer coefficients, coprime contents, positive
    // lowest denominator coefficient.
    Int l = 1;
    for (auto& [e, c] : num_.terms()) l = lcm(l, denominator(c));
    for (auto& [e, c] : den_.terms()) l = lcm(l, denominator(c));
    Int g2 = 0;
    for (auto& [e, c] : num_.terms()) g2 = gcd(g2, Int(numerator(c) * (l / denominator(c))));
    for (auto& [e, c] : den_.terms()) g2 = gcd(g2, Int(numerator(c) * (l / denominator(c))));
    Rat scale = Rat(l, g2);
    if (den_.terms().begin()->second < 0) scale = -scale;
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const Rat& c = it->second;
        if (denominator(c) == 1)
            os << numerator(c);
        else
            os << numerator(c) << "/" << denominator(c);
        os << "*v^" << it->first;
    }
    return os.str();
}

std::string RatScalar::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

LaurentPoly qint(unsigned t) {
    if (t == 0) return LaurentPoly::one();  // [0] = 1 convention
    LaurentPoly r;
    for (int k = static_cast<int>(t) - 1; k >= -static_cast<int>(t) + 1; k -= 2)
        r += LaurentPoly::v_pow(k);
    return r;
}

LaurentPoly qfactorial(unsigned t) {
    LaurentPoly r = LaurentPoly::one();
    for (unsigned k = 2; k <= t; ++k) r = r * qint(k);
    return r;
}

LaurentPoly bracket_geom(unsigned k, int step) {
    LaurentPoly r;
    for (unsigned i = 0; i < k; ++i) r += LaurentPoly::v_pow(static_cast<int>(i) * step);
    return r;
}

LaurentPoly gauss_binom(unsigned p, unsigned u) {
    if (u >= p) return LaurentPoly::zero();
    RatScalar r = RatScalar::one();
    for (unsigned t = 1; t <= u; ++t) {
        LaurentPoly num = LaurentPoly::v_pow(static_cast<int>(p - t)) -
                          LaurentPoly::v_pow(-static_cast<int>(p) + static_cast<int>(t));
        LaurentPoly den = LaurentPoly::v_pow(static_cast<int>(t)) -
                          LaurentPoly::v_pow(-static_cast<int>(t));
        r = r * RatScalar(num, den);
    }
    if (!r.is_laurent())
        throw std::logic_error("gauss_binom: integrality failed");
    return r.num();
}

}  // namespace tqs
