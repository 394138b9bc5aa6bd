#include "tqschur/qschur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tqs {

GeneratorName gen_K(int i) { return {GenKind::K, i}; }
GeneratorName gen_Kinv(int i) { return {GenKind::Kinv, i}; }
GeneratorName gen_Kbar(int i) { return {GenKind::Kbar, i}; }
GeneratorName gen_E(int j) { return {GenKind::E, j}; }
GeneratorName gen_Ebar(int j) { return {GenKind::Ebar, j}; }
GeneratorName gen_F(int j) { return {GenKind::F, j}; }
GeneratorName gen_Fbar(int j) { return {GenKind::Fbar, j}; }

std::string GeneratorName::str() const {
    std::ostringstream os;
    switch (kind) {
        case GenKind::K: os << "K" << index; break;
        case GenKind::Kinv: os << "K" << index << "^-1"; break;
        case GenKind::Kbar: os << "Kbar" << index; break;
        case GenKind::E: os << "E" << index; break;
        case GenKind::Ebar: os << "Ebar" << index; break;
        case GenKind::F: os << "F" << index; break;
        case GenKind::Fbar: os << "Fbar" << index; break;
    }
    return os.str();
}

AlgebraElement AlgebraElement::basis(const SuperMatrixIndex& a, int r) {
    if (a.total() != r) throw std::invalid_argument("basis: |A*| != r");
    AlgebraElement x(a.n, r);
    x.add_term(a, RatScalar::one());
    return x;
}

void AlgebraElement::add_term(const SuperMatrixIndex& a, const RatScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatScalar AlgebraElement::coeff(const SuperMatrixIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? RatScalar::zero() : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && terms_.empty() && n_ == 0) { n_ = o.n_; r_ = o.r_; }
    if (n_ != o.n_ || r_ != o.r_)
        throw std::invalid_argument("AlgebraElement: mixed (n,r) contexts");
    for (auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    return *this += o.scaled(-RatScalar::one());
}

AlgebraElement AlgebraElement::scaled(const RatScalar& c) const {
    AlgebraElement r(n_, r_);
    if (c.is_zero()) return r;
    for (auto& [a, k] : terms_) r.terms_.emplace(a, k * c);
    return r;
}

const SuperMatrixIndex& AlgebraElement::leading_index() const {
    if (terms_.empty()) throw std::logic_error("leading_index of zero element");
    return terms_.begin()->first;
}

namespace {

// Coefficient families of the basis-level action formulas, fixed by exact
// comparison against the Hecke-Clifford model (see the oracle test
// suite): an even entry moving between rows contributes a base-v^2
// geometric bracket, merging two odd entries contributes the difference
// of the v^2 and v^4 brackets (the same on the E and F sides), and
// flipping an odd entry to even under Kbar_n contributes a base-v^4
// bracket.
RatScalar brk_single(int m) { return RatScalar(bracket_geom(static_cast<unsigned>(m), 2)); }
RatScalar brk_double(int m) {
    return RatScalar(bracket_geom(static_cast<unsigned>(m), 2) -
                     bracket_geom(static_cast<unsigned>(m), 4));
}
RatScalar brk_double_rev(int m) { return brk_double(m); }
RatScalar brk_flip(int m) { return RatScalar(bracket_geom(static_cast<unsigned>(m), 4)); }

// Partial sums over row h of A = A0 + A1: entries strictly before /
// strictly after column k (columns are 1-based here).
int row_prefix(const SuperMatrixIndex& a, int h, int k) {
    int s = 0;
    for (int u = 1; u < k; ++u) s += a.a(h - 1, u - 1);
    return s;
}
int row_suffix(const SuperMatrixIndex& a, int h, int k) {
    int s = 0;
    for (int u = k + 1; u <= a.n; ++u) s += a.a(h - 1, u - 1);
    return s;
}

// Sign exponent of the Kbar_n formula: odd entries strictly before the
// cell (n,k) in the column-major reading order, i.e. all odd entries in
// columns < k together with those above row n inside column k.
int col_odd_above(const SuperMatrixIndex& a, int k) {
    int s = 0;
    for (int j = 1; j < k; ++j)
        for (int i = 1; i <= a.n; ++i) s += a.o(i - 1, j - 1);
    for (int i = 1; i < a.n; ++i) s += a.o(i - 1, k - 1);
    return s;
}

void act_E_on_basis(int h, const SuperMatrixIndex& a, const RatScalar& c, AlgebraElement& out) {
    int n = a.n;
    Composition lam = a.row_sums();
    RatScalar pre = c * RatScalar::v_pow(-lam[static_cast<size_t>(h - 1)]);
    for (int k = 1; k <= n; ++k) {
        int bk = row_suffix(a, h, k);
        // even entry moves up: A0 - E_{h+1,k} + E_{h,k}
        if (a.e(h, k - 1) >= 1) {
            SuperMatrixIndex b = a;
            b.e(h, k - 1) -= 1;
            b.e(h - 1, k - 1) += 1;
            out.add_term(b, pre * RatScalar::v_pow(2 * bk + 2 * a.o(h, k - 1)) *
                                brk_single(a.e(h - 1, k - 1) + 1));
        }
        // odd entry moves up: A1 - E_{h+1,k} + E_{h,k}
        if (a.o(h, k - 1) == 1 && a.o(h - 1, k - 1) == 0) {
            SuperMatrixIndex b = a;
            b.o(h, k - 1) = 0;
            b.o(h - 1, k - 1) = 1;
            out.add_term(b, pre * RatScalar::v_pow(2 * bk));
        }
        // two odd entries merge: A0 + 2E_{h,k}, A1 - E_{h,k} - E_{h+1,k}
        if (a.o(h - 1, k - 1) == 1 && a.o(h, k - 1) == 1) {
            SuperMatrixIndex b = a;
            b.o(h - 1, k - 1) = 0;
            b.o(h, k - 1) = 0;
            b.e(h - 1, k - 1) += 2;
            out.add_term(b, pre * RatScalar::v_pow(2 * bk - 2) * brk_double(a.a(h - 1, k - 1) + 1));
        }
    }
}

void act_F_on_basis(int h, const SuperMatrixIndex& a, const RatScalar& c, AlgebraElement& out) {
    int n = a.n;
    Composition lam = a.row_sums();
    RatScalar pre = c * RatScalar::v_pow(-lam[static_cast<size_t>(h)]);
    for (int k = 1; k <= n; ++k) {
        int ak = row_prefix(a, h + 1, k);
        if (a.e(h - 1, k - 1) >= 1) {
            SuperMatrixIndex b = a;
            b.e(h - 1, k - 1) -= 1;
            b.e(h, k - 1) += 1;
            out.add_term(b, pre * RatScalar::v_pow(2 * ak) * brk_single(a.e(h, k - 1) + 1));
        }
        if (a.o(h - 1, k - 1) == 1 && a.o(h, k - 1) == 0) {
            SuperMatrixIndex b = a;
            b.o(h - 1, k - 1) = 0;
            b.o(h, k - 1) = 1;
            out.add_term(b, pre * RatScalar::v_pow(2 * ak + 2 * a.a(h - 1, k - 1) - 2));
        }
        if (a.o(h - 1, k - 1) == 1 && a.o(h, k - 1) == 1) {
            SuperMatrixIndex b = a;
            b.o(h - 1, k - 1) = 0;
            b.o(h, k - 1) = 0;
            b.e(h, k - 1) += 2;
            out.add_term(b, pre * RatScalar::v_pow(2 * ak + 2 * a.a(h - 1, k - 1) - 4) *
                                brk_double_rev(a.a(h, k - 1) + 1));
        }
    }
}

void act_Kbar_n_on_basis(const SuperMatrixIndex& a, const RatScalar& c, AlgebraElement& out) {
    int n = a.n;
    Composition lam = a.row_sums();
    int par = a.parity();
    RatScalar pre = c * RatScalar::v_pow(-lam[static_cast<size_t>(n - 1)] + 1);
    for (int k = 1; k <= n; ++k) {
        int bk = row_suffix(a, n, k);
        int sgn = col_odd_above(a, k) + par;
        // even entry becomes odd at (n,k)
        if (a.e(n - 1, k - 1) >= 1 && a.o(n - 1, k - 1) == 0) {
            SuperMatrixIndex b = a;
            b.e(n - 1, k - 1) -= 1;
            b.o(n - 1, k - 1) = 1;
            RatScalar coeff = pre * RatScalar::v_pow(2 * bk);
            if (sgn % 2 != 0) coeff = -coeff;
            out.add_term(b, coeff);
        }
        // odd entry becomes even at (n,k)
        if (a.o(n - 1, k - 1) == 1) {
            SuperMatrixIndex b = a;
            b.o(n - 1, k - 1) = 0;
            b.e(n - 1, k - 1) += 1;
            RatScalar coeff = pre * RatScalar::v_pow(2 * bk) * brk_flip(a.a(n - 1, k - 1));
            if ((sgn + 1) % 2 != 0) coeff = -coeff;
            out.add_term(b, coeff);
        }
    }
}

}  // namespace

AlgebraElement act_base_generator(const GeneratorName& g, const AlgebraElement& x) {
    int n = x.n();
    AlgebraElement out(n, x.r());
    switch (g.kind) {
        case GenKind::K:
        case GenKind::Kinv: {
            if (g.index < 1 || g.index > n) throw std::invalid_argument("K index out of range");
            int sign = g.kind == GenKind::K ? 1 : -1;
            for (auto& [a, c] : x.terms()) {
                Composition lam = a.row_sums();
                out.add_term(a, c * RatScalar::v_pow(sign * lam[static_cast<size_t>(g.index - 1)]));
            }
            return out;
        }
        case GenKind::E:
            if (g.index < 1 || g.index >= n) throw std::invalid_argument("E index out of range");
            for (auto& [a, c] : x.terms()) act_E_on_basis(g.index, a, c, out);
            return out;
        case GenKind::F:
            if (g.index < 1 || g.index >= n) throw std::invalid_argument("F index out of range");
            for (auto& [a, c] : x.terms()) act_F_on_basis(g.index, a, c, out);
            return out;
        case GenKind::Kbar:
            if (g.index != n) throw std::invalid_argument("act_base_generator: only Kbar_n is basic");
            for (auto& [a, c] : x.terms()) act_Kbar_n_on_basis(a, c, out);
            return out;
        default:
            throw std::invalid_argument("act_base_generator: derived generator " + g.str());
    }
}

namespace {

// One summand of a derived-generator identity: coeff * (word applied
// right to left).
struct WordTerm {
    RatScalar coeff;
    std::vector<GeneratorName> word;
};

AlgebraElement eval_terms(const std::vector<WordTerm>& terms, const AlgebraElement& x) {
    AlgebraElement out(x.n(), x.r());
    for (auto& t : terms) {
        AlgebraElement y = x;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) y = act_generator(*it, y);
        out += y.scaled(t.coeff);
    }
    return out;
}

}  // namespace

AlgebraElement act_generator(const GeneratorName& g, const AlgebraElement& x) {
    int n = x.n();
    const RatScalar v = RatScalar::v_pow(1);
    const RatScalar vinv = RatScalar::v_pow(-1);
    switch (g.kind) {
        case GenKind::K:
        case GenKind::Kinv:
        case GenKind::E:
        case GenKind::F:
            return act_base_generator(g, x);
        case GenKind::Kbar: {
            int j = g.index;
            if (j == n) return act_base_generator(g, x);
            if (j < 1 || j > n) throw std::invalid_argument("Kbar index out of range");
            return eval_terms(
                {{v, {gen_E(j), gen_Kinv(j + 1), gen_Kbar(j + 1), gen_F(j), gen_K(j + 1)}},
                 {-vinv, {gen_E(j), gen_F(j), gen_Kinv(j + 1), gen_Kbar(j + 1), gen_K(j + 1)}},
                 {-v, {gen_Kinv(j + 1), gen_Kbar(j + 1), gen_F(j), gen_E(j), gen_K(j + 1)}},
                 {vinv, {gen_F(j), gen_Kinv(j + 1), gen_Kbar(j + 1), gen_E(j), gen_K(j + 1)}},
                 {RatScalar::one(), {gen_Kinv(j), gen_Kbar(j + 1), gen_K(j + 1)}}},
                x);
        }
        case GenKind::Ebar: {
            int j = g.index;
            if (j < 1 || j >= n) throw std::invalid_argument("Ebar index out of range");
            return eval_terms({{-v, {gen_K(j + 1), gen_Kbar(j + 1), gen_E(j)}},
                               {vinv, {gen_E(j), gen_K(j + 1), gen_Kbar(j + 1)}}},
                              x);
        }
        case GenKind::Fbar: {
            int j = g.index;
            if (j < 1 || j >= n) throw std::invalid_argument("Fbar index out of range");
            return eval_terms({{v, {gen_Kinv(j + 1), gen_Kbar(j + 1), gen_F(j)}},
                               {-vinv, {gen_F(j), gen_Kinv(j + 1), gen_Kbar(j + 1)}}},
                              x);
        }
    }
    throw std::logic_error("act_generator: unreachable");
}

AlgebraElement apply_word(const std::vector<GeneratorName>& word, const AlgebraElement& x) {
    AlgebraElement y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = act_generator(*it, y);
    return y;
}

AlgebraElement long_element(const SuperMatrixIndex& a, const std::vector<int>& j, int r) {
    if (!a.zero_even_diagonal())
        throw std::invalid_argument("long_element: even diagonal must vanish");
    if (static_cast<int>(j.size()) != a.n)
        throw std::invalid_argument("long_element: bad exponent vector length");
    AlgebraElement out(a.n, r);
    int rest = r - a.total();
    if (rest < 0) return out;
    for (auto& lam : enumerate_compositions(a.n, rest)) {
        SuperMatrixIndex b = a;
        for (int i = 0; i < a.n; ++i) b.e(i, i) += lam[static_cast<size_t>(i)];
        int dot = 0;
        for (int i = 0; i < a.n; ++i) dot += lam[static_cast<size_t>(i)] * j[static_cast<size_t>(i)];
        out.add_term(b, RatScalar::v_pow(dot - delta(b)));
    }
    return out;
}

AlgebraElement generator_image(const GeneratorName& g, int n, int r) {
    SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
    std::vector<int> j(static_cast<size_t>(n), 0);
    switch (g.kind) {
        case GenKind::K:
            j[static_cast<size_t>(g.index - 1)] = 1;
            break;
        case GenKind::Kinv:
            j[static_cast<size_t>(g.index - 1)] = -1;
            break;
        case GenKind::Kbar:
            a.o(g.index - 1, g.index - 1) = 1;
            break;
        case GenKind::E:
            a.e(g.index - 1, g.index) = 1;
            break;
        case GenKind::Ebar:
            a.o(g.index - 1, g.index) = 1;
            break;
        case GenKind::F:
            a.e(g.index, g.index - 1) = 1;
            break;
        case GenKind::Fbar:
            a.o(g.index, g.index - 1) = 1;
            break;
    }
    return long_element(a, j, r);
}

AlgebraElement unit_element(int n, int r) {
    SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
    return long_element(a, std::vector<int>(static_cast<size_t>(n), 0), r);
}

AlgebraElement divided_power_F(int j, unsigned p, const AlgebraElement& x) {
    AlgebraElement y = x;
    for (unsigned i = 0; i < p; ++i) y = act_base_generator(gen_F(j), y);
    if (p >= 2) y = y.scaled(RatScalar(qfactorial(p)).inverse());
    return y;
}

AlgebraElement kappa(const std::vector<int>& kvec, int n, int r) {
    if (static_cast<int>(kvec.size()) != n) throw std::invalid_argument("kappa: bad k length");
    AlgebraElement out(n, r);
    for (auto& lam : enumerate_compositions(n, r)) {
        RatScalar c = RatScalar::one();
        for (int i = 0; i < n && !c.is_zero(); ++i) {
            int li = lam[static_cast<size_t>(i)];
            for (int t = 1; t <= kvec[static_cast<size_t>(i)]; ++t) {
                LaurentPoly num = LaurentPoly::v_pow(li + 1 - t) - LaurentPoly::v_pow(-li - 1 + t);
                LaurentPoly den = LaurentPoly::v_pow(t) - LaurentPoly::v_pow(-t);
                if (num.is_zero()) {
                    c = RatScalar::zero();
                    break;
                }
                c = c * RatScalar(num, den);
            }
        }
        if (c.is_zero()) continue;
        SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
        for (int i = 0; i < n; ++i) a.e(i, i) = lam[static_cast<size_t>(i)];
        out.add_term(a, c);
    }
    return out;
}

AlgebraElement weight_component(const AlgebraElement& x, const Composition& lambda) {
    AlgebraElement out(x.n(), x.r());
    for (auto& [a, c] : x.terms())
        if (a.row_sums() == lambda) out.add_term(a, c);
    return out;
}

std::vector<Composition> weights_of(const AlgebraElement& x) {
    std::vector<Composition> out;
    for (auto& [a, c] : x.terms()) {
        Composition w = a.row_sums();
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

}  // namespace tqs
