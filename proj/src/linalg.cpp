#include "tqschur/linalg.hpp"

#include <algorithm>

namespace tqs {

namespace {

AlgebraElement reduce_against(const std::vector<AlgebraElement>& vecs, const AlgebraElement& x,
                              std::vector<RatScalar>* coords) {
    AlgebraElement y = x;
    if (coords) coords->assign(vecs.size(), RatScalar::zero());
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (y.is_zero()) break;
        const SuperMatrixIndex& piv = vecs[i].leading_index();
        RatScalar c = y.coeff(piv);
        if (c.is_zero()) continue;
        y -= vecs[i].scaled(c);
        if (coords) (*coords)[i] = c;
    }
    return y;
}

}  // namespace

bool SpanBasis::insert(const AlgebraElement& x) {
    AlgebraElement y = reduce_against(vecs_, x, nullptr);
    if (y.is_zero()) return false;
    y = y.scaled(y.coeff(y.leading_index()).inverse());
    // keep the family reduced: clear the new pivot from the old vectors
    for (auto& v : vecs_) {
        RatScalar c = v.coeff(y.leading_index());
        if (!c.is_zero()) v -= y.scaled(c);
    }
    auto pos = std::lower_bound(vecs_.begin(), vecs_.end(), y,
                                [](const AlgebraElement& a, const AlgebraElement& b) {
                                    return a.leading_index() < b.leading_index();
                                });
    vecs_.insert(pos, std::move(y));
    return true;
}

AlgebraElement SpanBasis::reduce(const AlgebraElement& x) const {
    return reduce_against(vecs_, x, nullptr);
}

std::optional<std::vector<RatScalar>> SpanBasis::coords(const AlgebraElement& x) const {
    std::vector<RatScalar> c;
    if (!reduce_against(vecs_, x, &c).is_zero()) return std::nullopt;
    return c;
}

SpanBasis span_of(const std::vector<AlgebraElement>& gens) {
    SpanBasis s;
    for (auto& g : gens) s.insert(g);
    return s;
}

bool certify_direct_sum(const std::vector<SpanBasis>& parts) {
    SpanBasis total;
    size_t expected = 0;
    for (auto& p : parts) {
        expected += p.dim();
        for (auto& v : p.vectors()) total.insert(v);
    }
    return total.dim() == expected;
}

}  // namespace tqs
