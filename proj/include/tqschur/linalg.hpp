#pragma once

// Exact linear algebra over spans of AlgebraElements.  A SpanBasis keeps a
// reduced echelon family: each stored vector has coefficient 1 at its pivot
// (the smallest index in its support under the canonical order) and every
// other stored vector vanishes there.

#include "tqschur/qschur.hpp"

#include <optional>
#include <vector>

namespace tqs {

class SpanBasis {
public:
    SpanBasis() = default;

    // Reduces x against the basis; inserts the residue if nonzero.
    // Returns true if the dimension grew.
    bool insert(const AlgebraElement& x);

    // Residue of x after full reduction (zero iff x is in the span).
    AlgebraElement reduce(const AlgebraElement& x) const;
    bool contains(const AlgebraElement& x) const { return reduce(x).is_zero(); }

    // Coordinates of x in the echelon vectors, or nullopt if x is outside.
    std::optional<std::vector<RatScalar>> coords(const AlgebraElement& x) const;

    size_t dim() const { return vecs_.size(); }
    const std::vector<AlgebraElement>& vectors() const { return vecs_; }

private:
    std::vector<AlgebraElement> vecs_;  // sorted by pivot index
};

SpanBasis span_of(const std::vector<AlgebraElement>& gens);

// True iff the given spans intersect pairwise in 0 and their union spans a
// space of dimension sum of the parts.
bool certify_direct_sum(const std::vector<SpanBasis>& parts);

}  // namespace tqs
