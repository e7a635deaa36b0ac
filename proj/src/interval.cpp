#include "ilcp/interval.hpp"

namespace ilcp {

RatVec IntervalVector::lower() const {
    RatVec v;
    v.reserve(ent.size());
    for (const auto& e : ent) v.push_back(e.lo);
    return v;
}

RatVec IntervalVector::upper() const {
    RatVec v;
    v.reserve(ent.size());
    for (const auto& e : ent) v.push_back(e.hi);
    return v;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    if (a.lo <= b.hi && b.lo <= a.hi)
        return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
    return std::nullopt;
}

std::optional<IntervalVector> intersect(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw InvariantError("interval vector intersection: dimension mismatch");
    std::vector<Interval> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = intersect(a[i], b[i]);
        if (!c) return std::nullopt;
        out.push_back(*c);
    }
    return IntervalVector(std::move(out));
}

Interval scale_nonneg(const Interval& a, const Rational& t) {
    if (t < 0) throw InvariantError("scale_nonneg requires t >= 0");
    return Interval(t * a.lo, t * a.hi);
}

Interval interval_row_image(const std::vector<Interval>& row, const RatVec& z, const Interval& q_i) {
    if (row.size() != z.size()) throw InvariantError("interval_row_image: dimension mismatch");
    Rational lo = q_i.lo;
    Rational hi = q_i.hi;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (z[j] < 0) throw InvariantError("interval_row_image requires z >= 0");
        lo += row[j].lo * z[j];
        hi += row[j].hi * z[j];
    }
    return Interval(lo, hi);
}

}  // namespace ilcp
