#pragma once

#include "ilcp/rational.hpp"

#include <optional>
#include <vector>

namespace ilcp {

/// Closed interval [lo, hi] with exact rational endpoints. Degenerate
/// (point) intervals are allowed; lo <= hi is enforced on construction.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InvariantError("interval endpoints out of order");
    }
    static Interval point(const Rational& v) { return Interval(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

struct IntervalVector {
    std::vector<Interval> ent;

    IntervalVector() = default;
    explicit IntervalVector(std::vector<Interval> e) : ent(std::move(e)) {
        if (ent.empty()) throw InvariantError("interval vector must have n >= 1");
    }
    std::size_t size() const { return ent.size(); }
    const Interval& operator[](std::size_t i) const { return ent[i]; }

    RatVec lower() const;
    RatVec upper() const;
};

struct IntervalMatrix {
    std::size_t n = 0;
    std::vector<Interval> ent;  // row-major

    IntervalMatrix() = default;
    explicit IntervalMatrix(std::size_t dim) : n(dim), ent(dim * dim) {}

    const Interval& at(std::size_t i, std::size_t j) const { return ent[i * n + j]; }
    Interval& at(std::size_t i, std::size_t j) { return ent[i * n + j]; }

    std::vector<Interval> row(std::size_t i) const {
        return {ent.begin() + static_cast<long>(i * n), ent.begin() + static_cast<long>((i + 1) * n)};
    }
};

/// Empty is a distinct outcome, not a sentinel interval.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

std::optional<IntervalVector> intersect(const IntervalVector& a, const IntervalVector& b);

/// [t*lo, t*hi] for t >= 0. The general sign-case interval product is
/// deliberately not provided; the set computations only ever scale by
/// nonnegative z-coordinates.
Interval scale_nonneg(const Interval& a, const Rational& t);

/// Exact range of q_i + sum_j m_ij * z_j over all m_ij in the row box and
/// q_i in its interval, for z >= 0.
Interval interval_row_image(const std::vector<Interval>& row, const RatVec& z, const Interval& q_i);

}  // namespace ilcp
