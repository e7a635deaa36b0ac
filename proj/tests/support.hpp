#pragma once

#include "ilcp/interval.hpp"
#include "ilcp/linalg.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace ts {

using namespace ilcp;

inline Rational rat(const std::string& s) { return parse_rational(s); }

inline Interval iv(const std::string& lo, const std::string& hi) {
    return Interval(rat(lo), rat(hi));
}
inline Interval pt(const std::string& v) { return Interval::point(rat(v)); }

inline RatVec rv(std::initializer_list<std::string> xs) {
    RatVec v;
    for (const auto& s : xs) v.push_back(rat(s));
    return v;
}

inline RatMat rm(std::initializer_list<std::initializer_list<std::string>> rows) {
    RatMat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& s : r) m(i, j++) = rat(s);
        ++i;
    }
    return m;
}

inline IntervalMatrix imx(std::initializer_list<std::initializer_list<Interval>> rows) {
    IntervalMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& e : r) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

inline IntervalVector ivec(std::initializer_list<Interval> es) {
    return IntervalVector(std::vector<Interval>(es));
}

struct Fixture {
    IntervalMatrix M;
    IntervalVector q;
};

/// 2D family, every member an M-matrix; pieces are a segment and a polygon.
inline Fixture fixture_m2d() {
    return {imx({{iv("1/8", "1"), iv("-1/4", "-1/5")},
                 {iv("-1/4", "-1/5"), pt("1")}}),
            ivec({iv("-3", "-1"), iv("1", "2")})};
}

/// 2D family, every member an H+-matrix.
inline Fixture fixture_h2d() {
    return {imx({{iv("4", "5"), iv("-1", "2")},
                 {iv("-1", "2"), iv("2", "3")}}),
            ivec({iv("-2", "-1"), iv("-1", "1")})};
}

/// 3D family, every member a P-matrix.
inline Fixture fixture_p3d() {
    return {imx({{pt("1"), iv("0", "1/2"), iv("0", "1/2")},
                 {iv("0", "1/2"), pt("1"), iv("0", "1/2")},
                 {iv("0", "1/2"), iv("0", "1/2"), pt("1")}}),
            ivec({pt("-6"), iv("1", "2"), iv("-3", "-2")})};
}

/// 3D family, every member an M-matrix; the full-support piece is a pyramid.
inline Fixture fixture_m3d() {
    return {imx({{iv("1/3", "1/2"), iv("-1/8", "-1/10"), iv("-1/8", "-1/10")},
                 {iv("-1/8", "-1/10"), iv("3/5", "7/10"), iv("-1/5", "-1/6")},
                 {iv("-1/8", "-1/10"), iv("-1/5", "-1/6"), iv("1/2", "2/3")}}),
            ivec({iv("-2", "4"), iv("-2", "3"), iv("1", "2")})};
}

/// 3D family, every member an H+-matrix.
inline Fixture fixture_h3d() {
    return {imx({{iv("4", "5"), iv("-1", "2"), pt("0")},
                 {iv("-1", "2"), iv("2", "3"), pt("1")},
                 {pt("0"), pt("1"), pt("2")}}),
            ivec({iv("-2", "-1"), iv("-1", "1"), iv("-2", "-1")})};
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    // Uniformly among fractions num/den with |num| <= scale, 1 <= den <= den_max.
    Rational rational(int scale = 8, int den_max = 4) {
        int num = integer(-scale, scale);
        int den = integer(1, den_max);
        return Rational(num, den);
    }
    Rational nonneg_rational(int scale = 8, int den_max = 4) {
        int num = integer(0, scale);
        int den = integer(1, den_max);
        return Rational(num, den);
    }
    // Value u + t(v - u) at a random rational t in [0, 1].
    Rational between(const Rational& u, const Rational& v) {
        int den = integer(1, 16);
        int num = integer(0, den);
        return u + (v - u) * Rational(num, den);
    }
};

}  // namespace ts
