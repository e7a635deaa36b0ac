#include "doctest.h"

#include "ilcp/interval.hpp"
#include "support.hpp"

using namespace ilcp;
using namespace ts;

TEST_CASE("intersection follows the overlap rule") {
    CHECK(*intersect(iv("1", "3"), iv("2", "5")) == iv("2", "3"));
    CHECK(!intersect(iv("0", "1"), iv("2", "3")));
    // Single-point overlap stays a valid (degenerate) interval.
    CHECK(*intersect(iv("-1", "3/19"), iv("-2", "-1")) == pt("-1"));
}

TEST_CASE("intersection is commutative, idempotent, and contained in both") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational();
        Interval x(std::min(a, b), std::max(a, b));
        Interval y(std::min(c, d), std::max(c, d));
        auto xy = intersect(x, y);
        auto yx = intersect(y, x);
        CHECK(xy.has_value() == yx.has_value());
        if (xy) {
            CHECK(*xy == *yx);
            CHECK(*intersect(x, x) == x);
            CHECK(xy->lo >= x.lo);
            CHECK(xy->hi <= x.hi);
            CHECK(xy->lo >= y.lo);
            CHECK(xy->hi <= y.hi);
        }
    }
}

TEST_CASE("vector intersection is empty as soon as one component is") {
    IntervalVector a = ivec({iv("0", "2"), iv("0", "1")});
    IntervalVector b = ivec({iv("1", "3"), iv("2", "3")});
    CHECK(!intersect(a, b));
    IntervalVector c = ivec({iv("1", "3"), iv("1", "3")});
    auto ac = intersect(a, c);
    REQUIRE(ac.has_value());
    CHECK((*ac)[0] == iv("1", "2"));
    CHECK((*ac)[1] == pt("1"));
}

TEST_CASE("scale_nonneg scales endpoints and rejects negative factors") {
    CHECK(scale_nonneg(iv("-1/4", "-1/5"), rat("10")) == iv("-5/2", "-2"));
    CHECK(scale_nonneg(iv("-7", "3"), rat("0")) == pt("0"));
    CHECK(scale_nonneg(iv("4", "5"), rat("1/19")) == iv("4/19", "5/19"));
    CHECK_THROWS_AS(scale_nonneg(iv("0", "1"), rat("-1")), InvariantError);
}

TEST_CASE("scale_nonneg distributes over nonempty intersections") {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational();
        Interval x(std::min(a, b), std::max(a, b));
        Interval y(std::min(c, d), std::max(c, d));
        Rational t = rng.nonneg_rational();
        auto xy = intersect(x, y);
        if (!xy) continue;
        auto lhs = scale_nonneg(*xy, t);
        auto rhs = intersect(scale_nonneg(x, t), scale_nonneg(y, t));
        REQUIRE(rhs.has_value());
        CHECK(lhs == *rhs);
    }
}

namespace {

// Independent oracle: extreme over all corner choices of the row box and q.
Interval corner_sweep_image(const std::vector<Interval>& row, const RatVec& z, const Interval& q) {
    std::size_t m = row.size();
    Rational lo, hi;
    bool first = true;
    for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
        Rational v = (mask & 1u) ? q.hi : q.lo;
        for (std::size_t j = 0; j < m; ++j)
            v += ((mask >> (j + 1)) & 1u ? row[j].hi : row[j].lo) * z[j];
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
    }
    return Interval(lo, hi);
}

}  // namespace

TEST_CASE("interval_row_image endpoints match the corner-sweep oracle") {
    std::vector<Interval> row = {iv("4", "5"), iv("-1", "2"), pt("0")};
    RatVec z = rv({"1/19", "7/19", "6/19"});
    Interval q = iv("-2", "-1");
    Interval img = interval_row_image(row, z, q);
    CHECK(img == iv("-41/19", "0"));
    CHECK(img == corner_sweep_image(row, z, q));

    // 100 sampled members stay inside the image.
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        Rational v = rng.between(q.lo, q.hi);
        for (std::size_t j = 0; j < row.size(); ++j)
            v += rng.between(row[j].lo, row[j].hi) * z[j];
        CHECK(img.contains(v));
    }
}

TEST_CASE("interval_row_image trivial cases") {
    std::vector<Interval> row = {iv("4", "5"), iv("-1", "2")};
    Interval q = iv("-2", "-1");
    CHECK(interval_row_image(row, rv({"0", "0"}), q) == q);

    std::vector<Interval> points = {pt("2"), pt("1")};
    CHECK(interval_row_image(points, rv({"3", "5"}), pt("-4")) == pt("7"));

    CHECK_THROWS_AS(interval_row_image(row, rv({"1"}), q), InvariantError);
}

TEST_CASE("row image matches the corner sweep on random data") {
    Rng rng(14);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        std::vector<Interval> row;
        RatVec z;
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = rng.rational(), b = rng.rational();
            row.push_back(Interval(std::min(a, b), std::max(a, b)));
            z.push_back(rng.nonneg_rational());
        }
        Rational qa = rng.rational(), qb = rng.rational();
        Interval q(std::min(qa, qb), std::max(qa, qb));
        CHECK(interval_row_image(row, z, q) == corner_sweep_image(row, z, q));
    }
}

TEST_CASE("interval invariants are enforced") {
    CHECK_THROWS_AS(Interval(rat("1"), rat("0")), InvariantError);
    CHECK_THROWS_AS(IntervalVector(std::vector<Interval>{}), InvariantError);
}

TEST_CASE("rational parsing and rendering") {
    CHECK(rat("-0.25") == rat("-1/4"));
    CHECK(rat("0.125") == rat("1/8"));
    CHECK(rat("3") == Rational(3));
    CHECK(rat(" -7/3 ") == Rational(-7, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(rat_string(rat("-7/3")) == "-7/3");
    CHECK(rat_string(rat("4")) == "4");
    CHECK(decimal_string(rat("269/5000")) == "0.0538");
    CHECK(decimal_string(rat("59/500")) == "0.118");
    CHECK(decimal_string(rat("100/3")) == "33.3333");
    CHECK(decimal_string(rat("0")) == "0");
    CHECK(decimal_string(rat("-44")) == "-44");
}
