#include "doctest.h"

#include "ilcp/quadric.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>

using namespace ilcp;
using namespace ts;

namespace {

using ts_oracle::signature_oracle;

QuadricInequality make_quadric(const RatMat& Q, const RatVec& b, const Rational& c) {
    QuadricInequality q;
    q.Q = Q;
    q.b = b;
    q.c = c;
    return q;
}

}  // namespace

TEST_CASE("characteristic polynomial on known matrices") {
    auto p = char_poly(RatMat::identity(3));  // (1 - x)^3
    REQUIRE(p.size() == 4);
    CHECK(p[0] == 1);
    CHECK(p[1] == -3);
    CHECK(p[2] == 3);
    CHECK(p[3] == -1);

    RatMat D = rm({{"2", "0"}, {"0", "-5"}});
    auto pd = char_poly(D);
    CHECK(ts_oracle::eval(pd, rat("2")) == 0);
    CHECK(ts_oracle::eval(pd, rat("-5")) == 0);
}

TEST_CASE("unit sphere classifies as an ellipsoid") {
    auto c = classify_quadric(make_quadric(RatMat::identity(3), rv({"0", "0", "0"}), rat("-1")));
    CHECK(c.n_plus == 3);
    CHECK(c.n_minus == 0);
    CHECK(c.n_zero == 0);
    CHECK(c.label == QuadricLabel::Ellipsoid);
}

TEST_CASE("cross-term free boundary shapes are hyperbolic cylinders") {
    // z1^2 - 6 z1 - z3^2 + 3 z3 >= 0 embedded in 3D.
    auto q1 = make_quadric(rm({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"}}),
                           rv({"-6", "0", "3"}), rat("0"));
    auto c1 = classify_quadric(q1);
    CHECK(c1.n_plus == 1);
    CHECK(c1.n_minus == 1);
    CHECK(c1.n_zero == 1);
    CHECK(c1.label == QuadricLabel::HyperbolicCylinder);

    // Reduced constant zero degenerates to two intersecting planes.
    auto q2 = make_quadric(rm({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"}}),
                           rv({"0", "0", "0"}), rat("0"));
    CHECK(classify_quadric(q2).label == QuadricLabel::TwoIntersectingPlanes);
}

TEST_CASE("kernel linear terms give paraboloids and parabolic cylinders") {
    auto hp = make_quadric(rm({{"0", "1/2", "0"}, {"1/2", "0", "0"}, {"0", "0", "0"}}),
                           rv({"0", "0", "-1"}), rat("0"));
    CHECK(classify_quadric(hp).label == QuadricLabel::HyperbolicParaboloid);

    auto ep = make_quadric(rm({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}),
                           rv({"0", "0", "-1"}), rat("0"));
    CHECK(classify_quadric(ep).label == QuadricLabel::EllipticParaboloid);

    auto pc = make_quadric(rm({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                           rv({"0", "-1", "0"}), rat("0"));
    CHECK(classify_quadric(pc).label == QuadricLabel::ParabolicCylinder);

    auto ec = make_quadric(rm({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}),
                           rv({"0", "0", "0"}), rat("-1"));
    CHECK(classify_quadric(ec).label == QuadricLabel::EllipticCylinder);
}

TEST_CASE("mixed full-rank 3D forms are in the hyperboloid family") {
    auto h = make_quadric(rm({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}}),
                          rv({"0", "0", "0"}), rat("-1"));
    auto c = classify_quadric(h);
    CHECK(c.n_plus == 2);
    CHECK(c.n_minus == 1);
    CHECK(c.label == QuadricLabel::HyperboloidFamily);
}

TEST_CASE("one vanishing cross entry still forces mixed signs") {
    // Shape of the all-w-zero analysis when the (1,3) lower entry vanishes
    // but the (2,3) upper entry does not: signature (1, 2, 0).
    auto q = make_quadric(rm({{"-1", "0", "0"}, {"0", "2", "1/2"}, {"0", "1/2", "0"}}),
                          rv({"0", "0", "0"}), rat("0"));
    auto c = classify_quadric(q);
    CHECK(c.n_plus == 1);
    CHECK(c.n_minus == 2);
    CHECK(c.n_zero == 0);
    auto oracle = signature_oracle(q.Q);
    CHECK(oracle.n_plus == c.n_plus);
    CHECK(oracle.n_minus == c.n_minus);
    CHECK(oracle.n_zero == c.n_zero);
}

TEST_CASE("2D conic labels in the cylinder sense") {
    auto hyper = make_quadric(rm({{"1", "0"}, {"0", "-1"}}), rv({"0", "0"}), rat("-1"));
    CHECK(classify_quadric(hyper).label == QuadricLabel::HyperbolicCylinder);
    // z1^2 - z2^2 - z1 - z2 centers to (z1-1/2)^2 - (z2+1/2)^2: two lines.
    auto planes = make_quadric(rm({{"1", "0"}, {"0", "-1"}}), rv({"-1", "-1"}), rat("0"));
    CHECK(classify_quadric(planes).label == QuadricLabel::TwoIntersectingPlanes);
    auto planes0 = make_quadric(rm({{"1", "0"}, {"0", "-1"}}), rv({"0", "0"}), rat("0"));
    CHECK(classify_quadric(planes0).label == QuadricLabel::TwoIntersectingPlanes);
    auto ellipse = make_quadric(rm({{"1", "0"}, {"0", "2"}}), rv({"0", "0"}), rat("-1"));
    CHECK(classify_quadric(ellipse).label == QuadricLabel::EllipticCylinder);
    auto empty = make_quadric(rm({{"1", "0"}, {"0", "2"}}), rv({"0", "0"}), rat("1"));
    CHECK(classify_quadric(empty).label == QuadricLabel::OtherDegenerate);
}

TEST_CASE("degenerate zero form") {
    auto zero = make_quadric(RatMat(3, 3), rv({"0", "0", "0"}), rat("0"));
    CHECK(classify_quadric(zero).label == QuadricLabel::OtherDegenerate);
    CHECK(classify_quadric(zero).n_zero == 3);
}

TEST_CASE("signature agrees with the Sturm/bisection oracle on random symmetric matrices") {
    Rng rng(61);
    for (int it = 0; it < 1000; ++it) {
        RatMat Q(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                Q(i, j) = rng.rational(6, 3);
                Q(j, i) = Q(i, j);
            }
        auto got = classify_quadric(make_quadric(Q, rv({"0", "0", "0"}), rat("0")));
        auto want = signature_oracle(Q);
        CHECK(got.n_plus == want.n_plus);
        CHECK(got.n_minus == want.n_minus);
        CHECK(got.n_zero == want.n_zero);
    }
}
