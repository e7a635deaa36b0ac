#pragma once

#include "ilcp/linalg.hpp"

#include <string>
#include <vector>

namespace ilcp {

/// Constraint 0 <= z'Qz + b'z + c with exact coefficients. `pair_i/pair_j`
/// record which symmetric entry (i < j, 0-based) was eliminated to produce
/// it and `side` distinguishes the inequality from its mirror.
struct QuadricInequality {
    RatMat Q;  // symmetric
    RatVec b;
    Rational c;
    int pair_i = 0;
    int pair_j = 1;
    int side = 0;

    Rational eval(const RatVec& z) const;
};

enum class QuadricLabel {
    Ellipsoid,
    HyperboloidFamily,
    HyperbolicParaboloid,
    EllipticParaboloid,
    HyperbolicCylinder,
    EllipticCylinder,
    ParabolicCylinder,
    TwoIntersectingPlanes,
    OtherDegenerate,
};

std::string quadric_label_name(QuadricLabel l);

/// Eigenvalue sign counts of Q (all eigenvalues are real) plus the surface
/// label. For 2D input the label names the cylinder over the conic.
struct QuadricClass {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    QuadricLabel label = QuadricLabel::OtherDegenerate;
};

/// Characteristic polynomial det(Q - x I), ascending coefficients, exact.
std::vector<Rational> char_poly(const RatMat& Q);

/// Sign counts read off the characteristic polynomial by Descartes' rule,
/// which is exact here because a symmetric matrix has an all-real spectrum.
/// The label follows from the signature and the reduced linear/constant
/// part after centering.
QuadricClass classify_quadric(const QuadricInequality& q);

}  // namespace ilcp
