#include "ilcp/quadric.hpp"

namespace ilcp {

Rational QuadricInequality::eval(const RatVec& z) const {
    Rational v = c;
    for (std::size_t i = 0; i < z.size(); ++i) {
        v += b[i] * z[i];
        for (std::size_t j = 0; j < z.size(); ++j) v += Q(i, j) * z[i] * z[j];
    }
    return v;
}

std::string quadric_label_name(QuadricLabel l) {
    switch (l) {
        case QuadricLabel::Ellipsoid: return "ellipsoid";
        case QuadricLabel::HyperboloidFamily: return "hyperboloid-family";
        case QuadricLabel::HyperbolicParaboloid: return "hyperbolic-paraboloid";
        case QuadricLabel::EllipticParaboloid: return "elliptic-paraboloid";
        case QuadricLabel::HyperbolicCylinder: return "hyperbolic-cylinder";
        case QuadricLabel::EllipticCylinder: return "elliptic-cylinder";
        case QuadricLabel::ParabolicCylinder: return "parabolic-cylinder";
        case QuadricLabel::TwoIntersectingPlanes: return "two-intersecting-planes";
        case QuadricLabel::OtherDegenerate: return "other-degenerate";
    }
    return "?";
}

std::vector<Rational> char_poly(const RatMat& Q) {
    if (!Q.square()) throw InvariantError("char_poly: non-square matrix");
    const std::size_t n = Q.rows;
    // Faddeev-LeVerrier recurrence for det(xI - Q), exact.
    std::vector<Rational> cdesc(n + 1);  // descending coefficients, monic
    cdesc[0] = 1;
    RatMat Mk = Q;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMat shifted = Mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += cdesc[k - 1];
            Mk = mat_mul(Q, shifted);
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += Mk(i, i);
        cdesc[k] = -tr / Rational(static_cast<int>(k));
    }
    // det(Q - xI) = (-1)^n det(xI - Q); return ascending in x.
    std::vector<Rational> asc(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational v = cdesc[n - k];
        if (n % 2 == 1) v = -v;
        asc[k] = v;
    }
    return asc;
}

namespace {

int descartes_sign_changes(const std::vector<Rational>& asc) {
    int changes = 0;
    int prev = 0;
    for (const auto& coef : asc) {
        int s = sign(coef);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

QuadricClass classify_quadric(const QuadricInequality& q) {
    const std::size_t n = q.Q.rows;
    if (n < 2 || n > 3) throw InvariantError("classify_quadric supports n in {2,3}");

    std::vector<Rational> p = char_poly(q.Q);
    QuadricClass out;
    std::size_t t = 0;
    while (t < p.size() && p[t] == 0) ++t;
    out.n_zero = static_cast<int>(t);
    std::vector<Rational> reduced(p.begin() + static_cast<long>(t), p.end());
    out.n_plus = descartes_sign_changes(reduced);
    std::vector<Rational> reflected = reduced;
    for (std::size_t k = 0; k < reflected.size(); ++k)
        if (k % 2 == 1) reflected[k] = -reflected[k];
    out.n_minus = descartes_sign_changes(reflected);
    if (out.n_plus + out.n_minus + out.n_zero != static_cast<int>(n))
        throw InvariantError("eigenvalue signature does not sum to the dimension");

    const int r = out.n_plus + out.n_minus;
    const bool mixed = out.n_plus > 0 && out.n_minus > 0;

    if (r == 0) {
        out.label = QuadricLabel::OtherDegenerate;  // no quadratic part
        return out;
    }

    // Linear part along the kernel of Q <=> b not in the image.
    bool b_in_image = true;
    if (out.n_zero > 0) {
        RatMat aug(n, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = q.Q(i, j);
            aug(i, n) = q.b[i];
        }
        b_in_image = rank(aug) == n - static_cast<std::size_t>(out.n_zero);
    }

    if (!b_in_image) {
        if (r == 1) {
            out.label = QuadricLabel::ParabolicCylinder;
        } else {
            out.label = mixed ? QuadricLabel::HyperbolicParaboloid : QuadricLabel::EllipticParaboloid;
        }
        return out;
    }

    // Center the quadric: with Qy = b the reduced constant is c - b'y/4.
    AffineSolution ys = solve_affine(q.Q, q.b);
    if (!ys.consistent) throw InvariantError("b in image but centering failed");
    Rational bty = 0;
    for (std::size_t i = 0; i < n; ++i) bty += q.b[i] * ys.particular[i];
    Rational c0 = q.c - bty / 4;

    if (mixed) {
        // 3D full rank: hyperboloid of one/two sheets, cone at c0 = 0.
        // Rank 2 is the cylinder over a hyperbola; for n = 2 the label
        // likewise names the cylinder over the conic.
        if (n == 3 && r == 3)
            out.label = QuadricLabel::HyperboloidFamily;
        else if (c0 == 0)
            out.label = QuadricLabel::TwoIntersectingPlanes;
        else
            out.label = QuadricLabel::HyperbolicCylinder;
    } else {
        int eig_sign = out.n_plus > 0 ? 1 : -1;
        bool real_section = sign(c0) != 0 && sign(c0) != eig_sign;
        if (!real_section)
            out.label = QuadricLabel::OtherDegenerate;  // point, line, or empty
        else if (n == 3 && r == 3)
            out.label = QuadricLabel::Ellipsoid;
        else if (r == 2)
            out.label = QuadricLabel::EllipticCylinder;
        else
            out.label = QuadricLabel::OtherDegenerate;  // rank 1: parallel planes
    }
    return out;
}

}  // namespace ilcp
