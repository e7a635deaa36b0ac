#include "ilcp/polyhedron.hpp"

#include "ilcp/linalg.hpp"

#include <algorithm>

namespace ilcp {

namespace {

RatVec primitive(RatVec v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        g = gcd(g, numerator(x));
    }
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Polyhedron vertex_enumeration(const LinearSystem& sys) {
    Polyhedron out;
    out.halfspaces = sys;
    const std::size_t d = sys.dim();
    const std::size_t D = d + 1;  // homogenization: y = (x, t), t >= 0

    // Homogenized general rows g.y <= 0 from a.x <= c: g = (a, -c).
    std::vector<RatVec> general;
    for (const auto& c : sys.cons) {
        RatVec g(D);
        for (std::size_t j = 0; j < d; ++j) g[j] = (c.rel == Rel::LE) ? c.coeffs[j] : -c.coeffs[j];
        g[d] = (c.rel == Rel::LE) ? -c.rhs : c.rhs;
        general.push_back(std::move(g));
    }

    // The orthant rows -y_i <= 0 seed a pointed cone whose extreme rays are
    // the unit vectors; general rows are then added one at a time.
    std::vector<RatVec> processed;
    for (std::size_t i = 0; i < D; ++i) {
        RatVec g(D, Rational(0));
        g[i] = -1;
        processed.push_back(std::move(g));
    }
    std::vector<RatVec> rays;
    for (std::size_t i = 0; i < D; ++i) {
        RatVec e(D, Rational(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }

    auto adjacent = [&](const RatVec& p, const RatVec& q) {
        std::vector<const RatVec*> common;
        for (const auto& row : processed)
            if (dot(row, p) == 0 && dot(row, q) == 0) common.push_back(&row);
        if (common.size() < D - 2) return false;
        RatMat m(common.size(), D);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = 0; j < D; ++j) m(i, j) = (*common[i])[j];
        return rank(std::move(m)) == D - 2;
    };

    for (const auto& g : general) {
        std::vector<RatVec> keep, plus, minus;
        for (auto& r : rays) {
            Rational v = dot(g, r);
            if (v > 0)
                plus.push_back(std::move(r));
            else if (v < 0)
                minus.push_back(std::move(r));
            else
                keep.push_back(std::move(r));
        }
        std::vector<RatVec> fresh;
        for (const auto& p : plus)
            for (const auto& q : minus) {
                if (!adjacent(p, q)) continue;
                Rational gp = dot(g, p), gq = dot(g, q);
                RatVec r(D);
                for (std::size_t j = 0; j < D; ++j) r[j] = gp * q[j] - gq * p[j];
                fresh.push_back(primitive(std::move(r)));
            }
        processed.push_back(g);
        rays = std::move(keep);
        for (auto& q : minus) rays.push_back(std::move(q));
        std::sort(fresh.begin(), fresh.end(), lex_less);
        fresh.erase(std::unique(fresh.begin(), fresh.end(), vec_eq), fresh.end());
        for (auto& r : fresh) rays.push_back(std::move(r));
        if (rays.empty()) break;
    }

    for (const auto& r : rays) {
        if (r[d] > 0) {
            RatVec x(d);
            for (std::size_t j = 0; j < d; ++j) x[j] = r[j] / r[d];
            out.vertices.push_back(std::move(x));
        } else {
            RatVec x(r.begin(), r.begin() + static_cast<long>(d));
            out.rays.push_back(primitive(std::move(x)));
        }
    }

    if (out.vertices.empty()) {
        // A pointed feasible set has a vertex; none means infeasible.
        out.rays.clear();
        FmFeasibility f = fm_feasibility(sys);
        if (f.feasible) throw InvariantError("vertex enumeration found no vertex of a feasible system");
        out.infeasibility_witness = f.farkas;
        return out;
    }

    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end(), vec_eq), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end(), vec_eq), out.rays.end());

    for (const auto& v : out.vertices)
        if (!satisfies(sys, v)) throw InvariantError("enumerated vertex violates its system");
    return out;
}

}  // namespace ilcp
