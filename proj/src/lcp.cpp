#include "ilcp/lcp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ilcp {

namespace {

// Feasible t-range of a family z(t) under  z_S(t) >= 0  and  w_i(t) >= 0
// (i outside the support): every condition is affine in t.
struct TRange {
    bool empty = false;
    std::optional<Rational> lo, hi;  // absent = unbounded on that side

    void add(const Rational& slope, const Rational& value0) {
        // value0 + t * slope >= 0
        if (slope == 0) {
            if (value0 < 0) empty = true;
            return;
        }
        Rational bound = -value0 / slope;
        if (slope > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
        if (lo && hi && *lo > *hi) empty = true;
    }
};

RatVec primitive(RatVec v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        g = gcd(g, numerator(x));
    }
    if (g != 0)
        for (auto& x : v) x /= Rational(g);
    return v;
}

bool on_family(const RatVec& z, const SolutionRay& r) {
    std::optional<Rational> t;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (r.dir[i] == 0) {
            if (z[i] != r.base[i]) return false;
        } else {
            Rational ti = (z[i] - r.base[i]) / r.dir[i];
            if (t && *t != ti) return false;
            t = ti;
        }
    }
    if (!t) return false;
    if (*t < 0) return false;
    if (r.t_max && *t > *r.t_max) return false;
    return true;
}

}  // namespace

LcpSolutionSet solve_lcp(const LcpInstance& inst) {
    const std::size_t n = inst.n();
    if (n > 4) throw DimensionError("solve_lcp limited to n <= 4");
    LcpSolutionSet out;

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) support.push_back(static_cast<int>(i));

        AffineSolution sol;
        if (support.empty()) {
            sol.consistent = true;
        } else {
            RatMat Mss = principal_submatrix(inst.M, support);
            RatVec rhs;
            for (int i : support) rhs.push_back(-inst.q[static_cast<std::size_t>(i)]);
            sol = solve_affine(Mss, rhs);
        }
        if (!sol.consistent) continue;

        auto embed = [&](const RatVec& zs) {
            RatVec z(n, Rational(0));
            for (std::size_t k = 0; k < support.size(); ++k)
                z[static_cast<std::size_t>(support[k])] = zs[k];
            return z;
        };

        if (sol.kernel.empty()) {
            RatVec z = embed(sol.particular);
            if (is_lcp_solution(inst, z)) out.points.push_back(std::move(z));
            continue;
        }
        if (sol.kernel.size() >= 2) {
            out.complete = false;
            continue;
        }

        RatVec base = embed(sol.particular);
        RatVec dir = embed(sol.kernel[0]);
        TRange range;
        for (int i : support)
            range.add(dir[static_cast<std::size_t>(i)], base[static_cast<std::size_t>(i)]);
        RatVec w0 = mat_vec(inst.M, base);
        RatVec wd = mat_vec(inst.M, dir);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) continue;
            range.add(wd[i], inst.q[i] + w0[i]);
        }
        if (range.empty) continue;
        if (range.lo && range.hi && *range.lo == *range.hi) {
            RatVec z = base;
            for (std::size_t i = 0; i < n; ++i) z[i] += *range.lo * dir[i];
            if (is_lcp_solution(inst, z)) out.points.push_back(std::move(z));
            continue;
        }

        SolutionRay ray;
        if (range.lo) {
            ray.base = base;
            for (std::size_t i = 0; i < n; ++i) ray.base[i] += *range.lo * dir[i];
            ray.dir = dir;
            if (range.hi) {
                RatVec end = base;
                for (std::size_t i = 0; i < n; ++i) end[i] += *range.hi * dir[i];
                RatVec prim = primitive(dir);
                // Rescale t_max so the stored direction is primitive.
                std::size_t k = 0;
                while (prim[k] == 0) ++k;
                ray.dir = prim;
                ray.t_max = (end[k] - ray.base[k]) / prim[k];
            } else {
                ray.dir = primitive(dir);
            }
        } else if (range.hi) {
            ray.base = base;
            for (std::size_t i = 0; i < n; ++i) ray.base[i] += *range.hi * dir[i];
            RatVec neg = dir;
            for (auto& x : neg) x = -x;
            ray.dir = primitive(neg);
        } else {
            // Unconstrained line through base; split into two rays.
            ray.base = base;
            ray.dir = primitive(dir);
            RatVec neg = ray.dir;
            for (auto& x : neg) x = -x;
            out.rays.push_back(SolutionRay{base, neg, std::nullopt});
        }
        // Direction sign sanity: moving along the ray must stay feasible.
        out.rays.push_back(std::move(ray));
    }

    std::sort(out.points.begin(), out.points.end(), lex_less);
    out.points.erase(std::unique(out.points.begin(), out.points.end(), vec_eq), out.points.end());
    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [&](const RatVec& z) {
                                        for (const auto& r : out.rays)
                                            if (on_family(z, r)) return true;
                                        return false;
                                    }),
                     out.points.end());
    return out;
}

bool is_lcp_solution(const LcpInstance& inst, const RatVec& z) {
    if (z.size() != inst.n()) return false;
    if (!vec_nonneg(z)) return false;
    RatVec w = mat_vec(inst.M, z);
    Rational dot = 0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        w[i] += inst.q[i];
        if (w[i] < 0) return false;
        dot += w[i] * z[i];
    }
    return dot == 0;
}

MonotoneVerdict check_monotone(const LcpInstance& hat, const LcpInstance& tilde,
                               const RatVec& hat_z, const RatVec& tilde_z) {
    const std::size_t n = hat.n();
    if (tilde.n() != n) throw std::invalid_argument("check_monotone: dimension mismatch");
    if (!mat_le(hat.M, tilde.M) || !vec_le(hat.q, tilde.q))
        throw std::invalid_argument("check_monotone: data not ordered entrywise");
    if (!is_lcp_solution(hat, hat_z) || !is_lcp_solution(tilde, tilde_z))
        throw std::invalid_argument("check_monotone: inputs are not solutions");

    MonotoneVerdict v;
    if (is_m_matrix(hat.M).in_class())
        v.premise = MonotonePremise::HatIsM;
    else if (is_m_matrix(tilde.M).in_class())
        v.premise = MonotonePremise::TildeIsM;
    v.ordering_holds = vec_le(tilde_z, hat_z);

    auto inv_positive = [](const RatMat& M) {
        auto inv = inverse(M);
        if (!inv) return false;
        for (const auto& x : inv->data)
            if (x <= 0) return false;
        return true;
    };
    v.hat_inverse_positive = inv_positive(hat.M);
    v.tilde_inverse_positive = inv_positive(tilde.M);

    bool gap = false;
    for (std::size_t i = 0; i < n && !gap; ++i) {
        if (hat.q[i] < tilde.q[i]) gap = true;
        for (std::size_t j = 0; j < n && !gap; ++j)
            if (hat.M(i, j) < tilde.M(i, j)) gap = true;
    }
    bool tilde_pos = true;
    for (const auto& x : tilde_z)
        if (x <= 0) tilde_pos = false;
    bool q_gap = false;
    for (std::size_t i = 0; i < n; ++i)
        if (hat.q[i] < tilde.q[i]) q_gap = true;
    RatVec mtz = mat_vec(tilde.M, tilde_z);
    bool tilde_tight = true;
    for (std::size_t i = 0; i < n; ++i)
        if (tilde.q[i] != -mtz[i]) tilde_tight = false;

    if (tilde_pos && gap)
        v.strict_branch = StrictBranch::DataGap;
    else if (tilde_tight && q_gap)
        v.strict_branch = StrictBranch::TightTilde;

    v.strict_applicable = v.strict_branch != StrictBranch::None &&
                          (v.hat_inverse_positive || v.tilde_inverse_positive);
    if (v.strict_applicable) v.strict_holds = vec_lt(tilde_z, hat_z);
    return v;
}

ExtremalSolutions extremal_solutions(const IntervalMatrix& A, const IntervalVector& b) {
    if (A.n != b.size()) throw InvariantError("extremal_solutions: dimension mismatch");
    ExtremalSolutions out;
    RatMat up(A.n, A.n), lo(A.n, A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) {
            up(i, j) = A.at(i, j).hi;
            lo(i, j) = A.at(i, j).lo;
        }
    out.upper_cert = is_m_matrix(up);
    out.lower_cert = is_m_matrix(lo);
    out.family_cert = interval_is_m(A);

    auto unique_solution = [](const RatMat& M, const RatVec& q) {
        LcpSolutionSet s = solve_lcp(LcpInstance(M, q));
        if (!s.unique_point())
            throw InvariantError("M-matrix corner problem did not have a unique solution");
        return s.points.front();
    };
    if (out.upper_cert.in_class()) out.inf_candidate = unique_solution(up, b.upper());
    if (out.lower_cert.in_class()) out.sup_candidate = unique_solution(lo, b.lower());
    if (!out.inf_candidate && !out.sup_candidate)
        throw std::invalid_argument("extremal_solutions: neither corner matrix has an M-certificate");
    return out;
}

}  // namespace ilcp
