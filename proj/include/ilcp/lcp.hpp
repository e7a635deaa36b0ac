#pragma once

#include "ilcp/interval.hpp"
#include "ilcp/linalg.hpp"
#include "ilcp/matrix_classes.hpp"

#include <optional>
#include <vector>

namespace ilcp {

/// Find z >= 0 with q + Mz >= 0 and z'(q + Mz) = 0.
struct LcpInstance {
    RatMat M;
    RatVec q;

    LcpInstance() = default;
    LcpInstance(RatMat m, RatVec qq) : M(std::move(m)), q(std::move(qq)) {
        if (!M.square() || M.rows != q.size()) throw InvariantError("LCP instance: dimension mismatch");
    }
    std::size_t n() const { return q.size(); }
};

/// One-parameter solution family z = base + t * dir for t in [0, t_max]
/// (t_max absent means a full ray).
struct SolutionRay {
    RatVec base;
    RatVec dir;
    std::optional<Rational> t_max;
};

struct LcpSolutionSet {
    std::vector<RatVec> points;      // isolated solutions, sorted lexicographically
    std::vector<SolutionRay> rays;   // degenerate one-parameter families
    bool complete = true;            // false when some support had nullity >= 2

    bool unique_point() const { return points.size() == 1 && rays.empty() && complete; }
};

/// Support enumeration over all 2^n complementary supports, exact. n <= 4.
LcpSolutionSet solve_lcp(const LcpInstance& inst);

bool is_lcp_solution(const LcpInstance& inst, const RatVec& z);

enum class MonotonePremise { None, HatIsM, TildeIsM };
enum class StrictBranch { None, DataGap, TightTilde };

/// Outcome of checking the ordered-data comparison: with data
/// (hat M, hat q) <= (tilde M, tilde q) and either matrix an M-matrix,
/// solutions satisfy tilde z <= hat z; under the supplement's hypotheses
/// plus an inverse-positive matrix, the inequality is strict.
struct MonotoneVerdict {
    MonotonePremise premise = MonotonePremise::None;
    bool ordering_holds = false;
    StrictBranch strict_branch = StrictBranch::None;
    bool hat_inverse_positive = false;
    bool tilde_inverse_positive = false;
    bool strict_applicable = false;
    std::optional<bool> strict_holds;
};

/// Inputs are validated: data must be ordered entrywise and hat_z / tilde_z
/// must solve their instances exactly, otherwise this throws.
MonotoneVerdict check_monotone(const LcpInstance& hat, const LcpInstance& tilde,
                               const RatVec& hat_z, const RatVec& tilde_z);

/// Corner-problem solutions bounding the solution set componentwise:
/// the upper corner pair yields the infimum, the lower corner pair the
/// supremum. Each side is available when its corner matrix has an
/// M-certificate; the family certificate is set when the whole box does.
struct ExtremalSolutions {
    std::optional<RatVec> inf_candidate;   // unique solution for (upper M, upper q)
    std::optional<RatVec> sup_candidate;   // unique solution for (lower M, lower q)
    ClassCertificate upper_cert;
    ClassCertificate lower_cert;
    ClassCertificate family_cert;          // interval_is_m over the box
};

ExtremalSolutions extremal_solutions(const IntervalMatrix& A, const IntervalVector& b);

}  // namespace ilcp
