#pragma once

#include "ilcp/interval.hpp"
#include "ilcp/quadric.hpp"
#include "ilcp/solution_set.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ilcp {

/// The two quadratic necessary conditions obtained by eliminating the
/// shared entry m12 = m21 in the all-w-zero case, n = 2:
///   0 <= hi(m22) z2^2 - lo(m11) z1^2 + hi(q2) z2 - lo(q1) z1   and mirror.
std::array<QuadricInequality, 2> sym_quadrics_2d(const IntervalMatrix& A, const IntervalVector& b);

/// All six conditions for n = 3, all w_i = 0: one pair per shared entry
/// (1,2), (1,3), (2,3); cross terms with the third coordinate included.
std::array<QuadricInequality, 6> sym_quadrics_3d_interior(const IntervalMatrix& A,
                                                          const IntervalVector& b);

/// The pair for a boundary pattern with w_i = w_j = 0 and z_k = 0 (n = 3):
/// no cross terms survive since z_k vanishes.
std::array<QuadricInequality, 2> sym_quadrics_boundary(const IntervalMatrix& A,
                                                       const IntervalVector& b,
                                                       const SupportPattern& p);

/// Row-wise exact membership in the (unsymmetric) solution set: where
/// z_i > 0 the row image must contain 0, where z_i = 0 its upper end must
/// be nonnegative.
bool in_solution_set(const RatVec& z, const IntervalMatrix& A, const IntervalVector& b);

struct ForcedValue {
    std::string param;  // "m11", "q2", ...
    Rational value;
};

struct SymCertificate {
    enum class Kind {
        SymEntryBoxEmpty,  // [a_ij] and [a_ji] do not intersect
        RelaxationRow,     // already outside the unsymmetric solution set
        ParamRange,        // implied range of one parameter misses its box
        RowImage,          // after forcing, a row's image excludes 0
        Projection,        // generic elimination certificate
    };
    Kind kind = Kind::Projection;
    std::vector<ForcedValue> forced;     // propagation chain, if any
    int row = -1;                        // 0-based row for RowImage / RelaxationRow
    std::optional<Interval> row_image;
    std::string param;                   // ParamRange
    std::optional<Interval> implied;
    std::optional<Interval> box;

    std::string text() const;
};

struct SymWitness {
    RatMat M;  // symmetric, inside the box
    RatVec q;
    RatVec w;  // q + Mz
};

struct SymMembership {
    bool member = false;
    std::optional<SymWitness> witness;
    std::optional<SymCertificate> certificate;
};

/// Decides membership in the symmetric solution set exactly: existence of
/// symmetric M in the box and q in its box with q + Mz >= 0 complementary
/// to z. Linear feasibility in the n(n+1)/2 + n parameters, decided by
/// exact elimination; certificates follow the cheapest sound deduction
/// (implied parameter range, then corner-forcing propagation, then the
/// generic projection).
SymMembership in_symmetric_solution_set(const RatVec& z, const IntervalMatrix& A,
                                        const IntervalVector& b);

struct PieceSymmetricReport {
    std::size_t piece_index = 0;
    std::vector<QuadricInequality> quadrics;
    std::vector<QuadricClass> classes;
    std::vector<std::pair<RatVec, bool>> membership;  // grid point -> oracle verdict
};

/// Attaches the applicable quadrics and, when a grid step is given, a
/// rational-grid membership map to each piece of an assembled solution
/// set. `fixed` optionally pins coordinates (e.g. a plot slice), so the
/// grid only walks the free ones.
std::vector<PieceSymmetricReport> symmetric_region_report(
    const IntervalMatrix& A, const IntervalVector& b, const SolutionSetReport& pieces,
    std::optional<Rational> grid_step,
    const std::vector<std::optional<Rational>>* fixed = nullptr);

}  // namespace ilcp
