#pragma once

#include "ilcp/interval.hpp"
#include "ilcp/lcp.hpp"
#include "ilcp/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ilcp {

/// One of the 2^n complementarity cases: per index either z_i = 0 or
/// w_i = 0. Encoded by the bitmask of indices with w_i = 0 (z_i active).
struct SupportPattern {
    int n = 0;
    unsigned zero_w_mask = 0;

    bool w_is_zero(int i) const { return (zero_w_mask >> i) & 1u; }
    bool z_is_zero(int i) const { return !w_is_zero(i); }
    std::vector<int> zero_w() const;  // 0-based indices with w_i = 0
    std::vector<int> zero_z() const;
    std::string name() const;  // e.g. "w1=0,z2=0"
};

/// All 2^n patterns ordered by zero_w bitmask; 1 <= n <= 4.
std::vector<SupportPattern> enumerate_patterns(int n);

/// The two-sided interval row conditions of the pattern, over the active
/// variables (z_i where w_i = 0, w_i where z_i = 0), ordered by index.
/// Nonnegativity of every active variable is implicit in the system.
LinearSystem build_case_system(const IntervalMatrix& A, const IntervalVector& b,
                               const SupportPattern& p);

/// Fourier-Motzkin projection of all w-variables, followed by redundancy
/// removal: parallel domination (including against the implicit
/// nonnegativity rows) and removal of constraints not tight at any vertex.
LinearSystem eliminate_slacks(const LinearSystem& sys);

struct SolutionPiece {
    SupportPattern pattern;
    Polyhedron case_region;  // over the mixed case variables
    Polyhedron piece;        // over the active z-variables only
    std::vector<RatVec> vertices_embedded;  // piece vertices in R^n, z_i = 0 filled in
    std::vector<RatVec> rays_embedded;
};

struct EmptyPattern {
    SupportPattern pattern;
    RatVec witness;  // Farkas combination over canonical_rows(case system)
};

struct SolutionSetReport {
    int n = 0;
    std::vector<SolutionPiece> pieces;
    std::vector<EmptyPattern> empty_patterns;
    bool bounded = true;
    std::optional<RatVec> inf_box;  // componentwise inf/sup over the union,
    std::optional<RatVec> sup_box;  // present iff bounded and nonempty
    int connected_components = 0;
    std::string connectedness_note;
};

/// Runs every pattern through build / eliminate / enumerate, records the
/// nonempty pieces and per-pattern infeasibility witnesses, and computes
/// the componentwise bounds. When a corner matrix carries an M-certificate
/// the bounds are cross-checked against the corner-problem solutions.
SolutionSetReport assemble_solution_set(const IntervalMatrix& A, const IntervalVector& b);

}  // namespace ilcp
