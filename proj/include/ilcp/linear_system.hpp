#pragma once

#include "ilcp/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ilcp {

enum class VarKind { Z, W };

struct Var {
    VarKind kind = VarKind::Z;
    int index = 0;  // 0-based coordinate index

    bool operator==(const Var& o) const { return kind == o.kind && index == o.index; }
};

std::string var_name(const Var& v);  // "z1", "w2", ... (1-based display)

enum class Rel { LE, GE };

struct Constraint {
    RatVec coeffs;
    Rel rel = Rel::LE;
    Rational rhs;
};

/// Rational inequality system. Nonnegativity of every variable is implicit
/// and always in force; `cons` holds only the general constraints.
struct LinearSystem {
    std::vector<Var> vars;
    std::vector<Constraint> cons;

    std::size_t dim() const { return vars.size(); }
    int var_position(const Var& v) const;  // -1 when absent
};

/// Canonical row a.x <= c with an optional nonnegative-combination tag over
/// the rows it was derived from.
struct FmRow {
    RatVec a;
    Rational c;
    RatVec mult;
};

/// (a, c) scaled to a primitive integer vector; identical halfspaces
/// normalize to identical rows.
void normalize_row(FmRow& r);

/// Materializes `sys` as canonical <=-rows; nonnegativity rows (-x_i <= 0)
/// are appended after the explicit constraints, in variable order.
std::vector<FmRow> canonical_rows(const LinearSystem& sys, bool track_multipliers = false);

/// One Fourier-Motzkin step: eliminates variable `var` (column index).
/// Rows keep their full width; the eliminated column becomes zero.
std::vector<FmRow> fm_eliminate(const std::vector<FmRow>& rows, std::size_t var);

/// Deduplicates, drops rows implied by a parallel row, and resolves
/// variable-free rows. Returns false (setting `witness` if tracking) when a
/// row 0 <= c with c < 0 is present.
bool fm_prune(std::vector<FmRow>& rows, std::optional<RatVec>* witness = nullptr);

struct FmFeasibility {
    bool feasible = true;
    std::optional<RatVec> farkas;  // nonnegative combination proving 0 <= -1
};

/// Eliminates every variable; exact feasibility with a Farkas certificate
/// over the canonical row order of `sys`.
FmFeasibility fm_feasibility(const LinearSystem& sys);

bool satisfies(const LinearSystem& sys, const RatVec& x);

}  // namespace ilcp
