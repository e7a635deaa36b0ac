#include "ilcp/solution_set.hpp"

#include <algorithm>
#include <functional>

namespace ilcp {

std::vector<int> SupportPattern::zero_w() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (w_is_zero(i)) v.push_back(i);
    return v;
}

std::vector<int> SupportPattern::zero_z() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (z_is_zero(i)) v.push_back(i);
    return v;
}

std::string SupportPattern::name() const {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += (w_is_zero(i) ? "w" : "z") + std::to_string(i + 1) + "=0";
    }
    return s;
}

std::vector<SupportPattern> enumerate_patterns(int n) {
    if (n < 1 || n > 4) throw DimensionError("enumerate_patterns limited to 1 <= n <= 4");
    std::vector<SupportPattern> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) out.push_back(SupportPattern{n, mask});
    return out;
}

LinearSystem build_case_system(const IntervalMatrix& A, const IntervalVector& b,
                               const SupportPattern& p) {
    const std::size_t n = A.n;
    if (b.size() != n || static_cast<std::size_t>(p.n) != n)
        throw InvariantError("build_case_system: dimension mismatch");

    LinearSystem sys;
    for (int i = 0; i < p.n; ++i)
        sys.vars.push_back(p.w_is_zero(i) ? Var{VarKind::Z, i} : Var{VarKind::W, i});

    // Row i of w - Mz = q over the box:
    //   (w_i) - sum over active z_j of hi(m_ij) z_j <= hi(q_i)
    //   (w_i) - sum over active z_j of lo(m_ij) z_j >= lo(q_i)
    for (std::size_t i = 0; i < n; ++i) {
        Constraint up, down;
        up.coeffs.assign(n, Rational(0));
        down.coeffs.assign(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
            const Var& v = sys.vars[k];
            if (v.kind == VarKind::Z) {
                up.coeffs[k] = -A.at(i, static_cast<std::size_t>(v.index)).hi;
                down.coeffs[k] = -A.at(i, static_cast<std::size_t>(v.index)).lo;
            } else if (static_cast<std::size_t>(v.index) == i) {
                up.coeffs[k] = 1;
                down.coeffs[k] = 1;
            }
        }
        up.rel = Rel::LE;
        up.rhs = b[i].hi;
        down.rel = Rel::GE;
        down.rhs = b[i].lo;
        sys.cons.push_back(std::move(up));
        sys.cons.push_back(std::move(down));
    }
    return sys;
}

LinearSystem eliminate_slacks(const LinearSystem& sys) {
    std::vector<std::size_t> w_cols, z_cols;
    for (std::size_t k = 0; k < sys.vars.size(); ++k)
        (sys.vars[k].kind == VarKind::W ? w_cols : z_cols).push_back(k);

    std::vector<FmRow> rows = canonical_rows(sys);
    bool feasible = true;
    for (std::size_t w : w_cols) {
        if (!fm_prune(rows)) {
            feasible = false;
            break;
        }
        rows = fm_eliminate(rows, w);
    }
    if (feasible) fm_prune(rows);

    LinearSystem out;
    for (std::size_t k : z_cols) out.vars.push_back(sys.vars[k]);
    bool infeasible_constant = false;
    for (const auto& r : rows) {
        bool zero = true;
        for (std::size_t k : z_cols)
            if (r.a[k] != 0) zero = false;
        if (zero) {
            if (r.c < 0) infeasible_constant = true;
            continue;
        }
        // Skip rows that merely restate nonnegativity of one variable.
        int nz = -1;
        bool single = true;
        for (std::size_t k = 0; k < z_cols.size(); ++k)
            if (r.a[z_cols[k]] != 0) {
                if (nz >= 0) single = false;
                nz = static_cast<int>(k);
            }
        if (single && nz >= 0 && r.a[z_cols[static_cast<std::size_t>(nz)]] < 0 && r.c >= 0) continue;
        Constraint c;
        c.rel = Rel::LE;
        c.rhs = r.c;
        for (std::size_t k : z_cols) c.coeffs.push_back(r.a[k]);
        out.cons.push_back(std::move(c));
    }
    if (infeasible_constant) {
        Constraint c;
        c.coeffs.assign(out.vars.size(), Rational(0));
        c.rel = Rel::LE;
        c.rhs = -1;
        out.cons.push_back(std::move(c));
        return out;
    }

    // Drop constraints that are not tight at any vertex; in a pointed
    // nonempty polyhedron every facet contains one.
    Polyhedron poly = vertex_enumeration(out);
    if (poly.empty()) return out;
    std::vector<Constraint> kept;
    for (const auto& c : out.cons) {
        bool tight = false;
        for (const auto& v : poly.vertices) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < v.size(); ++j) lhs += c.coeffs[j] * v[j];
            if (lhs == c.rhs) {
                tight = true;
                break;
            }
        }
        if (tight) kept.push_back(c);
    }
    out.cons = std::move(kept);
    return out;
}

namespace {

// Closed convex pieces: the union is connected iff the pairwise
// intersection graph is connected.
int count_components(const std::vector<SolutionPiece>& pieces, int n) {
    if (pieces.empty()) return 0;
    std::vector<int> parent(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    auto intersects = [&](const SolutionPiece& a, const SolutionPiece& b) {
        // Shared system over z1..zn: each piece contributes its constraints
        // plus z_i <= 0 for its zero coordinates (pinned by implicit z_i >= 0).
        LinearSystem sys;
        for (int i = 0; i < n; ++i) sys.vars.push_back(Var{VarKind::Z, i});
        auto add = [&](const SolutionPiece& p) {
            auto active = p.pattern.zero_w();
            for (const auto& c : p.piece.halfspaces.cons) {
                Constraint e;
                e.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
                for (std::size_t k = 0; k < active.size(); ++k)
                    e.coeffs[static_cast<std::size_t>(active[k])] = c.coeffs[k];
                e.rel = c.rel;
                e.rhs = c.rhs;
                sys.cons.push_back(std::move(e));
            }
            for (int i : p.pattern.zero_z()) {
                Constraint e;
                e.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
                e.coeffs[static_cast<std::size_t>(i)] = 1;
                e.rel = Rel::LE;
                e.rhs = 0;
                sys.cons.push_back(std::move(e));
            }
        };
        add(a);
        add(b);
        return fm_feasibility(sys).feasible;
    };

    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (find(static_cast<int>(i)) != find(static_cast<int>(j)) && intersects(pieces[i], pieces[j]))
                parent[find(static_cast<int>(i))] = find(static_cast<int>(j));

    int comps = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
    return comps;
}

}  // namespace

SolutionSetReport assemble_solution_set(const IntervalMatrix& A, const IntervalVector& b) {
    const int n = static_cast<int>(A.n);
    if (n < 1 || n > 4) throw DimensionError("assemble_solution_set limited to 1 <= n <= 4");
    SolutionSetReport report;
    report.n = n;

    for (const auto& p : enumerate_patterns(n)) {
        LinearSystem mixed = build_case_system(A, b, p);
        Polyhedron mixed_poly = vertex_enumeration(mixed);
        if (mixed_poly.empty()) {
            report.empty_patterns.push_back(
                EmptyPattern{p, mixed_poly.infeasibility_witness.value_or(RatVec{})});
            continue;
        }
        SolutionPiece piece;
        piece.pattern = p;
        piece.case_region = std::move(mixed_poly);
        LinearSystem zonly = eliminate_slacks(mixed);
        piece.piece = vertex_enumeration(zonly);
        if (piece.piece.empty())
            throw InvariantError("nonempty case region projected to an empty piece");
        auto active = p.zero_w();
        auto embed = [&](const RatVec& v) {
            RatVec full(static_cast<std::size_t>(n), Rational(0));
            for (std::size_t k = 0; k < active.size(); ++k)
                full[static_cast<std::size_t>(active[k])] = v[k];
            return full;
        };
        for (const auto& v : piece.piece.vertices) piece.vertices_embedded.push_back(embed(v));
        for (const auto& r : piece.piece.rays) piece.rays_embedded.push_back(embed(r));
        if (!piece.piece.bounded()) report.bounded = false;
        report.pieces.push_back(std::move(piece));
    }

    if (!report.pieces.empty() && report.bounded) {
        RatVec lo = report.pieces.front().vertices_embedded.front();
        RatVec hi = lo;
        for (const auto& piece : report.pieces)
            for (const auto& v : piece.vertices_embedded)
                for (std::size_t i = 0; i < v.size(); ++i) {
                    lo[i] = std::min(lo[i], v[i]);
                    hi[i] = std::max(hi[i], v[i]);
                }
        report.inf_box = lo;
        report.sup_box = hi;
    }

    report.connected_components = count_components(report.pieces, n);
    if (report.pieces.empty())
        report.connectedness_note = "empty solution set";
    else if (!report.bounded)
        report.connectedness_note = "unbounded piece present; componentwise bounds omitted";
    else if (report.connected_components == 1)
        report.connectedness_note = "union of pieces is connected";
    else
        report.connectedness_note =
            "union of pieces has " + std::to_string(report.connected_components) + " components";

    // Corner-problem cross-check: with an M-matrix corner premise the
    // corner solutions must agree with the assembled bounds.
    if (report.inf_box || report.sup_box) {
        RatMat up(A.n, A.n), lo(A.n, A.n);
        for (std::size_t i = 0; i < A.n; ++i)
            for (std::size_t j = 0; j < A.n; ++j) {
                up(i, j) = A.at(i, j).hi;
                lo(i, j) = A.at(i, j).lo;
            }
        if (is_m_matrix(up).in_class() || is_m_matrix(lo).in_class()) {
            ExtremalSolutions ext = extremal_solutions(A, b);
            if (ext.inf_candidate && report.inf_box && !vec_eq(*ext.inf_candidate, *report.inf_box))
                throw InvariantError("assembled infimum disagrees with the upper corner solution");
            if (ext.sup_candidate && report.sup_box && !vec_eq(*ext.sup_candidate, *report.sup_box))
                throw InvariantError("assembled supremum disagrees with the lower corner solution");
        }
    }
    return report;
}

}  // namespace ilcp
