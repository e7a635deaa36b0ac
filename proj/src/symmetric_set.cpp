#include "ilcp/symmetric_set.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ilcp {

namespace {

RatMat zeros(std::size_t n) { return RatMat(n, n); }

QuadricInequality make_pair_quadric(const IntervalMatrix& A, const IntervalVector& b,
                                    std::size_t n, int i, int j, int side, bool cross_terms) {
    // side 0:  0 <= hi(m_jj) zj^2 [+ hi(m_jk) zj zk] + hi(q_j) zj
    //               - lo(m_ii) zi^2 [- lo(m_ik) zi zk] - lo(q_i) zi
    // side 1 is the mirror with i and j exchanged.
    int a = side == 0 ? j : i;
    int bidx = side == 0 ? i : j;
    QuadricInequality q;
    q.Q = zeros(n);
    q.b.assign(n, Rational(0));
    q.c = 0;
    q.pair_i = i;
    q.pair_j = j;
    q.side = side;
    auto ai = static_cast<std::size_t>(a);
    auto bi = static_cast<std::size_t>(bidx);
    q.Q(ai, ai) = A.at(ai, ai).hi;
    q.Q(bi, bi) = -A.at(bi, bi).lo;
    q.b[ai] = b[ai].hi;
    q.b[bi] = -b[bi].lo;
    if (cross_terms && n == 3) {
        // The remaining coordinate k: cross terms hi(m_ak) za zk - lo(m_bk) zb zk.
        int k = 3 - i - j;
        auto ki = static_cast<std::size_t>(k);
        Rational up = A.at(ai, ki).hi / 2;
        Rational dn = A.at(bi, ki).lo / 2;
        q.Q(ai, ki) += up;
        q.Q(ki, ai) += up;
        q.Q(bi, ki) -= dn;
        q.Q(ki, bi) -= dn;
    }
    return q;
}

}  // namespace

std::array<QuadricInequality, 2> sym_quadrics_2d(const IntervalMatrix& A, const IntervalVector& b) {
    if (A.n != 2 || b.size() != 2) throw InvariantError("sym_quadrics_2d requires n = 2");
    return {make_pair_quadric(A, b, 2, 0, 1, 0, false),
            make_pair_quadric(A, b, 2, 0, 1, 1, false)};
}

std::array<QuadricInequality, 6> sym_quadrics_3d_interior(const IntervalMatrix& A,
                                                          const IntervalVector& b) {
    if (A.n != 3 || b.size() != 3) throw InvariantError("sym_quadrics_3d_interior requires n = 3");
    return {make_pair_quadric(A, b, 3, 0, 1, 0, true), make_pair_quadric(A, b, 3, 0, 1, 1, true),
            make_pair_quadric(A, b, 3, 0, 2, 0, true), make_pair_quadric(A, b, 3, 0, 2, 1, true),
            make_pair_quadric(A, b, 3, 1, 2, 0, true), make_pair_quadric(A, b, 3, 1, 2, 1, true)};
}

std::array<QuadricInequality, 2> sym_quadrics_boundary(const IntervalMatrix& A,
                                                       const IntervalVector& b,
                                                       const SupportPattern& p) {
    if (A.n != 3 || p.n != 3) throw InvariantError("sym_quadrics_boundary requires n = 3");
    auto zw = p.zero_w();
    auto zz = p.zero_z();
    if (zw.size() != 2 || zz.size() != 1)
        throw InvariantError("sym_quadrics_boundary requires w_i = w_j = 0 and one z_k = 0");
    return {make_pair_quadric(A, b, 3, zw[0], zw[1], 0, false),
            make_pair_quadric(A, b, 3, zw[0], zw[1], 1, false)};
}

bool in_solution_set(const RatVec& z, const IntervalMatrix& A, const IntervalVector& b) {
    if (z.size() != A.n || b.size() != A.n) throw InvariantError("in_solution_set: dimension mismatch");
    if (!vec_nonneg(z)) return false;
    for (std::size_t i = 0; i < A.n; ++i) {
        Interval img = interval_row_image(A.row(i), z, b[i]);
        if (z[i] > 0) {
            if (!img.contains(Rational(0))) return false;
        } else if (img.hi < 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Symmetric membership oracle.

namespace {

struct Affine {
    RatVec coef;   // over parameter ids
    Rational cst;
};

struct ParamSystem {
    std::size_t n = 0;
    std::size_t num_params = 0;
    std::vector<std::string> names;
    std::vector<Interval> box;
    std::vector<bool> forced_point;      // point after stage-A forcing
    std::vector<int> sid;                // (i,j) with i <= j -> param id, row-major
    std::vector<Affine> rows;            // row i = q_i + sum m_ij z_j
    std::vector<bool> row_equality;      // z_i > 0

    int s_id(std::size_t i, std::size_t j) const {
        auto a = std::min(i, j), b = std::max(i, j);
        return sid[a * n + b];
    }
    int q_id(std::size_t i) const { return static_cast<int>(num_params - n + i); }
    bool is_point(std::size_t p) const { return box[p].is_point(); }
};

std::optional<ParamSystem> build_param_system(const RatVec& z, const IntervalMatrix& A,
                                              const IntervalVector& b, SymCertificate& cert,
                                              bool& box_empty) {
    ParamSystem ps;
    ps.n = A.n;
    ps.sid.assign(A.n * A.n, -1);
    box_empty = false;
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = i; j < A.n; ++j) {
            auto inter = intersect(A.at(i, j), A.at(j, i));
            if (!inter) {
                cert.kind = SymCertificate::Kind::SymEntryBoxEmpty;
                cert.param = "m" + std::to_string(i + 1) + std::to_string(j + 1);
                box_empty = true;
                return std::nullopt;
            }
            ps.sid[i * A.n + j] = static_cast<int>(ps.names.size());
            ps.names.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
            ps.box.push_back(*inter);
        }
    for (std::size_t i = 0; i < A.n; ++i) {
        ps.names.push_back("q" + std::to_string(i + 1));
        ps.box.push_back(b[i]);
    }
    ps.num_params = ps.names.size();

    for (std::size_t i = 0; i < A.n; ++i) {
        Affine row;
        row.coef.assign(ps.num_params, Rational(0));
        row.cst = 0;
        row.coef[static_cast<std::size_t>(ps.q_id(i))] = 1;
        for (std::size_t j = 0; j < A.n; ++j)
            row.coef[static_cast<std::size_t>(ps.s_id(i, j))] += z[j];
        ps.rows.push_back(std::move(row));
        ps.row_equality.push_back(z[i] > 0);
    }
    return ps;
}

Interval affine_range(const Affine& f, const std::vector<Interval>& box) {
    Rational lo = f.cst, hi = f.cst;
    for (std::size_t p = 0; p < f.coef.size(); ++p) {
        if (f.coef[p] > 0) {
            lo += f.coef[p] * box[p].lo;
            hi += f.coef[p] * box[p].hi;
        } else if (f.coef[p] < 0) {
            lo += f.coef[p] * box[p].hi;
            hi += f.coef[p] * box[p].lo;
        }
    }
    return Interval(lo, hi);
}

// Implied-range analysis: using the equality rows alone, eliminate the other
// free matrix parameters and bound one target parameter over the q-boxes.
// A target interval disjoint from the parameter's own box proves
// infeasibility by explicit substitution, which keeps the reported
// range in the same form a hand derivation produces.
bool implied_range_certificate(const ParamSystem& ps, SymCertificate& cert) {
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < ps.n; ++i) targets.push_back(static_cast<std::size_t>(ps.s_id(i, i)));
    for (std::size_t i = 0; i < ps.n; ++i)
        for (std::size_t j = i + 1; j < ps.n; ++j) targets.push_back(static_cast<std::size_t>(ps.s_id(i, j)));
    for (std::size_t i = 0; i < ps.n; ++i) targets.push_back(static_cast<std::size_t>(ps.q_id(i)));

    const std::size_t q_base = ps.num_params - ps.n;
    for (std::size_t t : targets) {
        if (ps.is_point(t)) continue;
        // Equalities with point parameters folded into the constant.
        std::vector<Affine> eqs;
        for (std::size_t i = 0; i < ps.rows.size(); ++i) {
            if (!ps.row_equality[i]) continue;
            Affine f = ps.rows[i];
            for (std::size_t p = 0; p < ps.num_params; ++p)
                if (f.coef[p] != 0 && ps.is_point(p)) {
                    f.cst += f.coef[p] * ps.box[p].lo;
                    f.coef[p] = 0;
                }
            eqs.push_back(std::move(f));
        }
        // Eliminate every other free matrix parameter (and, for a q-target,
        // all of them) by exact substitution.
        for (std::size_t f = 0; f < q_base; ++f) {
            if (f == t || ps.is_point(f)) continue;
            std::size_t pivot = eqs.size();
            for (std::size_t e = 0; e < eqs.size(); ++e)
                if (eqs[e].coef[f] != 0) {
                    pivot = e;
                    break;
                }
            if (pivot == eqs.size()) continue;
            Affine pe = eqs[pivot];
            eqs.erase(eqs.begin() + static_cast<long>(pivot));
            for (auto& e : eqs) {
                if (e.coef[f] == 0) continue;
                Rational fac = e.coef[f] / pe.coef[f];
                for (std::size_t p = 0; p < ps.num_params; ++p) e.coef[p] -= fac * pe.coef[p];
                e.cst -= fac * pe.cst;
                e.coef[f] = 0;
            }
        }
        for (const auto& e : eqs) {
            if (e.coef[t] == 0) continue;
            Affine expr;  // t = expr over the remaining (boxed) parameters
            expr.coef.assign(ps.num_params, Rational(0));
            expr.cst = -e.cst / e.coef[t];
            bool clean = true;
            for (std::size_t p = 0; p < ps.num_params; ++p) {
                if (p == t || e.coef[p] == 0) continue;
                if (p < q_base && !ps.is_point(p)) clean = false;  // still free
                expr.coef[p] = -e.coef[p] / e.coef[t];
            }
            if (!clean) continue;
            Interval implied = affine_range(expr, ps.box);
            if (!intersect(implied, ps.box[t])) {
                cert.kind = SymCertificate::Kind::ParamRange;
                cert.param = ps.names[t];
                cert.implied = implied;
                cert.box = ps.box[t];
                return true;
            }
            break;  // first clean relation decides this target
        }
    }
    return false;
}

// Corner-forcing propagation: when a row's image touches zero only at one
// corner of the parameter box, every involved parameter is pinned there.
bool forcing_certificate(ParamSystem& ps, SymCertificate& cert) {
    std::vector<Interval> cur = ps.box;
    std::vector<ForcedValue> chain;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ps.rows.size(); ++i) {
            Interval img = affine_range(ps.rows[i], cur);
            bool eq = ps.row_equality[i];
            if (eq && (img.lo > 0 || img.hi < 0)) {
                cert.kind = SymCertificate::Kind::RowImage;
                cert.row = static_cast<int>(i);
                cert.row_image = img;
                cert.forced = chain;
                return true;
            }
            if (!eq && img.hi < 0) {
                cert.kind = SymCertificate::Kind::RowImage;
                cert.row = static_cast<int>(i);
                cert.row_image = img;
                cert.forced = chain;
                return true;
            }
            int corner = 0;  // +1: forced to maximizing corner, -1: minimizing
            if (eq && img.lo == 0 && img.hi > 0) corner = -1;
            if (img.hi == 0 && img.lo < 0) corner = +1;  // equality or w-row pinned at 0
            if (corner != 0) {
                for (std::size_t p = 0; p < ps.num_params; ++p) {
                    const Rational& cf = ps.rows[i].coef[p];
                    if (cf == 0 || cur[p].is_point()) continue;
                    Rational v = (sign(cf) == corner) ? cur[p].hi : cur[p].lo;
                    cur[p] = Interval::point(v);
                    chain.push_back(ForcedValue{ps.names[p], v});
                    changed = true;
                }
            }
        }
    }
    ps.box = cur;  // narrowed boxes feed the final elimination
    for (std::size_t p = 0; p < ps.num_params; ++p) ps.forced_point.push_back(cur[p].is_point());
    return false;
}

struct IneqA {
    RatVec a;  // over free slots
    Rational c;
};

void prune_slots(std::vector<IneqA>& rows, bool& infeasible) {
    std::map<RatVec, std::size_t> best;
    std::vector<IneqA> kept;
    for (auto& r : rows) {
        bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
            if (r.c < 0) infeasible = true;
            continue;
        }
        // Primitive integer normal form.
        Integer l = denominator(r.c);
        for (const auto& x : r.a) l = lcm(l, denominator(x));
        Integer g = abs(numerator(r.c) * l / denominator(r.c));
        for (const auto& x : r.a) g = gcd(g, numerator(x) * l / denominator(x));
        Rational f = (g == 0) ? Rational(l) : Rational(l, g);
        if (f != 1) {
            for (auto& x : r.a) x *= f;
            r.c *= f;
        }
        auto it = best.find(r.a);
        if (it == best.end()) {
            best.emplace(r.a, kept.size());
            kept.push_back(std::move(r));
        } else if (r.c < kept[it->second].c) {
            kept[it->second] = std::move(r);
        }
        if (infeasible) return;
    }
    rows = std::move(kept);
}

// Exact feasibility over the parameter box by substitution of the equality
// rows followed by variable-by-variable elimination; produces a witness by
// deterministic back-substitution.
bool parameter_feasibility(const ParamSystem& ps, std::optional<SymWitness>& witness,
                           const RatVec& z, const IntervalMatrix& A, const IntervalVector& b) {
    // Free slots: parameters whose (possibly narrowed) box is not a point.
    std::vector<std::size_t> slot_param;
    std::vector<int> param_slot(ps.num_params, -1);
    for (std::size_t p = 0; p < ps.num_params; ++p)
        if (!ps.box[p].is_point()) {
            param_slot[p] = static_cast<int>(slot_param.size());
            slot_param.push_back(p);
        }
    const std::size_t k = slot_param.size();

    auto to_slots = [&](const Affine& f) {
        IneqA r;
        r.a.assign(k, Rational(0));
        Rational cst = f.cst;
        for (std::size_t p = 0; p < ps.num_params; ++p) {
            if (f.coef[p] == 0) continue;
            if (param_slot[p] >= 0)
                r.a[static_cast<std::size_t>(param_slot[p])] = f.coef[p];
            else
                cst += f.coef[p] * ps.box[p].lo;
        }
        r.c = cst;  // caller reinterprets
        return r;
    };

    // Equalities: lhs(slots) + cst = 0. Solve sequentially.
    struct Solved {
        std::size_t slot;
        RatVec expr;   // over slots
        Rational cst;  // value = expr . slots + cst
    };
    std::vector<Solved> solved;
    std::vector<bool> pinned(k, false);
    std::vector<IneqA> eqs;
    for (std::size_t i = 0; i < ps.rows.size(); ++i)
        if (ps.row_equality[i]) eqs.push_back(to_slots(ps.rows[i]));
    for (auto& e : eqs) {
        for (const auto& s : solved) {
            if (e.a[s.slot] == 0) continue;
            Rational f = e.a[s.slot];
            for (std::size_t j = 0; j < k; ++j) e.a[j] += f * s.expr[j];
            e.c += f * s.cst;
            e.a[s.slot] = 0;
        }
        std::size_t pv = k;
        for (std::size_t j = 0; j < k; ++j)
            if (e.a[j] != 0 && !pinned[j]) {
                pv = j;
                break;
            }
        if (pv == k) {
            if (e.c != 0) return false;
            continue;
        }
        Solved s;
        s.slot = pv;
        s.expr.assign(k, Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            if (j != pv) s.expr[j] = -e.a[j] / e.a[pv];
        s.cst = -e.c / e.a[pv];
        pinned[pv] = true;
        // Keep earlier expressions in terms of unpinned slots only.
        for (auto& prev : solved) {
            if (prev.expr[pv] == 0) continue;
            Rational f = prev.expr[pv];
            for (std::size_t j = 0; j < k; ++j) prev.expr[j] += f * s.expr[j];
            prev.cst += f * s.cst;
            prev.expr[pv] = 0;
        }
        solved.push_back(std::move(s));
    }

    // Inequalities: box rows and w-rows, reduced by the solved expressions.
    std::vector<IneqA> ineqs;
    auto push_affine_le = [&](RatVec aa, Rational cc) {
        for (const auto& s : solved) {
            if (aa[s.slot] == 0) continue;
            Rational f = aa[s.slot];
            for (std::size_t j = 0; j < k; ++j) aa[j] += f * s.expr[j];
            cc -= f * s.cst;  // a.x <= c form: move constant
            aa[s.slot] = 0;
        }
        ineqs.push_back(IneqA{std::move(aa), std::move(cc)});
    };
    for (std::size_t j = 0; j < k; ++j) {
        RatVec up(k, Rational(0)), dn(k, Rational(0));
        up[j] = 1;
        dn[j] = -1;
        push_affine_le(up, ps.box[slot_param[j]].hi);
        push_affine_le(dn, -ps.box[slot_param[j]].lo);
    }
    for (std::size_t i = 0; i < ps.rows.size(); ++i) {
        if (ps.row_equality[i]) continue;
        IneqA r = to_slots(ps.rows[i]);  // r.a . slots + r.c >= 0
        RatVec aa = r.a;
        for (auto& x : aa) x = -x;
        push_affine_le(std::move(aa), r.c);
    }

    // Eliminate free slots with a trace for back-substitution.
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < k; ++j)
        if (!pinned[j]) order.push_back(j);
    std::vector<std::vector<IneqA>> trace;
    bool infeasible = false;
    std::vector<IneqA> cur = std::move(ineqs);
    for (std::size_t v : order) {
        prune_slots(cur, infeasible);
        if (infeasible) return false;
        trace.push_back(cur);
        std::vector<IneqA> next;
        std::vector<const IneqA*> pos, neg;
        for (const auto& r : cur) {
            if (r.a[v] > 0)
                pos.push_back(&r);
            else if (r.a[v] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        for (const auto* pr : pos)
            for (const auto* nr : neg) {
                Rational alpha = -nr->a[v], beta = pr->a[v];
                IneqA r;
                r.a.assign(k, Rational(0));
                for (std::size_t j = 0; j < k; ++j) r.a[j] = alpha * pr->a[j] + beta * nr->a[j];
                r.c = alpha * pr->c + beta * nr->c;
                r.a[v] = 0;
                next.push_back(std::move(r));
            }
        cur = std::move(next);
    }
    prune_slots(cur, infeasible);
    if (infeasible) return false;

    // Back-substitute a witness.
    RatVec slot_val(k, Rational(0));
    for (std::size_t step = order.size(); step-- > 0;) {
        std::size_t v = order[step];
        std::optional<Rational> lo, hi;
        for (const auto& r : trace[step]) {
            if (r.a[v] == 0) continue;
            Rational rest = r.c;
            for (std::size_t j = 0; j < k; ++j)
                if (j != v) rest -= r.a[j] * slot_val[j];
            Rational bound = rest / r.a[v];
            if (r.a[v] > 0) {
                if (!hi || bound < *hi) hi = bound;
            } else {
                if (!lo || bound > *lo) lo = bound;
            }
        }
        if (lo && hi) {
            if (*lo > *hi) throw InvariantError("back-substitution produced an empty bound interval");
            slot_val[v] = (*lo + *hi) / 2;
        } else if (lo) {
            slot_val[v] = *lo;
        } else if (hi) {
            slot_val[v] = *hi;
        }
    }
    for (auto it = solved.rbegin(); it != solved.rend(); ++it) {
        Rational val = it->cst;
        for (std::size_t j = 0; j < k; ++j) val += it->expr[j] * slot_val[j];
        slot_val[it->slot] = val;
    }

    RatVec param_val(ps.num_params);
    for (std::size_t p = 0; p < ps.num_params; ++p)
        param_val[p] = (param_slot[p] >= 0) ? slot_val[static_cast<std::size_t>(param_slot[p])]
                                            : ps.box[p].lo;

    SymWitness w;
    w.M = RatMat(ps.n, ps.n);
    for (std::size_t i = 0; i < ps.n; ++i)
        for (std::size_t j = 0; j < ps.n; ++j)
            w.M(i, j) = param_val[static_cast<std::size_t>(ps.s_id(i, j))];
    w.q.assign(ps.n, Rational(0));
    for (std::size_t i = 0; i < ps.n; ++i) w.q[i] = param_val[static_cast<std::size_t>(ps.q_id(i))];
    w.w = mat_vec(w.M, z);
    for (std::size_t i = 0; i < ps.n; ++i) w.w[i] += w.q[i];

    // The witness must check out exactly; anything else is a bug.
    for (std::size_t i = 0; i < ps.n; ++i)
        for (std::size_t j = 0; j < ps.n; ++j) {
            if (w.M(i, j) != w.M(j, i)) throw InvariantError("witness matrix not symmetric");
            if (!A.at(i, j).contains(w.M(i, j))) throw InvariantError("witness matrix outside the box");
        }
    for (std::size_t i = 0; i < ps.n; ++i) {
        if (!b[i].contains(w.q[i])) throw InvariantError("witness q outside the box");
        if (w.w[i] < 0) throw InvariantError("witness slack negative");
        if (z[i] > 0 && w.w[i] != 0) throw InvariantError("witness violates complementarity");
    }
    witness = std::move(w);
    return true;
}

}  // namespace

std::string SymCertificate::text() const {
    auto iv = [](const Interval& i) { return "[" + rat_string(i.lo) + ", " + rat_string(i.hi) + "]"; };
    switch (kind) {
        case Kind::SymEntryBoxEmpty:
            return "entry " + param + " has no value shared with its transpose entry";
        case Kind::RelaxationRow:
            return "row " + std::to_string(row + 1) + " image " + (row_image ? iv(*row_image) : "") +
                   " already fails without symmetry";
        case Kind::ParamRange:
            return "forced " + param + " range " + (implied ? iv(*implied) : "") +
                   " is disjoint from " + (box ? iv(*box) : "");
        case Kind::RowImage: {
            std::string s;
            if (!forced.empty()) {
                s = "forced ";
                for (std::size_t i = 0; i < forced.size(); ++i) {
                    if (i) s += ", ";
                    s += forced[i].param + " = " + rat_string(forced[i].value);
                }
                s += "; ";
            }
            s += "row " + std::to_string(row + 1) + " image " + (row_image ? iv(*row_image) : "") +
                 " excludes 0";
            return s;
        }
        case Kind::Projection:
            return "parameter system infeasible (elimination certificate)";
    }
    return "";
}

SymMembership in_symmetric_solution_set(const RatVec& z, const IntervalMatrix& A,
                                        const IntervalVector& b) {
    if (z.size() != A.n || b.size() != A.n)
        throw InvariantError("in_symmetric_solution_set: dimension mismatch");
    if (A.n > 4) throw DimensionError("in_symmetric_solution_set limited to n <= 4");
    if (!vec_nonneg(z)) throw InvariantError("in_symmetric_solution_set requires z >= 0");

    SymMembership out;
    SymCertificate cert;
    bool box_empty = false;
    auto ps = build_param_system(z, A, b, cert, box_empty);
    if (box_empty) {
        out.certificate = cert;
        return out;
    }

    // The unsymmetric membership test is a relaxation; its failure is
    // already a certificate.
    for (std::size_t i = 0; i < A.n; ++i) {
        Interval img = interval_row_image(A.row(i), z, b[i]);
        if ((z[i] > 0 && !img.contains(Rational(0))) || (z[i] == 0 && img.hi < 0)) {
            cert.kind = SymCertificate::Kind::RelaxationRow;
            cert.row = static_cast<int>(i);
            cert.row_image = img;
            out.certificate = cert;
            return out;
        }
    }

    if (implied_range_certificate(*ps, cert)) {
        out.certificate = cert;
        return out;
    }
    if (forcing_certificate(*ps, cert)) {
        out.certificate = cert;
        return out;
    }
    if (parameter_feasibility(*ps, out.witness, z, A, b)) {
        out.member = true;
        return out;
    }
    cert.kind = SymCertificate::Kind::Projection;
    out.certificate = cert;
    return out;
}

std::vector<PieceSymmetricReport> symmetric_region_report(
    const IntervalMatrix& A, const IntervalVector& b, const SolutionSetReport& report,
    std::optional<Rational> grid_step, const std::vector<std::optional<Rational>>* fixed) {
    if (grid_step && *grid_step <= 0) throw InvariantError("grid step must be positive");
    if (A.n > 3) throw DimensionError("symmetric region report limited to n <= 3");
    if (fixed && fixed->size() != A.n) throw InvariantError("fixed-coordinate mask size mismatch");
    std::vector<PieceSymmetricReport> out;
    for (std::size_t pi = 0; pi < report.pieces.size(); ++pi) {
        const SolutionPiece& piece = report.pieces[pi];
        PieceSymmetricReport r;
        r.piece_index = pi;
        const auto& p = piece.pattern;
        auto zw = p.zero_w();
        if (zw.size() == A.n && A.n == 2)
            for (const auto& q : sym_quadrics_2d(A, b)) r.quadrics.push_back(q);
        if (zw.size() == A.n && A.n == 3)
            for (const auto& q : sym_quadrics_3d_interior(A, b)) r.quadrics.push_back(q);
        if (A.n == 3 && zw.size() == 2)
            for (const auto& q : sym_quadrics_boundary(A, b, p)) r.quadrics.push_back(q);
        for (const auto& q : r.quadrics) r.classes.push_back(classify_quadric(q));

        if (grid_step && piece.piece.bounded() && !piece.vertices_embedded.empty()) {
            // Rational grid over the piece's bounding box, restricted to the
            // piece (and to any fixed plot plane), in lexicographic order.
            RatVec lo = piece.vertices_embedded.front(), hi = lo;
            for (const auto& v : piece.vertices_embedded)
                for (std::size_t i = 0; i < v.size(); ++i) {
                    lo[i] = std::min(lo[i], v[i]);
                    hi[i] = std::max(hi[i], v[i]);
                }
            std::vector<int> active = p.zero_w();
            RatVec point = lo;
            for (int i : p.zero_z()) point[static_cast<std::size_t>(i)] = 0;
            bool reachable = true;
            if (fixed)
                for (int i : p.zero_z()) {
                    const auto& f = (*fixed)[static_cast<std::size_t>(i)];
                    if (f && *f != 0) reachable = false;
                }
            std::function<void(std::size_t)> walk = [&](std::size_t k) {
                if (k == active.size()) {
                    RatVec inner;
                    for (int i : active) inner.push_back(point[static_cast<std::size_t>(i)]);
                    if (!piece.piece.contains(inner)) return;
                    bool member = in_symmetric_solution_set(point, A, b).member;
                    r.membership.emplace_back(point, member);
                    return;
                }
                std::size_t c = static_cast<std::size_t>(active[k]);
                if (fixed && (*fixed)[c]) {
                    point[c] = *(*fixed)[c];
                    if (point[c] >= 0) walk(k + 1);
                    return;
                }
                for (Rational v = lo[c]; v <= hi[c]; v += *grid_step) {
                    point[c] = v;
                    walk(k + 1);
                }
            };
            if (reachable) walk(0);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ilcp
