#include "ilcp/linear_system.hpp"

#include <algorithm>
#include <map>

namespace ilcp {

std::string var_name(const Var& v) {
    return (v.kind == VarKind::Z ? "z" : "w") + std::to_string(v.index + 1);
}

int LinearSystem::var_position(const Var& v) const {
    for (std::size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == v) return static_cast<int>(k);
    return -1;
}

void normalize_row(FmRow& r) {
    Integer l = denominator(r.c);
    for (const auto& x : r.a) l = lcm(l, denominator(x));
    Integer g = abs(numerator(r.c) * l / denominator(r.c));
    for (const auto& x : r.a) g = gcd(g, numerator(x) * l / denominator(x));
    Rational f = (g == 0) ? Rational(l) : Rational(l, g);
    if (f != 1) {
        for (auto& x : r.a) x *= f;
        r.c *= f;
        for (auto& m : r.mult) m *= f;
    }
}

std::vector<FmRow> canonical_rows(const LinearSystem& sys, bool track_multipliers) {
    std::vector<FmRow> rows;
    const std::size_t d = sys.dim();
    const std::size_t total = sys.cons.size() + d;
    auto tag = [&](std::size_t k) {
        RatVec m;
        if (track_multipliers) {
            m.assign(total, Rational(0));
            m[k] = 1;
        }
        return m;
    };
    for (std::size_t k = 0; k < sys.cons.size(); ++k) {
        const Constraint& c = sys.cons[k];
        if (c.coeffs.size() != d) throw InvariantError("constraint width mismatch");
        FmRow r;
        r.a = c.coeffs;
        r.c = c.rhs;
        if (c.rel == Rel::GE) {
            for (auto& x : r.a) x = -x;
            r.c = -r.c;
        }
        r.mult = tag(k);
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < d; ++i) {
        FmRow r;
        r.a.assign(d, Rational(0));
        r.a[i] = -1;
        r.c = 0;
        r.mult = tag(sys.cons.size() + i);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<FmRow> fm_eliminate(const std::vector<FmRow>& rows, std::size_t var) {
    std::vector<const FmRow*> pos, neg;
    std::vector<FmRow> out;
    for (const auto& r : rows) {
        if (r.a[var] > 0)
            pos.push_back(&r);
        else if (r.a[var] < 0)
            neg.push_back(&r);
        else
            out.push_back(r);
    }
    for (const FmRow* p : pos)
        for (const FmRow* q : neg) {
            Rational alpha = -q->a[var];  // > 0
            Rational beta = p->a[var];    // > 0
            FmRow r;
            r.a.resize(p->a.size());
            for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = alpha * p->a[j] + beta * q->a[j];
            r.c = alpha * p->c + beta * q->c;
            if (!p->mult.empty()) {
                r.mult.resize(p->mult.size());
                for (std::size_t j = 0; j < r.mult.size(); ++j)
                    r.mult[j] = alpha * p->mult[j] + beta * q->mult[j];
            }
            r.a[var] = 0;
            out.push_back(std::move(r));
        }
    return out;
}

bool fm_prune(std::vector<FmRow>& rows, std::optional<RatVec>* witness) {
    std::map<RatVec, std::size_t> best;  // normal vector -> index of tightest row
    std::vector<FmRow> kept;
    for (auto& r : rows) {
        bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
            if (r.c < 0) {
                if (witness) *witness = r.mult;
                FmRow bad = r;
                rows.assign(1, std::move(bad));
                return false;
            }
            continue;
        }
        normalize_row(r);
        auto it = best.find(r.a);
        if (it == best.end()) {
            best.emplace(r.a, kept.size());
            kept.push_back(std::move(r));
        } else if (r.c < kept[it->second].c) {
            kept[it->second] = std::move(r);
        }
    }
    rows = std::move(kept);
    return true;
}

FmFeasibility fm_feasibility(const LinearSystem& sys) {
    std::vector<FmRow> rows = canonical_rows(sys, true);
    FmFeasibility out;
    std::optional<RatVec> w;
    for (std::size_t v = 0; v < sys.dim(); ++v) {
        if (!fm_prune(rows, &w)) {
            out.feasible = false;
            out.farkas = w;
            return out;
        }
        rows = fm_eliminate(rows, v);
    }
    if (!fm_prune(rows, &w)) {
        out.feasible = false;
        out.farkas = w;
    }
    return out;
}

bool satisfies(const LinearSystem& sys, const RatVec& x) {
    if (x.size() != sys.dim()) throw InvariantError("satisfies: dimension mismatch");
    for (const auto& v : x)
        if (v < 0) return false;
    for (const auto& c : sys.cons) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
        if (c.rel == Rel::LE ? lhs > c.rhs : lhs < c.rhs) return false;
    }
    return true;
}

}  // namespace ilcp
