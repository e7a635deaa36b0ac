#include "ilcp/report.hpp"

#include "json.hpp"

#include <sstream>

namespace ilcp {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json num(const Rational& x) {
    return ordered_json{{"rat", rat_string(x)}, {"dec", decimal_string(x)}};
}

ordered_json vec(const RatVec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(num(x));
    return out;
}

ordered_json vecs(const std::vector<RatVec>& vs) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vs) out.push_back(vec(v));
    return out;
}

ordered_json mat(const RatMat& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(num(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json certificate_json(const ClassCertificate& c) {
    ordered_json out;
    out["in_class"] = c.in_class();
    out["kind"] = matrix_class_name(c.kind);
    if (c.witness) out["witness"] = vec(*c.witness);
    if (c.bad_entry) out["offending_entry"] = {c.bad_entry->first + 1, c.bad_entry->second + 1};
    if (c.bad_minor) {
        ordered_json idx = ordered_json::array();
        for (int i : *c.bad_minor) idx.push_back(i + 1);
        out["offending_minor"] = idx;
        out["offending_minor_value"] = num(*c.bad_minor_value);
    }
    if (c.bad_vertex) out["offending_corner"] = mat(*c.bad_vertex);
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

ordered_json pattern_json(const SupportPattern& p) {
    ordered_json out;
    out["index"] = p.zero_w_mask;
    out["pattern"] = p.name();
    ordered_json zz = ordered_json::array(), zw = ordered_json::array();
    for (int i : p.zero_z()) zz.push_back(i + 1);
    for (int i : p.zero_w()) zw.push_back(i + 1);
    out["zero_z"] = zz;
    out["zero_w"] = zw;
    return out;
}

ordered_json constraints_json(const LinearSystem& sys) {
    ordered_json out = ordered_json::array();
    for (const auto& c : sys.cons) {
        ordered_json row;
        ordered_json names = ordered_json::array();
        for (const auto& v : sys.vars) names.push_back(var_name(v));
        row["variables"] = names;
        row["coeffs"] = vec(c.coeffs);
        row["rel"] = c.rel == Rel::LE ? "<=" : ">=";
        row["rhs"] = num(c.rhs);
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json quadric_json(const QuadricInequality& q, const QuadricClass& cls) {
    ordered_json out;
    out["pair"] = {q.pair_i + 1, q.pair_j + 1};
    out["side"] = q.side;
    out["Q"] = mat(q.Q);
    out["b"] = vec(q.b);
    out["c"] = num(q.c);
    out["signature"] = {cls.n_plus, cls.n_minus, cls.n_zero};
    out["label"] = quadric_label_name(cls.label);
    return out;
}

}  // namespace

AnalysisResult analyze(const ProblemFile& pf,
                       const std::vector<std::optional<Rational>>* map_fixed) {
    AnalysisResult r;
    r.problem = pf;
    if (pf.options.classes) {
        r.family_m = interval_is_m(pf.M);
        r.family_hplus = interval_is_hplus(pf.M);
        r.family_p = interval_is_p(pf.M);
    }
    if (pf.options.pieces || pf.options.quadrics || pf.options.symmetric_map)
        r.pieces = assemble_solution_set(pf.M, pf.q);
    if (pf.options.extremal) {
        RatMat up(pf.n, pf.n), lo(pf.n, pf.n);
        for (std::size_t i = 0; i < pf.n; ++i)
            for (std::size_t j = 0; j < pf.n; ++j) {
                up(i, j) = pf.M.at(i, j).hi;
                lo(i, j) = pf.M.at(i, j).lo;
            }
        if (is_m_matrix(up).in_class() || is_m_matrix(lo).in_class())
            r.extremal = extremal_solutions(pf.M, pf.q);
    }
    if ((pf.options.quadrics || pf.options.symmetric_map) && r.pieces && pf.n <= 3) {
        std::optional<Rational> step;
        if (pf.options.symmetric_map) step = pf.options.grid_step;
        r.symmetric = symmetric_region_report(pf.M, pf.q, *r.pieces, step, map_fixed);
    }
    return r;
}

std::string report_json(const AnalysisResult& r) {
    ordered_json out;
    out["n"] = r.problem.n;

    ordered_json data;
    data["M"] = ordered_json::array();
    for (std::size_t i = 0; i < r.problem.n; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < r.problem.n; ++j) {
            const Interval& e = r.problem.M.at(i, j);
            row.push_back(ordered_json::array({num(e.lo), num(e.hi)}));
        }
        data["M"].push_back(std::move(row));
    }
    data["q"] = ordered_json::array();
    for (std::size_t i = 0; i < r.problem.n; ++i) {
        const Interval& e = r.problem.q[i];
        data["q"].push_back(ordered_json::array({num(e.lo), num(e.hi)}));
    }
    out["problem"] = std::move(data);

    if (r.problem.options.classes) {
        ordered_json classes;
        classes["all_m_matrices"] = certificate_json(r.family_m);
        classes["all_hplus_matrices"] = certificate_json(r.family_hplus);
        classes["all_p_matrices"] = certificate_json(r.family_p);
        out["matrix_classes"] = std::move(classes);
    }

    if (r.pieces) {
        ordered_json patterns = ordered_json::array();
        for (const auto& p : enumerate_patterns(static_cast<int>(r.problem.n))) {
            ordered_json entry = pattern_json(p);
            const SolutionPiece* piece = nullptr;
            for (const auto& cand : r.pieces->pieces)
                if (cand.pattern.zero_w_mask == p.zero_w_mask) piece = &cand;
            if (piece) {
                entry["status"] = "piece";
                ordered_json names = ordered_json::array();
                for (const auto& v : piece->case_region.halfspaces.vars)
                    names.push_back(var_name(v));
                entry["case_variables"] = names;
                entry["case_vertices"] = vecs(piece->case_region.vertices);
                if (!piece->case_region.rays.empty())
                    entry["case_rays"] = vecs(piece->case_region.rays);
                entry["piece_constraints"] = constraints_json(piece->piece.halfspaces);
                entry["vertices"] = vecs(piece->vertices_embedded);
                if (!piece->rays_embedded.empty()) entry["rays"] = vecs(piece->rays_embedded);
            } else {
                entry["status"] = "empty";
                for (const auto& e : r.pieces->empty_patterns)
                    if (e.pattern.zero_w_mask == p.zero_w_mask)
                        entry["infeasibility_witness"] = vec(e.witness);
            }
            patterns.push_back(std::move(entry));
        }
        out["patterns"] = std::move(patterns);
        out["bounded"] = r.pieces->bounded;
        if (r.pieces->inf_box) out["inf"] = vec(*r.pieces->inf_box);
        if (r.pieces->sup_box) out["sup"] = vec(*r.pieces->sup_box);
        out["connectedness"] = r.pieces->connectedness_note;
    }

    if (r.extremal) {
        ordered_json ext;
        ext["upper_corner_m"] = r.extremal->upper_cert.in_class();
        ext["lower_corner_m"] = r.extremal->lower_cert.in_class();
        ext["family_m"] = r.extremal->family_cert.in_class();
        if (r.extremal->inf_candidate) ext["inf_candidate"] = vec(*r.extremal->inf_candidate);
        if (r.extremal->sup_candidate) ext["sup_candidate"] = vec(*r.extremal->sup_candidate);
        out["extremal"] = std::move(ext);
    }

    if (!r.symmetric.empty()) {
        ordered_json sym = ordered_json::array();
        for (const auto& pr : r.symmetric) {
            ordered_json entry;
            const auto& piece = r.pieces->pieces[pr.piece_index];
            entry["pattern"] = piece.pattern.name();
            ordered_json qs = ordered_json::array();
            for (std::size_t k = 0; k < pr.quadrics.size(); ++k)
                qs.push_back(quadric_json(pr.quadrics[k], pr.classes[k]));
            entry["quadrics"] = std::move(qs);
            if (!pr.membership.empty()) {
                ordered_json map = ordered_json::array();
                for (const auto& [point, member] : pr.membership) {
                    ordered_json row;
                    row["z"] = vec(point);
                    row["member"] = member;
                    map.push_back(std::move(row));
                }
                entry["membership"] = std::move(map);
            }
            sym.push_back(std::move(entry));
        }
        out["symmetric"] = std::move(sym);
    }
    return out.dump(2) + "\n";
}

PointCheck check_point(const ProblemFile& pf, const RatVec& z) {
    PointCheck out;
    out.in_set = in_solution_set(z, pf.M, pf.q);
    auto sym = in_symmetric_solution_set(z, pf.M, pf.q);
    out.in_symmetric_set = sym.member;
    out.witness = sym.witness;
    out.certificate = sym.certificate;
    return out;
}

RatVec parse_point(const std::string& text, std::size_t n) {
    RatVec z;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) z.push_back(parse_rational(token));
    if (z.size() != n)
        throw ParseError("point has " + std::to_string(z.size()) + " coordinates, expected " +
                         std::to_string(n));
    for (const auto& x : z)
        if (x < 0) throw ParseError("point coordinates must be nonnegative");
    return z;
}

}  // namespace ilcp
