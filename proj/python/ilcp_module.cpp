#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ilcp/report.hpp"
#include "ilcp/svg_render.hpp"

namespace py = pybind11;
using namespace ilcp;

namespace {

std::vector<std::string> vec_strings(const RatVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(rat_string(x));
    return out;
}

RatMat parse_matrix(const std::vector<std::vector<std::string>>& rows) {
    RatMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw ParseError("ragged matrix");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

RatVec parse_vector(const std::vector<std::string>& xs) {
    RatVec v;
    for (const auto& s : xs) v.push_back(parse_rational(s));
    return v;
}

py::dict solve_py(const std::vector<std::vector<std::string>>& M,
                  const std::vector<std::string>& q) {
    LcpInstance inst(parse_matrix(M), parse_vector(q));
    LcpSolutionSet sol = solve_lcp(inst);
    py::list points, rays;
    for (const auto& p : sol.points) points.append(vec_strings(p));
    for (const auto& r : sol.rays) {
        py::dict d;
        d["base"] = vec_strings(r.base);
        d["dir"] = vec_strings(r.dir);
        if (r.t_max) d["t_max"] = rat_string(*r.t_max);
        rays.append(d);
    }
    py::dict out;
    out["points"] = points;
    out["rays"] = rays;
    out["complete"] = sol.complete;
    return out;
}

py::dict check_py(const std::string& problem_json, const std::string& point) {
    ProblemFile pf = parse_problem(problem_json);
    RatVec z = parse_point(point, pf.n);
    PointCheck pc = check_point(pf, z);
    py::dict out;
    out["in_solution_set"] = pc.in_set;
    out["in_symmetric_solution_set"] = pc.in_symmetric_set;
    if (pc.certificate) out["certificate"] = pc.certificate->text();
    if (pc.witness) {
        py::dict w;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < pf.n; ++i) {
            std::vector<std::string> row;
            for (std::size_t j = 0; j < pf.n; ++j) row.push_back(rat_string(pc.witness->M(i, j)));
            rows.push_back(std::move(row));
        }
        w["M"] = rows;
        w["q"] = vec_strings(pc.witness->q);
        out["witness"] = w;
    }
    return out;
}

std::string analyze_py(const std::string& problem_json) {
    return report_json(analyze(parse_problem(problem_json)));
}

std::string svg_py(const std::string& problem_json, const std::vector<std::string>& slices,
                   int resolution) {
    ProblemFile pf = parse_problem(problem_json);
    pf.options.symmetric_map = true;
    SvgOptions opts;
    opts.resolution = resolution;
    for (const auto& s : slices) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("slice expects coord=value");
        std::string coord = s.substr(0, eq);
        if (!coord.empty() && (coord[0] == 'z' || coord[0] == 'Z')) coord.erase(coord.begin());
        opts.slices.push_back(SliceSpec{std::stoi(coord) - 1, parse_rational(s.substr(eq + 1))});
    }
    std::vector<std::optional<Rational>> fixed(pf.n);
    for (const auto& s : opts.slices) {
        if (s.coord < 0 || static_cast<std::size_t>(s.coord) >= pf.n)
            throw ParseError("slice coordinate out of range");
        fixed[static_cast<std::size_t>(s.coord)] = s.value;
    }
    AnalysisResult result = analyze(pf, opts.slices.empty() ? nullptr : &fixed);
    return render_svg(result, opts);
}

py::dict classify_py(const std::string& problem_json) {
    ProblemFile pf = parse_problem(problem_json);
    py::dict out;
    auto cert = [](const ClassCertificate& c) {
        py::dict d;
        d["in_class"] = c.in_class();
        if (c.witness) d["witness"] = vec_strings(*c.witness);
        if (!c.note.empty()) d["note"] = c.note;
        return d;
    };
    out["all_m_matrices"] = cert(interval_is_m(pf.M));
    out["all_hplus_matrices"] = cert(interval_is_hplus(pf.M));
    out["all_p_matrices"] = cert(interval_is_p(pf.M));
    return out;
}

}  // namespace

PYBIND11_MODULE(ilcp, m) {
    m.doc() = "Exact solution-set analysis for linear complementarity problems with interval data";
    m.def("solve_lcp", &solve_py, py::arg("M"), py::arg("q"),
          "All solutions of the LCP given by a rational matrix and vector (strings)");
    m.def("analyze", &analyze_py, py::arg("problem_json"),
          "Full pipeline; returns the JSON report as a string");
    m.def("check_point", &check_py, py::arg("problem_json"), py::arg("point"),
          "Membership of one point in the solution set and the symmetric solution set");
    m.def("classify", &classify_py, py::arg("problem_json"),
          "Matrix class certificates for the interval family");
    m.def("render_svg", &svg_py, py::arg("problem_json"),
          py::arg("slices") = std::vector<std::string>{}, py::arg("resolution") = 64,
          "Deterministic SVG figure of the pieces, quadrics, and exclusions");
}
