#include "CLI11.hpp"

#include "ilcp/report.hpp"
#include "ilcp/svg_render.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace ilcp;

std::string show(const Rational& x) {
    std::string r = rat_string(x);
    if (denominator(x) == 1) return r;
    return r + " (~" + decimal_string(x) + ")";
}

std::string show_vec(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += show(v[i]);
    }
    return out + ")";
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << bytes;
}

void print_certificate(const std::string& label, const ClassCertificate& cert) {
    std::cout << "  " << label << ": " << (cert.in_class() ? "yes" : "no");
    if (cert.witness) std::cout << "  witness u = " << show_vec(*cert.witness);
    if (cert.bad_entry)
        std::cout << "  offending entry (" << cert.bad_entry->first + 1 << ","
                  << cert.bad_entry->second + 1 << ")";
    if (cert.bad_minor) {
        std::cout << "  principal minor {";
        for (std::size_t k = 0; k < cert.bad_minor->size(); ++k) {
            if (k) std::cout << ",";
            std::cout << (*cert.bad_minor)[k] + 1;
        }
        std::cout << "} = " << show(*cert.bad_minor_value);
    }
    if (!cert.note.empty()) std::cout << "  (" << cert.note << ")";
    std::cout << "\n";
}

std::vector<SliceSpec> parse_slices(const std::vector<std::string>& slice_args, std::size_t n) {
    std::vector<SliceSpec> out;
    for (const auto& s : slice_args) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("--slice expects coord=value");
        std::string coord = s.substr(0, eq);
        if (!coord.empty() && (coord[0] == 'z' || coord[0] == 'Z')) coord.erase(coord.begin());
        int idx = 0;
        try {
            idx = std::stoi(coord);
        } catch (const std::exception&) {
            throw ParseError("--slice expects a coordinate like z2");
        }
        if (idx < 1 || static_cast<std::size_t>(idx) > n)
            throw ParseError("--slice coordinate out of range");
        out.push_back(SliceSpec{idx - 1, parse_rational(s.substr(eq + 1))});
    }
    return out;
}

int run_analyze(const std::string& file, const std::vector<std::string>& slice_args,
                const std::string& svg_path, const std::string& json_path,
                const std::string& grid_step, int resolution) {
    ProblemFile pf = load_problem(file);
    if (!grid_step.empty()) {
        pf.options.grid_step = parse_rational(grid_step);
        if (pf.options.grid_step <= 0) throw ParseError("--grid-step must be positive");
    }
    // An SVG needs the symmetric membership grid for the hatching; with a
    // slice, the grid walks only the plot plane.
    if (!svg_path.empty()) pf.options.symmetric_map = true;
    std::vector<SliceSpec> slices = parse_slices(slice_args, pf.n);
    std::vector<std::optional<Rational>> fixed(pf.n);
    for (const auto& s : slices) fixed[static_cast<std::size_t>(s.coord)] = s.value;

    AnalysisResult result = analyze(pf, slices.empty() ? nullptr : &fixed);

    std::cout << "problem: n = " << pf.n << "\n";
    if (pf.options.classes) {
        std::cout << "matrix classes over the box:\n";
        print_certificate("every member an M-matrix ", result.family_m);
        print_certificate("every member an H+-matrix", result.family_hplus);
        print_certificate("every member a P-matrix  ", result.family_p);
    }
    if (result.pieces) {
        std::cout << "cases (" << (1u << pf.n) << "):\n";
        for (const auto& p : enumerate_patterns(static_cast<int>(pf.n))) {
            const SolutionPiece* piece = nullptr;
            for (const auto& cand : result.pieces->pieces)
                if (cand.pattern.zero_w_mask == p.zero_w_mask) piece = &cand;
            std::cout << "  [" << p.name() << "] ";
            if (!piece) {
                std::cout << "empty\n";
                continue;
            }
            std::cout << "piece with " << piece->vertices_embedded.size() << " vertices:";
            for (const auto& v : piece->vertices_embedded) std::cout << " " << show_vec(v);
            if (!piece->rays_embedded.empty()) {
                std::cout << " rays:";
                for (const auto& r : piece->rays_embedded) std::cout << " " << show_vec(r);
            }
            std::cout << "\n";
        }
        if (result.pieces->inf_box)
            std::cout << "componentwise inf = " << show_vec(*result.pieces->inf_box)
                      << ", sup = " << show_vec(*result.pieces->sup_box) << "\n";
        std::cout << result.pieces->connectedness_note << "\n";
    }
    if (result.extremal) {
        if (result.extremal->inf_candidate)
            std::cout << "upper-corner solution (inf candidate): "
                      << show_vec(*result.extremal->inf_candidate) << "\n";
        if (result.extremal->sup_candidate)
            std::cout << "lower-corner solution (sup candidate): "
                      << show_vec(*result.extremal->sup_candidate) << "\n";
    }
    for (const auto& pr : result.symmetric) {
        if (pr.quadrics.empty()) continue;
        const auto& piece = result.pieces->pieces[pr.piece_index];
        std::cout << "quadric conditions for [" << piece.pattern.name() << "]:\n";
        for (std::size_t k = 0; k < pr.quadrics.size(); ++k) {
            const auto& cls = pr.classes[k];
            std::cout << "  pair (" << pr.quadrics[k].pair_i + 1 << ","
                      << pr.quadrics[k].pair_j + 1 << ") side " << pr.quadrics[k].side
                      << ": signature (" << cls.n_plus << "," << cls.n_minus << "," << cls.n_zero
                      << ") " << quadric_label_name(cls.label) << "\n";
        }
        if (!pr.membership.empty()) {
            std::size_t members = 0;
            for (const auto& [point, member] : pr.membership)
                if (member) ++members;
            std::cout << "  symmetric membership grid: " << members << "/" << pr.membership.size()
                      << " sampled points belong to the symmetric solution set\n";
        }
    }

    if (!json_path.empty()) write_file(json_path, report_json(result));
    if (!svg_path.empty()) {
        SvgOptions opts;
        opts.resolution = resolution;
        opts.slices = slices;
        write_file(svg_path, render_svg(result, opts));
    }
    return 0;
}

int run_check(const std::string& file, const std::string& point) {
    ProblemFile pf = load_problem(file);
    RatVec z = parse_point(point, pf.n);
    PointCheck pc = check_point(pf, z);
    std::cout << "z = " << show_vec(z) << "\n";
    std::cout << "in_solution_set: " << (pc.in_set ? "yes" : "no") << "\n";
    std::cout << "in_symmetric_solution_set: " << (pc.in_symmetric_set ? "yes" : "no") << "\n";
    if (pc.in_symmetric_set && pc.witness) {
        std::cout << "  witness M rows:\n";
        for (std::size_t i = 0; i < pf.n; ++i) {
            std::cout << "    ";
            for (std::size_t j = 0; j < pf.n; ++j) std::cout << show(pc.witness->M(i, j)) << " ";
            std::cout << "\n";
        }
        std::cout << "  witness q = " << show_vec(pc.witness->q) << "\n";
    }
    if (!pc.in_symmetric_set && pc.certificate)
        std::cout << "  " << pc.certificate->text() << "\n";
    return 0;
}

int run_classify(const std::string& file, const std::string& json_path) {
    ProblemFile pf = load_problem(file);
    pf.options = AnalysisOptions{};
    pf.options.pieces = false;
    pf.options.extremal = false;
    pf.options.quadrics = false;
    AnalysisResult result = analyze(pf);
    std::cout << "matrix classes over the box:\n";
    print_certificate("every member an M-matrix ", result.family_m);
    print_certificate("every member an H+-matrix", result.family_hplus);
    print_certificate("every member a P-matrix  ", result.family_p);
    if (!json_path.empty()) write_file(json_path, report_json(result));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solution-set analysis for linear complementarity problems with interval data"};
    app.require_subcommand(1);

    std::string file, point, svg_path, json_path, grid_step;
    std::vector<std::string> slices;
    int resolution = 64;

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline on a problem file");
    analyze_cmd->add_option("file", file, "problem JSON file")->required();
    analyze_cmd->add_option("--slice", slices, "fix a coordinate, e.g. z3=0 (repeatable)");
    analyze_cmd->add_option("--svg", svg_path, "write an SVG figure");
    analyze_cmd->add_option("--json", json_path, "write the full JSON report");
    analyze_cmd->add_option("--grid-step", grid_step, "membership grid step (rational)");
    analyze_cmd->add_option("--svg-resolution", resolution, "curve tracing cells per axis");

    auto* check_cmd = app.add_subcommand("check", "membership verdicts for one point");
    check_cmd->add_option("file", file, "problem JSON file")->required();
    check_cmd->add_option("--point", point, "comma-separated rational coordinates")->required();

    auto* classify_cmd = app.add_subcommand("classify", "matrix class certificates only");
    classify_cmd->add_option("file", file, "problem JSON file")->required();
    classify_cmd->add_option("--json", json_path, "write the JSON report");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(analyze_cmd))
            return run_analyze(file, slices, svg_path, json_path, grid_step, resolution);
        if (app.got_subcommand(check_cmd)) return run_check(file, point);
        if (app.got_subcommand(classify_cmd)) return run_classify(file, json_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ilcp::ParseError& e) {
        std::cerr << "parse error";
        if (e.line >= 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const ilcp::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
