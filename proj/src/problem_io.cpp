#include "ilcp/problem_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace ilcp {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg, const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError(msg, line, col);
}

Rational rational_field(const json& v, const char* what) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float())
        throw ParseError(std::string(what) + ": binary floats are not accepted; use a string literal");
    throw ParseError(std::string(what) + ": expected a rational string");
}

Interval interval_field(const json& v, const char* what) {
    if (v.is_array()) {
        if (v.size() != 2) throw ParseError(std::string(what) + ": expected [lo, hi]");
        Rational lo = rational_field(v[0], what);
        Rational hi = rational_field(v[1], what);
        if (lo > hi) throw ParseError(std::string(what) + ": endpoints out of order");
        return Interval(lo, hi);
    }
    return Interval::point(rational_field(v, what));
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what(), json_text, e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer field 'n'");
    long long n = doc["n"].get<long long>();
    if (n < 1) throw ParseError("'n' must be at least 1");
    if (n > 4) throw DimensionError("problems limited to n <= 4");

    ProblemFile pf;
    pf.n = static_cast<std::size_t>(n);
    if (!doc.contains("M") || !doc["M"].is_array() || doc["M"].size() != pf.n)
        throw ParseError("'M' must be an n x n array");
    pf.M = IntervalMatrix(pf.n);
    for (std::size_t i = 0; i < pf.n; ++i) {
        const json& row = doc["M"][i];
        if (!row.is_array() || row.size() != pf.n) throw ParseError("'M' must be an n x n array");
        for (std::size_t j = 0; j < pf.n; ++j) pf.M.at(i, j) = interval_field(row[j], "M entry");
    }
    if (!doc.contains("q") || !doc["q"].is_array() || doc["q"].size() != pf.n)
        throw ParseError("'q' must be an array of n intervals");
    std::vector<Interval> q;
    for (std::size_t i = 0; i < pf.n; ++i) q.push_back(interval_field(doc["q"][i], "q entry"));
    pf.q = IntervalVector(std::move(q));

    if (doc.contains("options")) {
        const json& opt = doc["options"];
        if (!opt.is_object()) throw ParseError("'options' must be an object");
        if (opt.contains("analyses")) {
            pf.options.classes = pf.options.pieces = pf.options.extremal = pf.options.quadrics =
                pf.options.symmetric_map = false;
            for (const auto& a : opt["analyses"]) {
                std::string name = a.get<std::string>();
                if (name == "classes")
                    pf.options.classes = true;
                else if (name == "pieces")
                    pf.options.pieces = true;
                else if (name == "extremal")
                    pf.options.extremal = true;
                else if (name == "quadrics")
                    pf.options.quadrics = true;
                else if (name == "symmetric_map")
                    pf.options.symmetric_map = true;
                else
                    throw ParseError("unknown analysis '" + name + "'");
            }
        }
        if (opt.contains("grid_step")) {
            pf.options.grid_step = rational_field(opt["grid_step"], "grid_step");
            if (pf.options.grid_step <= 0) throw ParseError("grid_step must be positive");
        }
    }
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

}  // namespace ilcp
