#pragma once

#include "ilcp/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ilcp {

struct AnalysisOptions {
    bool classes = true;
    bool pieces = true;
    bool extremal = true;
    bool quadrics = true;
    bool symmetric_map = false;  // full grid membership map is opt-in
    Rational grid_step = Rational(1, 8);
};

/// A problem document: interval data plus requested analyses. Rationals are
/// carried as strings ("-1/4", "-0.25", "3") and parsed exactly; bare
/// strings or integers denote point intervals.
struct ProblemFile {
    std::size_t n = 0;
    IntervalMatrix M;
    IntervalVector q;
    AnalysisOptions options;
};

ProblemFile parse_problem(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

}  // namespace ilcp
