#pragma once

#include "ilcp/lcp.hpp"
#include "ilcp/problem_io.hpp"
#include "ilcp/quadric.hpp"
#include "ilcp/solution_set.hpp"
#include "ilcp/symmetric_set.hpp"

#include <optional>
#include <string>

namespace ilcp {

/// Everything one run of the pipeline produces for a problem file.
struct AnalysisResult {
    ProblemFile problem;
    ClassCertificate family_m;
    ClassCertificate family_hplus;
    ClassCertificate family_p;
    std::optional<SolutionSetReport> pieces;
    std::optional<ExtremalSolutions> extremal;   // corner premise held
    std::vector<PieceSymmetricReport> symmetric; // quadrics (+ map if requested)
};

/// `map_fixed`, when given, pins coordinates for the symmetric membership
/// grid (a plot slice); classes, pieces, and quadrics are unaffected.
AnalysisResult analyze(const ProblemFile& pf,
                       const std::vector<std::optional<Rational>>* map_fixed = nullptr);

/// Deterministic JSON serialization: every number appears as
/// {"rat": exact string, "dec": decimal annotation}.
std::string report_json(const AnalysisResult& result);

struct PointCheck {
    bool in_set = false;
    bool in_symmetric_set = false;
    std::optional<SymWitness> witness;
    std::optional<SymCertificate> certificate;
};

PointCheck check_point(const ProblemFile& pf, const RatVec& z);

RatVec parse_point(const std::string& text, std::size_t n);

}  // namespace ilcp
