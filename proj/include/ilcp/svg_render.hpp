#pragma once

#include "ilcp/report.hpp"

#include <string>
#include <vector>

namespace ilcp {

struct SliceSpec {
    int coord = 0;  // 0-based coordinate held fixed
    Rational value;
};

struct SvgOptions {
    std::vector<SliceSpec> slices;
    int resolution = 64;  // curve-tracing cells per axis
    int width = 640;
    int height = 480;
};

/// Deterministic SVG: filled piece polygons, quadric zero-set polylines
/// (sign bracketing on a rational grid, bisected to 1e-4 of a world unit),
/// and cross marks on membership-grid points excluded from the symmetric
/// set. All geometry is computed in exact arithmetic and only formatted to
/// fixed decimals at the end. Requires exactly two free coordinates after
/// applying the slices.
std::string render_svg(const AnalysisResult& result, const SvgOptions& options);

}  // namespace ilcp
