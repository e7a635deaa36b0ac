#include "ilcp/svg_render.hpp"

#include <algorithm>
#include <sstream>

namespace ilcp {

namespace {

// Fixed two-decimal rendering, round half up; keeps output byte-stable.
std::string px(const Rational& r) {
    Integer rounded = round_half_up(Rational(r * 100));
    bool neg = rounded < 0;
    Integer mag = neg ? Integer(-rounded) : rounded;
    std::ostringstream os;
    os << mag;
    std::string d = os.str();
    while (d.size() < 3) d.insert(d.begin(), '0');
    std::string out = d.substr(0, d.size() - 2) + "." + d.substr(d.size() - 2);
    return neg ? "-" + out : out;
}

struct PlotPiece {
    std::vector<RatVec> boundary;  // 2D points in drawing order
    std::vector<RatVec> lex_vertices;
};

struct QuadricSlice {
    RatMat Q;  // 2x2
    RatVec b;
    Rational c;

    Rational eval(const Rational& x, const Rational& y) const {
        return Q(0, 0) * x * x + 2 * Q(0, 1) * x * y + Q(1, 1) * y * y + b[0] * x + b[1] * y + c;
    }
};

// Exact angular order around the centroid for a convex polygon.
std::vector<RatVec> boundary_order(std::vector<RatVec> pts) {
    if (pts.size() <= 2) return pts;
    RatVec c(2, Rational(0));
    for (const auto& p : pts) {
        c[0] += p[0];
        c[1] += p[1];
    }
    c[0] /= Rational(static_cast<int>(pts.size()));
    c[1] /= Rational(static_cast<int>(pts.size()));
    auto half = [&](const RatVec& p) {
        Rational dx = p[0] - c[0], dy = p[1] - c[1];
        return (dy > 0 || (dy == 0 && dx < 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        if (cross != 0) return cross > 0;
        return lex_less(a, b);
    });
    return pts;
}

}  // namespace

std::string render_svg(const AnalysisResult& result, const SvgOptions& opt) {
    const std::size_t n = result.problem.n;
    std::vector<bool> fixed(n, false);
    RatVec fixed_value(n, Rational(0));
    for (const auto& s : opt.slices) {
        if (s.coord < 0 || static_cast<std::size_t>(s.coord) >= n)
            throw std::invalid_argument("slice coordinate out of range");
        fixed[static_cast<std::size_t>(s.coord)] = true;
        fixed_value[static_cast<std::size_t>(s.coord)] = s.value;
    }
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < n; ++i)
        if (!fixed[i]) axes.push_back(i);
    if (axes.size() != 2)
        throw std::invalid_argument("plotting needs exactly two free coordinates; use --slice");
    if (!result.pieces) throw std::invalid_argument("plotting needs the pieces analysis");

    // Slice each piece down to the plot plane.
    std::vector<PlotPiece> plot_pieces;
    for (const auto& piece : result.pieces->pieces) {
        bool present = true;
        for (int i : piece.pattern.zero_z())
            if (fixed[static_cast<std::size_t>(i)] && fixed_value[static_cast<std::size_t>(i)] != 0)
                present = false;
        if (!present) continue;

        auto active = piece.pattern.zero_w();
        std::vector<std::size_t> keep;  // positions of free coords among active vars
        LinearSystem sliced;
        for (std::size_t k = 0; k < active.size(); ++k)
            if (!fixed[static_cast<std::size_t>(active[k])]) {
                keep.push_back(k);
                sliced.vars.push_back(piece.piece.halfspaces.vars[k]);
            }
        for (const auto& c : piece.piece.halfspaces.cons) {
            Constraint e;
            e.rel = c.rel;
            e.rhs = c.rhs;
            for (std::size_t k = 0; k < active.size(); ++k) {
                std::size_t coord = static_cast<std::size_t>(active[k]);
                if (fixed[coord])
                    e.rhs -= c.coeffs[k] * fixed_value[coord];
                else
                    e.coeffs.push_back(c.coeffs[k]);
            }
            sliced.cons.push_back(std::move(e));
        }
        // Sliced z-coordinates must also be admissible (z >= 0 is implicit
        // for the kept ones; the fixed ones need their value >= 0).
        for (int i : piece.pattern.zero_w())
            if (fixed[static_cast<std::size_t>(i)] && fixed_value[static_cast<std::size_t>(i)] < 0)
                present = false;
        if (!present) continue;

        Polyhedron poly = vertex_enumeration(sliced);
        if (poly.empty()) continue;

        PlotPiece pp;
        for (const auto& v : poly.vertices) {
            RatVec pt(2, Rational(0));
            for (std::size_t k = 0; k < keep.size(); ++k) {
                std::size_t coord = static_cast<std::size_t>(active[keep[k]]);
                for (std::size_t a = 0; a < 2; ++a)
                    if (axes[a] == coord) pt[a] = v[k];
            }
            pp.lex_vertices.push_back(pt);
        }
        std::sort(pp.lex_vertices.begin(), pp.lex_vertices.end(), lex_less);
        pp.lex_vertices.erase(std::unique(pp.lex_vertices.begin(), pp.lex_vertices.end(), vec_eq),
                              pp.lex_vertices.end());
        pp.boundary = boundary_order(pp.lex_vertices);
        plot_pieces.push_back(std::move(pp));
    }

    // Slice the quadrics.
    std::vector<QuadricSlice> curves;
    for (const auto& pr : result.symmetric)
        for (const auto& q : pr.quadrics) {
            QuadricSlice s;
            s.Q = RatMat(2, 2);
            s.b.assign(2, Rational(0));
            s.c = q.c;
            for (std::size_t a = 0; a < 2; ++a) {
                s.b[a] = q.b[axes[a]];
                for (std::size_t bidx = 0; bidx < 2; ++bidx) s.Q(a, bidx) = q.Q(axes[a], axes[bidx]);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (!fixed[i]) continue;
                const Rational& v = fixed_value[i];
                s.c += q.b[i] * v + q.Q(i, i) * v * v;
                for (std::size_t a = 0; a < 2; ++a) s.b[a] += 2 * q.Q(axes[a], i) * v;
            }
            curves.push_back(std::move(s));
        }

    // World bounding box: pieces plus origin, with a margin.
    Rational xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    for (const auto& pp : plot_pieces)
        for (const auto& v : pp.lex_vertices) {
            xmax = std::max(xmax, v[0]);
            ymax = std::max(ymax, v[1]);
            xmin = std::min(xmin, v[0]);
            ymin = std::min(ymin, v[1]);
        }
    Rational mx = (xmax - xmin) / 10 + Rational(1, 2);
    Rational my = (ymax - ymin) / 10 + Rational(1, 2);
    xmin -= mx;
    xmax += mx;
    ymin -= my;
    ymax += my;

    const Rational pad = 30;
    Rational sx = (Rational(opt.width) - 2 * pad) / (xmax - xmin);
    Rational sy = (Rational(opt.height) - 2 * pad) / (ymax - ymin);
    auto X = [&](const Rational& x) { return pad + (x - xmin) * sx; };
    auto Y = [&](const Rational& y) { return Rational(opt.height) - pad - (y - ymin) * sy; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n";
    svg << "<rect width=\"" << opt.width << "\" height=\"" << opt.height
        << "\" fill=\"#ffffff\"/>\n";

    // Axes with integer ticks (thinned on wide ranges).
    svg << "<g stroke=\"#888888\" stroke-width=\"1\" font-family=\"monospace\" font-size=\"10\">\n";
    if (ymin <= 0 && ymax >= 0)
        svg << "<line x1=\"" << px(X(xmin)) << "\" y1=\"" << px(Y(Rational(0))) << "\" x2=\""
            << px(X(xmax)) << "\" y2=\"" << px(Y(Rational(0))) << "\"/>\n";
    if (xmin <= 0 && xmax >= 0)
        svg << "<line x1=\"" << px(X(Rational(0))) << "\" y1=\"" << px(Y(ymin)) << "\" x2=\""
            << px(X(Rational(0))) << "\" y2=\"" << px(Y(ymax)) << "\"/>\n";
    Integer xstep = 1 + floor_int(Rational((xmax - xmin) / 16));
    Integer ystep = 1 + floor_int(Rational((ymax - ymin) / 16));
    for (Integer t = floor_int(xmin); Rational(t) <= xmax; t += xstep) {
        if (Rational(t) < xmin) continue;
        svg << "<line x1=\"" << px(X(Rational(t))) << "\" y1=\"" << px(Y(Rational(0)) - 3)
            << "\" x2=\"" << px(X(Rational(t))) << "\" y2=\"" << px(Y(Rational(0)) + 3)
            << "\"/><text x=\"" << px(X(Rational(t)) + 2) << "\" y=\"" << px(Y(Rational(0)) + 12)
            << "\" stroke=\"none\" fill=\"#666666\">" << t << "</text>\n";
    }
    for (Integer t = floor_int(ymin); Rational(t) <= ymax; t += ystep) {
        if (Rational(t) < ymin || t == 0) continue;
        svg << "<line x1=\"" << px(X(Rational(0)) - 3) << "\" y1=\"" << px(Y(Rational(t)))
            << "\" x2=\"" << px(X(Rational(0)) + 3) << "\" y2=\"" << px(Y(Rational(t)))
            << "\"/><text x=\"" << px(X(Rational(0)) + 5) << "\" y=\"" << px(Y(Rational(t)) - 2)
            << "\" stroke=\"none\" fill=\"#666666\">" << t << "</text>\n";
    }
    svg << "<text x=\"" << px(Rational(opt.width) - pad + 4) << "\" y=\""
        << px(Y(Rational(0)) - 4) << "\" stroke=\"none\" fill=\"#444444\">z" << axes[0] + 1
        << "</text>\n";
    svg << "<text x=\"" << px(X(Rational(0)) + 4) << "\" y=\"" << px(pad - 8)
        << "\" stroke=\"none\" fill=\"#444444\">z" << axes[1] + 1 << "</text>\n";
    svg << "</g>\n";

    // Pieces: polygons, segments, or points.
    for (const auto& pp : plot_pieces) {
        if (pp.boundary.size() >= 3) {
            svg << "<polygon fill=\"#d8d8d8\" stroke=\"#555555\" stroke-width=\"1\" points=\"";
            for (std::size_t k = 0; k < pp.boundary.size(); ++k) {
                if (k) svg << " ";
                svg << px(X(pp.boundary[k][0])) << "," << px(Y(pp.boundary[k][1]));
            }
            svg << "\"/>\n";
        } else if (pp.boundary.size() == 2) {
            svg << "<line stroke=\"#555555\" stroke-width=\"3\" x1=\"" << px(X(pp.boundary[0][0]))
                << "\" y1=\"" << px(Y(pp.boundary[0][1])) << "\" x2=\"" << px(X(pp.boundary[1][0]))
                << "\" y2=\"" << px(Y(pp.boundary[1][1])) << "\"/>\n";
        } else if (pp.boundary.size() == 1) {
            svg << "<circle fill=\"#555555\" r=\"3\" cx=\"" << px(X(pp.boundary[0][0]))
                << "\" cy=\"" << px(Y(pp.boundary[0][1])) << "\"/>\n";
        }
    }

    // Quadric zero sets: sign bracketing on the grid, bisection to 1e-4.
    const Rational tol(1, 10000);
    for (const auto& curve : curves) {
        bool constant = curve.Q(0, 0) == 0 && curve.Q(0, 1) == 0 && curve.Q(1, 1) == 0 &&
                        curve.b[0] == 0 && curve.b[1] == 0;
        if (constant) continue;
        std::ostringstream path;
        Rational dx = (xmax - xmin) / opt.resolution;
        Rational dy = (ymax - ymin) / opt.resolution;
        auto nonneg = [&](const Rational& x, const Rational& y) { return curve.eval(x, y) >= 0; };
        auto root_on_edge = [&](Rational x0, Rational y0, Rational x1, Rational y1) {
            // One endpoint nonnegative, one negative; bisect the segment.
            while ((x1 - x0) * (x1 - x0) + (y1 - y0) * (y1 - y0) > tol * tol) {
                Rational xm = (x0 + x1) / 2, ym = (y0 + y1) / 2;
                if (nonneg(xm, ym) == nonneg(x0, y0)) {
                    x0 = xm;
                    y0 = ym;
                } else {
                    x1 = xm;
                    y1 = ym;
                }
            }
            return std::pair<Rational, Rational>((x0 + x1) / 2, (y0 + y1) / 2);
        };
        for (int i = 0; i < opt.resolution; ++i)
            for (int j = 0; j < opt.resolution; ++j) {
                Rational x0 = xmin + dx * i, x1 = x0 + dx;
                Rational y0 = ymin + dy * j, y1 = y0 + dy;
                bool s00 = nonneg(x0, y0), s10 = nonneg(x1, y0);
                bool s01 = nonneg(x0, y1), s11 = nonneg(x1, y1);
                std::vector<std::pair<Rational, Rational>> hits;
                if (s00 != s10) hits.push_back(root_on_edge(x0, y0, x1, y0));
                if (s10 != s11) hits.push_back(root_on_edge(x1, y0, x1, y1));
                if (s01 != s11) hits.push_back(root_on_edge(x0, y1, x1, y1));
                if (s00 != s01) hits.push_back(root_on_edge(x0, y0, x0, y1));
                if (hits.size() == 2) {
                    path << "M" << px(X(hits[0].first)) << " " << px(Y(hits[0].second)) << "L"
                         << px(X(hits[1].first)) << " " << px(Y(hits[1].second));
                } else if (hits.size() == 4) {
                    // Saddle cell: pair by the center sign.
                    bool center = nonneg((x0 + x1) / 2, (y0 + y1) / 2);
                    int a0 = center == s00 ? 1 : 0;
                    path << "M" << px(X(hits[0].first)) << " " << px(Y(hits[0].second)) << "L"
                         << px(X(hits[a0 == 1 ? 1 : 3].first)) << " "
                         << px(Y(hits[a0 == 1 ? 1 : 3].second));
                    path << "M" << px(X(hits[2].first)) << " " << px(Y(hits[2].second)) << "L"
                         << px(X(hits[a0 == 1 ? 3 : 1].first)) << " "
                         << px(Y(hits[a0 == 1 ? 3 : 1].second));
                }
            }
        std::string d = path.str();
        if (!d.empty())
            svg << "<path fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\" d=\"" << d
                << "\"/>\n";
    }

    // Membership grid: cross marks on points excluded from the symmetric set.
    for (const auto& pr : result.symmetric)
        for (const auto& [point, member] : pr.membership) {
            bool on_plane = true;
            for (std::size_t i = 0; i < n; ++i)
                if (fixed[i] && point[i] != fixed_value[i]) on_plane = false;
            if (!on_plane) continue;
            Rational cx = X(point[axes[0]]), cy = Y(point[axes[1]]);
            if (!member) {
                svg << "<path stroke=\"#c1121f\" stroke-width=\"1\" d=\"M" << px(cx - 3) << " "
                    << px(cy - 3) << "L" << px(cx + 3) << " " << px(cy + 3) << "M" << px(cx - 3)
                    << " " << px(cy + 3) << "L" << px(cx + 3) << " " << px(cy - 3) << "\"/>\n";
            }
        }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ilcp
