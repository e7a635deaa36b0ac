// Acceptance suite: one line per criterion, exact comparisons throughout.
// Runs the whole pipeline on the shipped fixture files plus the randomized
// property suites, and exits nonzero if any criterion fails.

#include "ilcp/report.hpp"
#include "ilcp/svg_render.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace ilcp;
using namespace ts;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << note << std::endl;
    if (!ok) ++failures;
}

bool expect(bool cond, const std::string& what) {
    if (!cond) std::cout << "      failed: " << what << "\n";
    return cond;
}

std::string fixture_dir;  // set from argv

ProblemFile fixture(const std::string& name) {
    return load_problem(fixture_dir + "/" + name + ".json");
}

RatVec point(std::initializer_list<std::string> xs) { return rv(xs); }

bool same_vertices(const std::vector<RatVec>& got,
                   std::initializer_list<std::initializer_list<std::string>> want) {
    std::vector<RatVec> w;
    for (const auto& p : want) {
        RatVec x;
        for (const auto& s : p) x.push_back(rat(s));
        w.push_back(std::move(x));
    }
    std::sort(w.begin(), w.end(), lex_less);
    if (got.size() != w.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!vec_eq(got[i], w[i])) return false;
    return true;
}

const SolutionPiece* piece_for(const SolutionSetReport& r, unsigned mask) {
    for (const auto& p : r.pieces)
        if (p.pattern.zero_w_mask == mask) return &p;
    return nullptr;
}

// ---------------------------------------------------------------------
// 1. 2D M-family pipeline: the two pieces, inf, and sup, all exact.
bool criterion1() {
    auto pf = fixture("m_matrix_2d");
    auto report = assemble_solution_set(pf.M, pf.q);
    bool ok = expect(report.pieces.size() == 2, "exactly two pieces");
    const auto* seg = piece_for(report, 0b01);
    const auto* poly = piece_for(report, 0b11);
    ok &= expect(seg && same_vertices(seg->vertices_embedded, {{"1", "0"}, {"10", "0"}}),
                 "segment piece is [1,10] x {0}");
    ok &= expect(poly && same_vertices(poly->vertices_embedded,
                                       {{"4", "0"}, {"10", "0"}, {"100/3", "14/3"}, {"44", "10"}}),
                 "polygon piece has the four listed vertices");
    ok &= expect(report.inf_box && vec_eq(*report.inf_box, point({"1", "0"})), "inf = (1, 0)");
    ok &= expect(report.sup_box && vec_eq(*report.sup_box, point({"44", "10"})), "sup = (44, 10)");
    return ok;
}

// ---------------------------------------------------------------------
// 2. 2D M-family symmetric exclusion at the polygon vertex.
bool criterion2() {
    auto pf = fixture("m_matrix_2d");
    RatVec z = point({"100/3", "14/3"});
    bool ok = expect(in_solution_set(z, pf.M, pf.q), "vertex belongs to the solution set");
    auto sym = in_symmetric_solution_set(z, pf.M, pf.q);
    ok &= expect(!sym.member, "vertex excluded from the symmetric solution set");
    ok &= expect(sym.certificate.has_value() &&
                     sym.certificate->kind == SymCertificate::Kind::ParamRange &&
                     sym.certificate->param == "m11",
                 "certificate pins m11");
    if (sym.certificate && sym.certificate->implied && sym.certificate->box) {
        ok &= expect(*sym.certificate->implied == Interval(rat("269/5000"), rat("59/500")),
                     "forced m11 range is exactly [269/5000, 59/500]");
        ok &= expect(*sym.certificate->box == Interval(rat("1/8"), rat("1")),
                     "m11 box is [1/8, 1]");
        ok &= expect(!intersect(*sym.certificate->implied, *sym.certificate->box).has_value(),
                     "ranges are disjoint");
    } else {
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------
// 3. Point LCP pair: unique solution vs exactly three, ordering verdicts.
bool criterion3() {
    LcpInstance hat(rm({{"2", "0"}, {"0", "5"}}), rv({"-4", "-5"}));
    LcpInstance tilde(rm({{"2", "7"}, {"6", "5"}}), rv({"-4", "-5"}));
    auto hs = solve_lcp(hat);
    bool ok = expect(hs.unique_point() && vec_eq(hs.points[0], point({"2", "1"})),
                     "first instance solves uniquely at (2, 1)");
    auto tss = solve_lcp(tilde);
    ok &= expect(tss.complete && tss.rays.empty(), "support enumeration complete");
    ok &= expect(same_vertices(tss.points, {{"15/32", "7/16"}, {"2", "0"}, {"0", "1"}}),
                 "second instance has exactly the three listed solutions");
    for (const auto& tz : tss.points) {
        auto v = check_monotone(hat, tilde, hs.points[0], tz);
        ok &= expect(v.ordering_holds, "ordering holds for " + vec_string(tz));
        ok &= expect(v.premise != MonotonePremise::None, "an M-matrix premise was certified");
    }
    return ok;
}

// ---------------------------------------------------------------------
// 4. 3D P-family: mixed-space case vertices, sup candidate, boundary quadrics.
bool criterion4() {
    auto pf = fixture("p_matrix_3d");
    SupportPattern p{3, 0b101};
    auto poly = vertex_enumeration(build_case_system(pf.M, pf.q, p));
    bool ok = expect(same_vertices(poly.vertices, {{"6", "1", "0"},
                                                   {"6", "5", "0"},
                                                   {"6", "1", "3"},
                                                   {"6", "13/2", "3"},
                                                   {"9/2", "1", "3"},
                                                   {"9/2", "23/4", "3"}}),
                     "case polyhedron has the six listed (z1, w2, z3) vertices");
    auto ext = extremal_solutions(pf.M, pf.q);
    ok &= expect(ext.sup_candidate && vec_eq(*ext.sup_candidate, point({"6", "0", "3"})),
                 "lower-corner solution is (6, 0, 3)");

    auto qs = sym_quadrics_boundary(pf.M, pf.q, p);
    // 0 <= z3^2 - 2 z3 - z1^2 + 6 z1 and 0 <= z1^2 - 6 z1 - z3^2 + 3 z3.
    ok &= expect(qs[0].Q == rm({{"-1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}) &&
                     vec_eq(qs[0].b, point({"6", "0", "-2"})) && qs[0].c == 0,
                 "first boundary quadric matches coefficientwise");
    ok &= expect(qs[1].Q == rm({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"}}) &&
                     vec_eq(qs[1].b, point({"-6", "0", "3"})) && qs[1].c == 0,
                 "mirror boundary quadric matches coefficientwise");
    ok &= expect(classify_quadric(qs[0]).label == QuadricLabel::HyperbolicCylinder &&
                     classify_quadric(qs[1]).label == QuadricLabel::HyperbolicCylinder,
                 "both boundary quadrics are hyperbolic cylinders");
    return ok;
}

// ---------------------------------------------------------------------
// 5. 3D M-family: pyramid geometry plus dense symmetric membership.
bool criterion5() {
    auto pf = fixture("m_matrix_3d");
    auto report = assemble_solution_set(pf.M, pf.q);
    const auto* pyramid = piece_for(report, 0b111);
    RatVec S = point({"5712/607", "3790/607", "1730/607"});
    bool ok = expect(pyramid && same_vertices(pyramid->vertices_embedded,
                                              {{"5712/607", "3790/607", "1730/607"},
                                               {"504/79", "80/79", "0"},
                                               {"2", "15/4", "0"},
                                               {"464/59", "880/177", "0"}}),
                     "pyramid has the apex and the three base vertices, exactly");

    // 32 interior points per lateral edge all pass the symmetric oracle.
    for (auto base : {point({"504/79", "80/79", "0"}), point({"2", "15/4", "0"}),
                      point({"464/59", "880/177", "0"})}) {
        for (int k = 1; k <= 32 && ok; ++k) {
            Rational t(k, 33);
            RatVec z(3);
            for (std::size_t i = 0; i < 3; ++i) z[i] = base[i] + t * (S[i] - base[i]);
            auto sym = in_symmetric_solution_set(z, pf.M, pf.q);
            ok &= expect(sym.member, "edge point " + vec_string(z) + " is a symmetric member");
            ok &= expect(in_solution_set(z, pf.M, pf.q), "edge point is a member");
        }
    }
    if (!ok) return false;

    // Grid over the quadrangle piece at z3 = 0, step 1/8.
    const auto* quadrangle = piece_for(report, 0b011);
    if (!expect(quadrangle != nullptr, "quadrangle piece present")) return false;
    RatVec lo(3, Rational(0)), hi(3, Rational(0));
    for (const auto& v : quadrangle->vertices_embedded)
        for (std::size_t i = 0; i < 3; ++i) hi[i] = std::max(hi[i], v[i]);
    Rational step(1, 8);
    int tested = 0;
    for (Rational x = 0; x <= hi[0]; x += step)
        for (Rational y = 0; y <= hi[1]; y += step) {
            if (!quadrangle->piece.contains(RatVec{x, y})) continue;
            ++tested;
            RatVec z{x, y, Rational(0)};
            if (!in_symmetric_solution_set(z, pf.M, pf.q).member) {
                return expect(false, "base grid point " + vec_string(z) + " was excluded");
            }
        }
    return expect(tested > 1000, "base grid covered (" + std::to_string(tested) + " points)");
}

// ---------------------------------------------------------------------
// 6. 3D H-family: staged full-support geometry, the excluded vertex, and
// the quadric incidences.
bool criterion6() {
    auto pf = fixture("hplus_3d");
    SupportPattern p{3, 0b111};
    LinearSystem full = build_case_system(pf.M, pf.q, p);
    bool ok = expect(full.cons.size() == 6, "six two-sided row conditions");

    LinearSystem stage1;
    stage1.vars = full.vars;
    stage1.cons = {full.cons[0], full.cons[1], full.cons[4], full.cons[5]};
    auto first = vertex_enumeration(stage1);
    ok &= expect(same_vertices(first.vertices, {{"1/5", "0", "1/2"},
                                                {"1/2", "0", "1/2"},
                                                {"1/2", "0", "1"},
                                                {"1/5", "0", "1"},
                                                {"0", "1/2", "1/4"},
                                                {"0", "1", "0"},
                                                {"0", "2", "0"},
                                                {"0", "1/2", "3/4"},
                                                {"1", "2", "0"},
                                                {"3/4", "1", "0"}}),
                 "row-1/row-3 polyhedron has the ten listed vertices");

    LinearSystem stage2 = stage1;
    stage2.cons.push_back(full.cons[2]);
    ok &= expect(vertex_enumeration(stage2).vertices == first.vertices,
                 "row-2 upper condition does not truncate");

    auto final_poly = vertex_enumeration(full);
    ok &= expect(same_vertices(final_poly.vertices, {{"1/5", "0", "1/2"},
                                                     {"1/2", "0", "1/2"},
                                                     {"1/2", "0", "1"},
                                                     {"1/5", "0", "1"},
                                                     {"7/10", "4/5", "1/10"},
                                                     {"3/5", "2/5", "4/5"},
                                                     {"1/19", "7/19", "6/19"},
                                                     {"3/19", "2/19", "18/19"}}),
                 "row-2 lower condition truncates to the eight-vertex region");

    auto incident = [&](std::initializer_list<std::initializer_list<std::string>> pts,
                        const RatVec& normal, const Rational& c) {
        for (const auto& praw : pts) {
            RatVec v;
            for (const auto& s : praw) v.push_back(rat(s));
            Rational sum = 0;
            for (std::size_t i = 0; i < 3; ++i) sum += normal[i] * v[i];
            if (sum != c) return false;
        }
        return true;
    };
    ok &= expect(incident({{"1/5", "0", "1/2"}, {"1/5", "0", "1"}, {"0", "1/2", "1/4"},
                           {"0", "1/2", "3/4"}},
                          point({"5", "2", "0"}), rat("1")),
                 "four vertices sit on 5 z1 + 2 z2 = 1");
    ok &= expect(incident({{"1/2", "0", "1/2"}, {"1/2", "0", "1"}, {"1", "2", "0"},
                           {"3/4", "1", "0"}},
                          point({"4", "-1", "0"}), rat("2")),
                 "four vertices sit on 4 z1 - z2 = 2");
    ok &= expect(incident({{"7/10", "4/5", "1/10"}, {"3/5", "2/5", "4/5"},
                           {"1/19", "7/19", "6/19"}, {"3/19", "2/19", "18/19"}},
                          point({"1", "-2", "-1"}), rat("-1")),
                 "the four fresh vertices sit on the truncating plane");

    RatVec d3 = point({"1/19", "7/19", "6/19"});
    ok &= expect(in_solution_set(d3, pf.M, pf.q), "the cut vertex is a member");
    auto sym = in_symmetric_solution_set(d3, pf.M, pf.q);
    ok &= expect(!sym.member, "the cut vertex is not a symmetric member");
    bool m11 = false, m12 = false;
    if (sym.certificate)
        for (const auto& f : sym.certificate->forced) {
            if (f.param == "m11" && f.value == 5) m11 = true;
            if (f.param == "m12" && f.value == 2) m12 = true;
        }
    ok &= expect(m11 && m12, "forced chain contains m11 = 5 and m12 = 2");
    ok &= expect(sym.certificate && sym.certificate->row == 1 && sym.certificate->row_image &&
                     *sym.certificate->row_image == Interval(rat("3/19"), rat("48/19")),
                 "row-2 image is exactly [3/19, 48/19]");

    // The intersection points with the second interior quadric satisfy
    // 5 z1^2 - z1 - 2 z2^2 - z2 z3 + z2 = 0 exactly and sit on their faces.
    auto interior = sym_quadrics_3d_interior(pf.M, pf.q);
    const QuadricInequality& h2 = interior[1];  // pair (1,2) mirror side
    ok &= expect(h2.Q == rm({{"5", "0", "0"}, {"0", "-2", "-1/2"}, {"0", "-1/2", "0"}}) &&
                     vec_eq(h2.b, point({"-1", "1", "0"})) && h2.c == 0,
                 "second pair-(1,2) quadric matches coefficientwise");
    struct FaceCheck {
        RatVec z;
        RatVec normal;
        Rational c;
    };
    std::vector<FaceCheck> fpoints = {
        {point({"4/13", "7/13", "3/13"}), point({"0", "1", "2"}), rat("1")},
        {point({"3/13", "2/13", "12/13"}), point({"0", "1", "2"}), rat("2")},
        {point({"1/7", "1/7", "3/7"}), point({"0", "1", "2"}), rat("1")},
        {point({"1/5", "0", "3/5"}), point({"5", "2", "0"}), rat("1")},
    };
    for (const auto& f : fpoints) {
        ok &= expect(h2.eval(f.z) == 0, "intersection point " + vec_string(f.z) + " on the quadric");
        Rational sum = 0;
        for (std::size_t i = 0; i < 3; ++i) sum += f.normal[i] * f.z[i];
        ok &= expect(sum == f.c, "intersection point " + vec_string(f.z) + " on its face plane");
    }
    return ok;
}

// ---------------------------------------------------------------------
// 7. Random P-certified interval families: interior quadrics never elliptic
// or parabolic; boundary quadrics always hyperbolic-cylinder / two planes.
bool criterion7() {
    Rng rng(2024);
    int fixtures_done = 0;
    while (fixtures_done < 100) {
        IntervalMatrix M(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) {
                    Rational lo = 1 + rng.nonneg_rational(4, 4);
                    M.at(i, j) = Interval(lo, lo + rng.nonneg_rational(2, 4));
                } else {
                    Rational c = rng.rational(1, 8);    // center in [-1/8, 1/8] .. small
                    Rational r = rng.nonneg_rational(1, 8);
                    M.at(i, j) = Interval(c - r, c + r);
                }
            }
        if (interval_is_p(M).kind != MatrixClass::P) continue;
        ++fixtures_done;
        std::vector<Interval> qents;
        for (int i = 0; i < 3; ++i) {
            Rational a = rng.rational(6, 2), b = rng.rational(6, 2);
            qents.push_back(Interval(std::min(a, b), std::max(a, b)));
        }
        IntervalVector q(qents);

        for (const auto& quad : sym_quadrics_3d_interior(M, q)) {
            auto label = classify_quadric(quad).label;
            if (label == QuadricLabel::Ellipsoid || label == QuadricLabel::EllipticParaboloid ||
                label == QuadricLabel::EllipticCylinder || label == QuadricLabel::ParabolicCylinder)
                return expect(false, "interior quadric got an elliptic/parabolic label");
        }
        for (unsigned mask : {0b011u, 0b101u, 0b110u}) {
            SupportPattern p{3, mask};
            for (const auto& quad : sym_quadrics_boundary(M, q, p)) {
                auto label = classify_quadric(quad).label;
                if (label != QuadricLabel::HyperbolicCylinder &&
                    label != QuadricLabel::TwoIntersectingPlanes)
                    return expect(false, "boundary quadric is not hyperbolic-cylinder/two-planes");
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------
// 8. Ordered random pairs with an M-matrix premise: the ordering always
// holds and the strict variant holds whenever its hypotheses do.
bool criterion8() {
    Rng rng(4096);
    int strict_checked = 0;
    for (int it = 0; it < 500; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        RatMat hatM(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Rational off = rng.nonneg_rational(3, 2);
                hatM(i, j) = -off;
                row += off;
            }
            hatM(i, i) = row + rng.nonneg_rational(3, 2) + 1;
        }
        RatMat tildeM = hatM;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j)
                    tildeM(i, j) += rng.nonneg_rational(2, 2);
                else
                    tildeM(i, j) = rng.between(hatM(i, j), Rational(0));
            }
        RatVec hatq(n), tildeq(n);
        for (std::size_t i = 0; i < n; ++i) {
            hatq[i] = rng.rational(6, 2);
            tildeq[i] = hatq[i] + rng.nonneg_rational(3, 2);
        }
        LcpInstance hat(hatM, hatq), tilde(tildeM, tildeq);
        auto hs = solve_lcp(hat);
        auto tss = solve_lcp(tilde);
        if (!hs.unique_point() || !tss.unique_point())
            return expect(false, "M-matrix instance without a unique solution");
        auto v = check_monotone(hat, tilde, hs.points[0], tss.points[0]);
        if (v.premise == MonotonePremise::None) return expect(false, "premise not certified");
        if (!v.ordering_holds) return expect(false, "ordering failed");
        if (v.strict_applicable) {
            ++strict_checked;
            if (!v.strict_holds || !*v.strict_holds) return expect(false, "strict variant failed");
        }
    }
    return expect(strict_checked > 20,
                  "strict hypotheses fired " + std::to_string(strict_checked) + " times");
}

// ---------------------------------------------------------------------
// 9. Oracle cross-validation: grid membership iff some piece contains the
// point; symmetric membership implies plain membership wherever tested.
bool criterion9() {
    for (const auto& name : {"m_matrix_2d", "hplus_2d", "p_matrix_3d", "m_matrix_3d", "hplus_3d"}) {
        auto pf = fixture(name);
        auto report = assemble_solution_set(pf.M, pf.q);
        std::size_t n = pf.n;
        RatVec hi(n, Rational(0));
        for (const auto& piece : report.pieces)
            for (const auto& v : piece.vertices_embedded)
                for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], v[i]);
        for (auto& h : hi) h += Rational(1, 2);

        auto in_some_piece = [&](const RatVec& z) {
            for (const auto& piece : report.pieces) {
                bool zeros_ok = true;
                for (int i : piece.pattern.zero_z())
                    if (z[static_cast<std::size_t>(i)] != 0) zeros_ok = false;
                if (!zeros_ok) continue;
                RatVec inner;
                for (int i : piece.pattern.zero_w()) inner.push_back(z[static_cast<std::size_t>(i)]);
                if (piece.piece.contains(inner)) return true;
            }
            return false;
        };

        Rational fine(1, 8), coarse(1, 2);
        RatVec z(n, Rational(0));
        long checked = 0;
        std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
            if (k == n) {
                ++checked;
                bool member = in_solution_set(z, pf.M, pf.q);
                if (member != in_some_piece(z)) {
                    expect(false, std::string(name) + ": mismatch at " + vec_string(z));
                    return false;
                }
                // Symmetric membership implies plain membership on the
                // coarse subgrid.
                bool on_coarse = true;
                for (const auto& x : z) {
                    Rational r = x / coarse;
                    if (denominator(r) != 1) on_coarse = false;
                }
                if (on_coarse && in_symmetric_solution_set(z, pf.M, pf.q).member && !member) {
                    expect(false, std::string(name) + ": symmetric member outside the set");
                    return false;
                }
                return true;
            }
            for (Rational v = 0; v <= hi[k]; v += fine) {
                z[k] = v;
                if (!walk(k + 1)) return false;
            }
            z[k] = 0;
            return true;
        };
        if (!walk(0)) return false;
        if (!expect(checked > 100, std::string(name) + ": grid covered")) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// 10. Signature oracle: Descartes signature equals the Sturm/bisection
// count on 1000 random symmetric rational matrices.
bool criterion10() {
    Rng rng(8192);
    for (int it = 0; it < 1000; ++it) {
        RatMat Q(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                Q(i, j) = rng.rational(6, 3);
                Q(j, i) = Q(i, j);
            }
        QuadricInequality quad;
        quad.Q = Q;
        quad.b.assign(3, Rational(0));
        quad.c = 0;
        auto got = classify_quadric(quad);
        auto want = ts_oracle::signature_oracle(Q);
        if (got.n_plus != want.n_plus || got.n_minus != want.n_minus ||
            got.n_zero != want.n_zero)
            return expect(false, "signature mismatch at iteration " + std::to_string(it));
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    fixture_dir = argc > 1 ? argv[1] : "fixtures";
    std::cout << "acceptance suite (exact comparisons; fixtures from " << fixture_dir << ")\n";
    criterion(1, "2D M-family pieces, inf, and sup", criterion1);
    criterion(2, "2D M-family symmetric exclusion with the forced m11 range", criterion2);
    criterion(3, "point pair: unique vs exactly three solutions, ordering verdicts", criterion3);
    criterion(4, "3D P-family case vertices, sup candidate, boundary quadrics", criterion4);
    criterion(5, "3D M-family pyramid edges and base grid are symmetric members", criterion5);
    criterion(6, "3D H-family staged truncation, excluded vertex, quadric incidences", criterion6);
    criterion(7, "random P-families: quadric labels obey the class restrictions", criterion7);
    criterion(8, "random ordered pairs: ordering and strict variant", criterion8);
    criterion(9, "grid membership matches pieces; symmetric implies plain", criterion9);
    criterion(10, "eigenvalue signature matches the Sturm/bisection oracle", criterion10);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
