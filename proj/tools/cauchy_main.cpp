#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "cauchy/cutter.hpp"
#include "cauchy/errors.hpp"
#include "cauchy/hole.hpp"
#include "cauchy/io.hpp"
#include "cauchy/lift.hpp"
#include "cauchy/surfaces.hpp"
#include "cauchy/svg.hpp"

namespace {

using namespace cauchy;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // validation / parse failure
constexpr int kExitReplay = 2;    // replay or schedule failure
constexpr int kExitInternal = 3;  // internal invariant violation

Mode parse_mode(const std::string& m) {
  if (m == "strict") return Mode::kStrict;
  if (m == "lenient") return Mode::kLenient;
  fail(Err::kParse, "mode must be strict or lenient");
}

SurfaceKind parse_kind(const std::string& k) {
  if (k == "sphere_trilune") return SurfaceKind::kSphereTrilune;
  if (k == "sphere_grid" || k == "sphere") return SurfaceKind::kSphereGrid;
  if (k == "torus") return SurfaceKind::kTorus;
  if (k == "projective_plane") return SurfaceKind::kProjectivePlane;
  if (k == "klein_bottle") return SurfaceKind::kKleinBottle;
  if (k == "genus") return SurfaceKind::kGenus;
  if (k == "pinched_torus") return SurfaceKind::kPinchedTorus;
  fail(Err::kParse, "unknown surface kind '" + k + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"quotient complexes, Cauchy hole expansion, lifting schedules, surface cutting"};
  app.require_subcommand(1);

  // chi
  std::string chi_file;
  auto* chi = app.add_subcommand("chi", "Euler characteristic of the (quotient) complex");
  chi->add_option("file", chi_file)->required();

  // validate
  std::string val_file;
  bool val_closed = false, val_embedding = false;
  auto* val = app.add_subcommand("validate", "structural validation report");
  val->add_option("file", val_file)->required();
  val->add_flag("--closed", val_closed, "require a closed pseudo-manifold");
  val->add_flag("--embedding", val_embedding, "check the straight-line embedding");

  // schedule
  std::string sch_file, sch_metric = "euclidean", sch_order_out, sch_svg_out;
  std::vector<std::string> sch_point;
  bool sch_clockwise = false;
  auto* sch = app.add_subcommand("schedule", "lifting-based removal schedule and verification");
  sch->add_option("file", sch_file)->required();
  sch->add_option("--metric", sch_metric, "euclidean | edge-path");
  sch->add_option("--point", sch_point, "base point x y (rationals)")->expected(2);
  sch->add_option("--order-out", sch_order_out, "write the removal order file");
  sch->add_option("--svg", sch_svg_out, "write the subdivision with level curves");
  sch->add_flag("--clockwise", sch_clockwise, "walk bands clockwise");

  // replay
  std::string rp_file, rp_order, rp_mode = "strict", rp_seed = "outer";
  bool rp_op3 = false;
  auto* rp = app.add_subcommand("replay", "replay a removal order");
  rp->add_option("file", rp_file)->required();
  rp->add_option("order", rp_order)->required();
  rp->add_option("--mode", rp_mode, "strict | lenient");
  rp->add_option("--seed", rp_seed, "'outer' or a 1-based triangle index");
  rp->add_flag("--allow-op3", rp_op3, "permit operation III");

  // cut
  std::string cut_file, cut_out;
  std::vector<std::string> cut_curves;
  auto* cut = app.add_subcommand("cut", "subdivide along curves, quotient, and cut open");
  cut->add_option("file", cut_file)->required();
  cut->add_option("curves", cut_curves, "curve files, cut in order")->required();
  cut->add_option("--out", cut_out, "output complex+word file (default stdout)");

  // gen
  std::string gen_kind, gen_out;
  int gen_r = 3, gen_g = 1;
  auto* gen = app.add_subcommand("gen", "generate a surface's fundamental polygon");
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("--r", gen_r, "resolution (>= 3)");
  gen->add_option("--g", gen_g, "genus for kind=genus");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // descartes
  std::string des_file;
  double des_tol = 1e-9;
  auto* des = app.add_subcommand("descartes", "angle-sum check for a convex polyhedron");
  des->add_option("file", des_file)->required();
  des->add_option("--tol", des_tol, "angle tolerance in radians");

  // render
  std::string ren_file, ren_trace, ren_out;
  bool ren_levels = false;
  std::string ren_metric = "euclidean";
  auto* ren = app.add_subcommand("render", "deterministic SVG of a complex or replay state");
  ren->add_option("file", ren_file)->required();
  ren->add_option("--trace", ren_trace, "replay order file to shade (outer-seeded, lenient)");
  ren->add_flag("--levels", ren_levels, "run the lifting pipeline and stroke level curves");
  ren->add_option("--metric", ren_metric, "metric for --levels");
  ren->add_option("--out", ren_out, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  if (chi->parsed()) {
    PlanarPolygon p = read_complex_file(chi_file);
    Complex q = p.trivial_scheme() ? p.cx : quotient(p);
    std::cout << euler_characteristic(q) << "\n";
    return kExitOk;
  }

  if (val->parsed()) {
    PlanarPolygon p = read_complex_file(val_file);
    ValidationReport rep =
        val_embedding ? validate_polygon(p, true) : validate(p.cx, val_closed);
    if (rep.ok()) {
      std::cout << "valid\n";
      return kExitOk;
    }
    std::cout << rep.str();
    return kExitInvalid;
  }

  if (sch->parsed()) {
    PlanarPolygon p = read_complex_file(sch_file);
    LiftMetric metric = sch_metric == "edge-path" ? LiftMetric::kEdgePath : LiftMetric::kEuclidean;
    std::optional<Vec2> point;
    if (!sch_point.empty())
      point = Vec2(parse_rational(sch_point[0]), parse_rational(sch_point[1]));
    LiftPipeline pl = run_pipeline(p, point, metric, sch_clockwise);
    RemovalTrace trace =
        replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict, false);
    TheoremReport rep = verify_theorem1(p, point, metric);
    if (!sch_order_out.empty()) {
      std::string text = "# seed " + std::to_string(pl.schedule.seed + 1) + "\n";
      for (const auto& e : pl.schedule.entries) text += std::to_string(e.tri + 1) + "\n";
      write_text_file(sch_order_out, text);
    }
    if (!sch_svg_out.empty())
      write_text_file(sch_svg_out, render_svg(pl.kpp.poly, nullptr, &pl.curves));
    std::cout << "base " << pl.base + 1 << "\n";
    std::cout << "levels " << pl.heights.interior_count + 2 << "\n";
    std::cout << "kpp cells " << counts(pl.kpp.poly.cx).n0 << " " << counts(pl.kpp.poly.cx).n1
              << " " << counts(pl.kpp.poly.cx).n2 << "\n";
    std::cout << "schedule " << (trace.success ? "ok" : "FAILED") << "\n";
    std::cout << "chi " << rep.chi_complex << "\n";
    std::cout << "boundary_chi " << rep.chi_boundary << "\n";
    std::cout << "chi_by_schedule " << rep.chi_by_schedule << "\n";
    if (rep.base_touches_boundary) std::cout << "note base triangle touches the boundary\n";
    return rep.ok() ? kExitOk : kExitReplay;
  }

  if (rp->parsed()) {
    PlanarPolygon p = read_complex_file(rp_file);
    std::vector<TriId> order = read_order_file(rp_order, p.cx.triangle_count());
    std::optional<TriId> seed;
    if (rp_seed != "outer") seed = static_cast<TriId>(std::stol(rp_seed) - 1);
    RemovalTrace trace = replay(p.cx, seed, order, parse_mode(rp_mode), rp_op3);
    std::cout << trace_str(trace);
    if (trace.failed_step) {
      std::cout << "FAIL step " << *trace.failed_step << "\n";
      return kExitReplay;
    }
    std::cout << (trace.success ? "success" : "incomplete") << "\n";
    return trace.success ? kExitOk : kExitReplay;
  }

  if (cut->parsed()) {
    PlanarPolygon p = read_complex_file(cut_file);
    // subdivide along every curve first, tracking curve vertices by position
    std::vector<Curve> curves;
    for (const auto& f : cut_curves) curves.push_back(read_curve_file(f));
    std::vector<std::vector<Vec2>> curve_pts;
    PlanarPolygon work = p;
    for (auto& c : curves) {
      Curve tc = transversalize(c, work);
      SubdivisionResult sub = subdivide_along(work, tc);
      work = sub.poly;
      std::vector<Vec2> pts;
      for (VertexId v : sub.curve_verts) pts.push_back(work.coords[v]);
      curve_pts.push_back(pts);
    }
    QuotientResult qr;
    quotient(work, qr);
    LabeledComplex lc;
    lc.cx = qr.cx;
    int label_seed = 1;
    for (const auto& pts : curve_pts) {
      // map the curve back to quotient edges through coordinates
      std::vector<VertexId> vids;
      for (const auto& pt : pts) {
        VertexId found = -1;
        for (VertexId v = 0; v < work.cx.vertex_count(); ++v)
          if (work.coords[v] == pt) found = v;
        if (found < 0) fail(Err::kInternal, "curve vertex lost");
        vids.push_back(qr.vertex_map[found]);
      }
      std::vector<EdgeId> path;
      for (size_t i = 0; i + 1 < vids.size(); ++i) {
        auto e = lc.cx.find_edge(vids[i], vids[i + 1]);
        if (!e) fail(Err::kCurveNotSubcomplex, "curve edge missing after quotient");
        path.push_back(*e);
      }
      CutResult cr = cut_open(lc, path, label_seed);
      label_seed += static_cast<int>(path.size());
      lc = cr.complex;
    }
    PlanarPolygon result = to_polygon(lc);
    std::string text = complex_text(result);
    if (cut_out.empty())
      std::cout << text;
    else
      write_text_file(cut_out, text);
    return kExitOk;
  }

  if (gen->parsed()) {
    SurfaceSpec spec;
    spec.kind = parse_kind(gen_kind);
    spec.resolution = gen_r;
    spec.genus = gen_g;
    PlanarPolygon p = generate(spec);
    std::string text = complex_text(p);
    if (gen_out.empty())
      std::cout << text;
    else
      write_text_file(gen_out, text);
    return kExitOk;
  }

  if (des->parsed()) {
    ConvexPolyhedron poly = read_polyhedron_file(des_file);
    ValidationReport vrep = validate_polyhedron(poly);
    if (!vrep.ok()) {
      std::cout << vrep.str();
      return kExitInvalid;
    }
    DescartesReport rep = descartes_check(poly, des_tol);
    std::cout << "angle_sum " << rep.angle_sum << "\n";
    std::cout << "expected " << rep.expected << "\n";
    std::cout << "sum_k " << rep.face_degree_sum << " 2n1 " << 2 * rep.edge_count << "\n";
    std::cout << (rep.ok() ? "pass" : "fail") << "\n";
    return rep.ok() ? kExitOk : kExitInvalid;
  }

  if (ren->parsed()) {
    PlanarPolygon p = read_complex_file(ren_file);
    if (ren_levels) {
      LiftMetric metric =
          ren_metric == "edge-path" ? LiftMetric::kEdgePath : LiftMetric::kEuclidean;
      LiftPipeline pl = run_pipeline(p, std::nullopt, metric);
      write_text_file(ren_out, render_svg(pl.kpp.poly, nullptr, &pl.curves));
      return kExitOk;
    }
    if (!ren_trace.empty()) {
      std::vector<TriId> order = read_order_file(ren_trace, p.cx.triangle_count());
      RemovalTrace trace = replay(p.cx, std::nullopt, order, Mode::kLenient, true);
      HoleState h = outer_hole(p.cx);
      std::optional<TriId> last;
      for (const auto& s : trace.steps)
        if (s.ok) {
          apply(p.cx, h, s.tri, s.kind);
          last = s.tri;
        }
      write_text_file(ren_out, render_svg(p, &h, nullptr, last));
      return kExitOk;
    }
    write_text_file(ren_out, render_svg(p));
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code) {
      case Err::kMultiplePointOnLevel:
      case Err::kInternal:
        return kExitInternal;
      case Err::kClassificationMismatch:
        return kExitReplay;
      default:
        return kExitInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
}
