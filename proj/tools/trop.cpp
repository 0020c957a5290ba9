// trop: command-line front end for plane tropical curves.
//
// Exit status: 0 success, 1 verification failure, 2 parse or usage error,
// 3 domain error (empty variety, not elliptic, ...), 4 I/O error.

#include "trop/curve.hpp"
#include "trop/document.hpp"
#include "trop/elliptic.hpp"
#include "trop/errors.hpp"
#include "trop/intersect.hpp"
#include "trop/polynomial.hpp"
#include "trop/subdivision.hpp"
#include "trop/svg.hpp"
#include "trop/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace trop;

constexpr int kVerifyFailed = 1;
constexpr int kParseFailed = 2;
constexpr int kDomainFailed = 3;
constexpr int kIoFailed = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show(const Point2& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }
std::string show(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }
std::string show(IntVec2 v) { return "(" + std::to_string(v.dx) + "," + std::to_string(v.dy) + ")"; }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TROP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("TROP_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 1;
}

int cmd_parse(const std::string& text, bool as_json) {
  const auto f = TropicalPolynomial::parse(text);
  if (as_json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
      nlohmann::json exp = nlohmann::json::array({e[0], e[1]});
      if (f.arity() == Arity::Homogeneous) exp.push_back(e[2]);
      terms.push_back({{"exponent", exp}, {"coefficient", to_json(c)}});
    }
    std::cout << nlohmann::json{{"arity", f.arity() == Arity::Affine ? "affine" : "homogeneous"},
                                {"terms", terms},
                                {"canonical", f.str()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "arity: " << (f.arity() == Arity::Affine ? "affine" : "homogeneous") << "\n";
  std::cout << "terms: " << f.terms().size() << "\n";
  for (const auto& [e, c] : f.terms()) {
    std::cout << "  (" << e[0] << "," << e[1];
    if (f.arity() == Arity::Homogeneous) std::cout << "," << e[2];
    std::cout << ") " << c << "\n";
  }
  std::cout << "canonical: " << f.str() << "\n";
  return 0;
}

void print_summary(const TropicalCurve& c) {
  const auto deg = curve_degree(c.polynomial);
  const bool smooth = is_smooth(c);
  std::cout << "degree: " << deg.degree << "\n";
  std::cout << "full support: " << yes_no(deg.full_support) << "\n";
  std::cout << "smooth: " << yes_no(smooth) << "\n";
  std::cout << "genus: " << (smooth ? std::to_string(genus(c)) : std::string("n/a (not smooth)")) << "\n";
  std::cout << "vertices: " << c.vertices.size() << "\n";
  std::cout << "bounded edges: " << c.edges.size() << "\n";
  std::cout << "rays: " << c.rays.size() << "\n";
  if (!c.lines.empty()) std::cout << "lines: " << c.lines.size() << "\n";
  std::cout << "balanced: " << yes_no(check_balancing(c)) << "\n";
}

int cmd_curve(const std::string& text, bool as_json) {
  if (as_json) {
    std::cout << to_json(make_document(text)).dump(2) << "\n";
    return 0;
  }
  print_summary(build_curve(TropicalPolynomial::parse(text)));
  return 0;
}

int cmd_subdiv(const std::string& text, bool as_json) {
  const auto f = TropicalPolynomial::parse(text);
  if (as_json) {
    std::cout << to_json(make_document(text))["subdivision"].dump(2) << "\n";
    return 0;
  }
  const auto s = dual_subdivision(f);
  std::cout << "dimension: " << s.dimension << "\n";
  std::cout << "polygon:";
  for (const auto& p : s.polygon.vertices()) std::cout << " " << show(p);
  std::cout << "\n";
  std::cout << "cells: " << s.cells.size() << "\n";
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    std::cout << "  " << i << ":";
    for (const auto& p : s.cells[i].vertices) std::cout << " " << show(p);
    std::cout << "\n";
  }
  std::cout << "edges: " << s.edges.size() << "\n";
  for (const auto& e : s.edges)
    std::cout << "  " << show(e.a) << "-" << show(e.b) << " " << (e.kind == EdgeKind::Interior ? "interior" : "boundary")
              << " length " << lattice_length(e) << "\n";
  std::cout << "unimodular triangulation: " << yes_no(is_unimodular_triangulation(s)) << "\n";
  std::cout << "interior vertices: " << interior_lattice_vertex_count(s) << "\n";
  return 0;
}

int cmd_intersect(const std::string& ftext, const std::string& gtext, bool transversal, bool as_json) {
  const auto f = TropicalPolynomial::parse(ftext);
  const auto g = TropicalPolynomial::parse(gtext);
  const auto cf = build_curve(f);
  const auto cg = build_curve(g);
  const auto meets = transversal ? transversal_intersections(cf, cg) : stable_intersection(cf, cg);
  const Rational area = mixed_area(newton_polygon(cf.polynomial), newton_polygon(cg.polynomial));
  const auto df = curve_degree(f), dg = curve_degree(g);
  if (as_json) {
    auto j = to_json(meets);
    j["mixed_area"] = to_json(area);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : meets.entries) std::cout << show(e.point) << " multiplicity " << e.multiplicity << "\n";
  std::cout << "total: " << meets.total() << "\n";
  if (df.full_support && dg.full_support)
    std::cout << "bezout: " << df.degree << " * " << dg.degree << " = " << df.degree * dg.degree
              << (meets.total() == df.degree * dg.degree ? " (agrees)" : " (DISAGREES)") << "\n";
  std::cout << "mixed area: " << area << (Rational(meets.total()) == area ? " (agrees)" : " (DISAGREES)") << "\n";
  return 0;
}

Point2 point_arg(const std::string& text, const CycleModel& cycle) {
  if (text == "O") return embed(cycle, *cycle.origin);
  return parse_point(text);
}

// Cycle point of p; tentacle points retract to their attachment vertex.
CyclePoint on_cycle(const CycleModel& cycle, const Point2& p) {
  Divisor d{{{p, 1}, {embed(cycle, *cycle.origin), -1}}};
  return reduce_divisor(cycle, d);
}

void print_cycle_point(const std::string& name, const CycleModel& cycle, const CyclePoint& p) {
  std::cout << name << ": edge " << p.edge << " t " << p.t << " at " << show(embed(cycle, p)) << " lambda "
            << lambda(cycle, p) << "\n";
}

void print_line(const std::string& name, const LineConstruction& line) {
  std::cout << name << ": center " << show(line.center) << ", fallback steps " << line.shift_steps << "\n";
}

int cmd_group(const std::string& text, const std::optional<std::string>& origin, const std::string& op,
              const std::vector<std::string>& args, bool geometric) {
  const auto curve = build_curve(TropicalPolynomial::parse(text));
  CycleModel cycle = extract_cycle(curve);
  cycle = origin ? set_origin(cycle, parse_point(*origin)) : set_origin(cycle, CyclePoint{0, Rational(0)});
  print_cycle_point("origin", cycle, *cycle.origin);

  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(op + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  };
  if (op == "add") {
    want(2);
    const CyclePoint p = on_cycle(cycle, point_arg(args[0], cycle));
    const CyclePoint q = on_cycle(cycle, point_arg(args[1], cycle));
    print_cycle_point("P", cycle, p);
    print_cycle_point("Q", cycle, q);
    if (geometric) {
      const auto sum = geometric_add(cycle, p, q);
      print_line("line through P, Q", sum.through_pq);
      print_cycle_point("R", cycle, sum.through_pq.third);
      print_line("line through R, O", sum.through_ro);
      print_cycle_point("P+Q", cycle, sum.sum);
      if (sum.sum != group_add(cycle, p, q)) throw std::logic_error("geometric and arithmetic sums differ");
    } else {
      print_cycle_point("P+Q", cycle, group_add(cycle, p, q));
    }
  } else if (op == "neg") {
    want(1);
    const CyclePoint p = on_cycle(cycle, point_arg(args[0], cycle));
    print_cycle_point("P", cycle, p);
    print_cycle_point("-P", cycle, group_neg(cycle, p));
  } else if (op == "reduce") {
    want(1);
    const Divisor d = parse_divisor(args[0], embed(cycle, *cycle.origin));
    print_cycle_point("P", cycle, reduce_divisor(cycle, d));
  } else {
    throw std::invalid_argument("unknown group operation '" + op + "'");
  }
  return 0;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

struct PlotArgs {
  std::string poly;
  std::string output;
  std::string viewport;
  std::string intersect_with;
  std::vector<std::string> add;
  std::string origin;
  bool no_subdivision = false;
};

int cmd_plot(const PlotArgs& a) {
  const auto curve = build_curve(TropicalPolynomial::parse(a.poly));
  PlotOptions opts;
  opts.subdivision_inset = !a.no_subdivision;
  if (!a.viewport.empty()) opts.viewport = parse_viewport(a.viewport);
  try {
    CycleModel cycle = extract_cycle(curve);
    opts.cycle = a.origin.empty() ? set_origin(cycle, CyclePoint{0, Rational(0)}) : set_origin(cycle, parse_point(a.origin));
  } catch (const DomainError&) {
    if (!a.add.empty() || !a.origin.empty()) throw;
  }
  if (!a.intersect_with.empty()) {
    opts.other = build_curve(TropicalPolynomial::parse(a.intersect_with));
    opts.meets = stable_intersection(curve, *opts.other);
  }
  if (!a.add.empty()) {
    const auto& cycle = *opts.cycle;
    opts.construction = geometric_add(cycle, on_cycle(cycle, point_arg(a.add[0], cycle)),
                                      on_cycle(cycle, point_arg(a.add[1], cycle)));
  }
  write_output(a.output, render_svg(curve, opts));
  return 0;
}

int cmd_verify(const std::string& which, int trials, std::uint64_t seed, long long max_degree, bool corner_cut,
               const std::string& poly, bool as_json) {
  if (trials < 1) throw std::invalid_argument("--trials must be positive");
  std::vector<VerificationReport> reports;
  if (which == "bezout") {
    if (max_degree < 1) throw std::invalid_argument("--max-degree must be at least 1");
    for (long long c = 1; c <= max_degree; ++c)
      for (long long d = 1; d <= max_degree; ++d)
        reports.push_back(verify_bezout(c, d, trials, seed, corner_cut ? BezoutMode::OneFull : BezoutMode::BothFull));
  } else if (which == "bernstein") {
    if (max_degree < 1) throw std::invalid_argument("--max-degree must be at least 1");
    reports.push_back(verify_bernstein_random(trials, seed, max_degree));
  } else if (which == "group-axioms") {
    const auto f = poly.empty() ? reference_cubic() : TropicalPolynomial::parse(poly);
    const auto cycle = set_origin(extract_cycle(build_curve(f)), CyclePoint{0, Rational(0)});
    reports.push_back(verify_group_axioms(cycle, trials, seed));
  } else {
    throw std::invalid_argument("unknown verification '" + which + "'");
  }
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (as_json)
      all.push_back(to_json(r));
    else
      std::cout << r.text();
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane tropical curves: subdivisions, intersections and the elliptic group law"};
  app.require_subcommand(1);

  bool json = false;

  std::string parse_text;
  auto* parse = app.add_subcommand("parse", "Parse a tropical polynomial and list its terms");
  parse->add_option("poly", parse_text, "Polynomial, e.g. \"0+x+y\"")->required();
  parse->add_flag("--json", json, "JSON output");

  std::string curve_text;
  bool summary = false;
  auto* curve = app.add_subcommand("curve", "Build the tropical curve");
  curve->add_option("poly", curve_text, "Polynomial")->required();
  auto* curve_json = curve->add_flag("--json", json, "Full curve document as JSON");
  curve->add_flag("--summary", summary, "Human-readable summary (default)")->excludes(curve_json);

  std::string subdiv_text;
  auto* subdiv = app.add_subcommand("subdiv", "Dual subdivision of the Newton polygon");
  subdiv->add_option("poly", subdiv_text, "Polynomial")->required();
  subdiv->add_flag("--json", json, "JSON output");

  std::string f_text, g_text;
  bool stable = false, transversal = false;
  auto* inter = app.add_subcommand("intersect", "Intersect two curves");
  inter->add_option("f", f_text, "First polynomial")->required();
  inter->add_option("g", g_text, "Second polynomial")->required();
  auto* st = inter->add_flag("--stable", stable, "Stable intersection (default)");
  inter->add_flag("--transversal", transversal, "Transversal intersection; fails unless the curves are transversal")
      ->excludes(st);
  inter->add_flag("--json", json, "JSON output");

  std::string group_text, group_op;
  std::optional<std::string> group_origin;
  std::string group_a;
  std::optional<std::string> group_b;
  bool geometric = false;
  auto* group = app.add_subcommand("group", "Group law on an elliptic curve");
  group->add_option("poly", group_text, "Polynomial of a smooth cubic of genus 1")->required();
  group->add_option("op", group_op, "add | neg | reduce")->required()->check(CLI::IsMember({"add", "neg", "reduce"}));
  // Two scalar positionals: a vector option would split "[a,b]" on commas.
  group->add_option("a", group_a, "Point \"x,y\" (O for the origin) or a divisor such as \"[1,0]+[0,1]-2O\"")
      ->required();
  group->add_option("b", group_b, "Second point for add");
  group->add_option("--origin", group_origin, "Base point on the cycle (default: first cycle vertex)");
  group->add_flag("--geometric", geometric, "For add: construct the sum with tropical lines");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render the curve as SVG");
  plot->add_option("poly", plot_args.poly, "Polynomial")->required();
  plot->add_option("-o,--output", plot_args.output, "Output file (default: stdout)");
  plot->add_option("--viewport", plot_args.viewport, "xmin,ymin,xmax,ymax");
  plot->add_option("--intersect", plot_args.intersect_with, "Overlay a second curve and the stable intersection");
  plot->add_option("--add", plot_args.add, "Overlay the geometric construction of P + Q")->expected(2);
  plot->add_option("--origin", plot_args.origin, "Base point for --add");
  plot->add_flag("--no-subdivision", plot_args.no_subdivision, "Omit the Newton polygon inset");

  std::string verify_which, verify_poly;
  int trials = 50;
  std::uint64_t seed = 0;
  long long max_degree = 3;
  bool corner_cut = false;
  auto* verify = app.add_subcommand("verify", "Seeded randomized verification");
  verify->add_option("check", verify_which, "bezout | bernstein | group-axioms")
      ->required()
      ->check(CLI::IsMember({"bezout", "bernstein", "group-axioms"}));
  verify->add_option("--trials", trials, "Trials per report")->capture_default_str();
  auto* seed_opt = verify->add_option("--seed", seed, "Seed (default: $TROP_SEED, else 1)");
  verify->add_option("--max-degree", max_degree, "Largest degree sampled")->capture_default_str();
  verify->add_flag("--corner-cut", corner_cut, "bezout: second curve on a corner-cut support");
  verify->add_option("--poly", verify_poly, "group-axioms: curve (default: the reference cubic)");
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseFailed;
  }

  try {
    if (*parse) return cmd_parse(parse_text, json);
    if (*curve) return cmd_curve(curve_text, json);
    if (*subdiv) return cmd_subdiv(subdiv_text, json);
    if (*inter) return cmd_intersect(f_text, g_text, transversal, json);
    if (*group) return cmd_group(group_text, group_origin, group_op, group_b ? std::vector{group_a, *group_b} : std::vector{group_a},
                                      geometric);
    if (*plot) return cmd_plot(plot_args);
    if (*verify) {
      if (!*seed_opt) seed = default_seed();
      return cmd_verify(verify_which, trials, seed, max_degree, corner_cut, verify_poly, json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailed;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailed;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseFailed;
  }
  return 0;
}
