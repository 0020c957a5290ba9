#include "trop/document.hpp"

#include "trop/errors.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace trop {

using nlohmann::json;

namespace {

json to_json(LatticePoint p) { return json::array({p.x, p.y}); }
LatticePoint lattice_from_json(const json& j) { return {j.at(0).get<long long>(), j.at(1).get<long long>()}; }
json to_json(IntVec2 v) { return json::array({v.dx, v.dy}); }
IntVec2 vec_from_json(const json& j) { return {j.at(0).get<long long>(), j.at(1).get<long long>()}; }
json to_json(const DualEdge& e) { return json::array({to_json(e.first), to_json(e.second)}); }
DualEdge dual_from_json(const json& j) { return {lattice_from_json(j.at(0)), lattice_from_json(j.at(1))}; }

json lattice_list(const std::vector<LatticePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}
std::vector<LatticePoint> lattice_list_from_json(const json& j) {
  std::vector<LatticePoint> out;
  for (const auto& p : j) out.push_back(lattice_from_json(p));
  return out;
}

json polynomial_json(const TropicalPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exponent", json::array({e[0], e[1], e[2]})}, {"coefficient", to_json(c)}});
  return {{"arity", f.arity() == Arity::Affine ? "affine" : "homogeneous"}, {"terms", terms}};
}

TropicalPolynomial polynomial_from_json(const json& j) {
  TropicalPolynomial::Terms terms;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("exponent");
    terms[Exponent{e.at(0).get<long long>(), e.at(1).get<long long>(), e.at(2).get<long long>()}] =
        rational_from_json(t.at("coefficient"));
  }
  const std::string arity = j.at("arity").get<std::string>();
  if (arity != "affine" && arity != "homogeneous") throw std::invalid_argument("unknown arity '" + arity + "'");
  return TropicalPolynomial(std::move(terms), arity == "affine" ? Arity::Affine : Arity::Homogeneous);
}

json subdivision_json(const DualSubdivision& s) {
  json cells = json::array();
  for (const auto& c : s.cells)
    cells.push_back({{"vertices", lattice_list(c.vertices)},
                     {"points", lattice_list(c.points)},
                     {"slope", json::array({to_json(c.slope_x), to_json(c.slope_y)})},
                     {"offset", to_json(c.offset)}});
  json edges = json::array();
  for (const auto& e : s.edges)
    edges.push_back({{"a", to_json(e.a)},
                     {"b", to_json(e.b)},
                     {"kind", e.kind == EdgeKind::Interior ? "interior" : "boundary"},
                     {"cells", e.cells}});
  return {{"dimension", s.dimension},
          {"polygon", lattice_list(s.polygon.vertices())},
          {"cells", cells},
          {"edges", edges},
          {"vertices", lattice_list(s.vertices)}};
}

DualSubdivision subdivision_from_json(const json& j) {
  DualSubdivision s;
  s.dimension = j.at("dimension").get<int>();
  const auto polygon = lattice_list_from_json(j.at("polygon"));
  if (!polygon.empty()) s.polygon = convex_hull(polygon);
  for (const auto& c : j.at("cells")) {
    SubdivisionCell cell;
    cell.vertices = lattice_list_from_json(c.at("vertices"));
    cell.points = lattice_list_from_json(c.at("points"));
    cell.slope_x = rational_from_json(c.at("slope").at(0));
    cell.slope_y = rational_from_json(c.at("slope").at(1));
    cell.offset = rational_from_json(c.at("offset"));
    s.cells.push_back(std::move(cell));
  }
  for (const auto& e : j.at("edges")) {
    SubdivisionEdge edge;
    edge.a = lattice_from_json(e.at("a"));
    edge.b = lattice_from_json(e.at("b"));
    edge.kind = e.at("kind").get<std::string>() == "interior" ? EdgeKind::Interior : EdgeKind::Boundary;
    edge.cells = e.at("cells").get<std::vector<std::size_t>>();
    s.edges.push_back(std::move(edge));
  }
  s.vertices = lattice_list_from_json(j.at("vertices"));
  return s;
}

json cycle_json(const CycleModel& m) {
  json verts = json::array(), dirs = json::array(), lengths = json::array(), offsets = json::array();
  for (const auto& v : m.vertices) verts.push_back(to_json(v));
  for (const auto& d : m.directions) dirs.push_back(to_json(d));
  for (const auto& l : m.lengths) lengths.push_back(to_json(l));
  for (const auto& o : m.offsets) offsets.push_back(to_json(o));
  return {{"vertex_ids", m.vertex_ids},
          {"vertices", verts},
          {"directions", dirs},
          {"lengths", lengths},
          {"offsets", offsets},
          {"total", to_json(m.total)},
          {"origin", m.origin ? to_json(*m.origin) : json(nullptr)}};
}

CycleModel cycle_from_json(const json& j, std::shared_ptr<const TropicalCurve> curve) {
  CycleModel m;
  m.curve = std::move(curve);
  m.vertex_ids = j.at("vertex_ids").get<std::vector<std::size_t>>();
  for (const auto& v : j.at("vertices")) m.vertices.push_back(point_from_json(v));
  for (const auto& d : j.at("directions")) m.directions.push_back(vec_from_json(d));
  for (const auto& l : j.at("lengths")) m.lengths.push_back(rational_from_json(l));
  for (const auto& o : j.at("offsets")) m.offsets.push_back(rational_from_json(o));
  m.total = rational_from_json(j.at("total"));
  if (!j.at("origin").is_null()) m.origin = cycle_point_from_json(j.at("origin"));
  return m;
}

}  // namespace

json to_json(const Rational& r) { return r.fraction(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const Point2& p) { return json::array({to_json(p.x), to_json(p.y)}); }
Point2 point_from_json(const json& j) { return {rational_from_json(j.at(0)), rational_from_json(j.at(1))}; }

json to_json(const CyclePoint& p) { return {{"edge", p.edge}, {"t", to_json(p.t)}}; }
CyclePoint cycle_point_from_json(const json& j) {
  return {j.at("edge").get<std::size_t>(), rational_from_json(j.at("t"))};
}

json to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& t : d.terms) out.push_back({{"point", to_json(t.point)}, {"coefficient", t.coefficient}});
  return out;
}

Divisor divisor_from_json(const json& j) {
  Divisor d;
  for (const auto& t : j) d.terms.push_back({point_from_json(t.at("point")), t.at("coefficient").get<long long>()});
  return d;
}

json to_json(const IntersectionMultiset& m) {
  json pts = json::array();
  for (const auto& e : m.entries) pts.push_back({{"point", to_json(e.point)}, {"multiplicity", e.multiplicity}});
  return {{"points", pts}, {"total", m.total()}};
}

json to_json(const VerificationReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"seed", t.seed},
                      {"f", t.f},
                      {"g", t.g},
                      {"expected", t.expected},
                      {"total", t.total},
                      {"balanced", t.balanced},
                      {"pass", t.passed},
                      {"note", t.note}});
  return {{"name", r.name}, {"trials", trials}, {"failures", r.failures()}, {"pass", r.passed()}};
}

CurveDocument make_document(const std::string& source, const std::optional<Point2>& origin) {
  const auto f = TropicalPolynomial::parse(source);
  CurveDocument doc{kSchemaVersion, source, build_curve(f), std::nullopt};
  try {
    CycleModel m = extract_cycle(doc.curve);
    doc.cycle = origin ? set_origin(m, *origin) : set_origin(m, CyclePoint{0, Rational(0)});
  } catch (const DomainError&) {
    if (origin) throw;
  }
  return doc;
}

json to_json(const CurveDocument& doc) {
  const auto& c = doc.curve;
  json vertices = json::array();
  for (const auto& v : c.vertices) vertices.push_back({{"point", to_json(v.position)}, {"cell", v.cell}});
  json edges = json::array();
  for (const auto& e : c.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"direction", to_json(e.direction)},
                     {"length", to_json(e.length)},
                     {"weight", e.weight},
                     {"dual", to_json(e.dual)}});
  json rays = json::array();
  for (const auto& r : c.rays)
    rays.push_back({{"vertex", r.vertex}, {"direction", to_json(r.direction)}, {"weight", r.weight}, {"dual", to_json(r.dual)}});
  json lines = json::array();
  for (const auto& l : c.lines)
    lines.push_back({{"anchor", to_json(l.anchor)}, {"direction", to_json(l.direction)}, {"weight", l.weight}, {"dual", to_json(l.dual)}});
  json out = {{"schema", doc.schema},
              {"source", doc.source},
              {"polynomial", polynomial_json(c.polynomial)},
              {"subdivision", subdivision_json(c.subdivision)},
              {"vertices", vertices},
              {"edges", edges},
              {"rays", rays},
              {"lines", lines}};
  out["cycle"] = doc.cycle ? cycle_json(*doc.cycle) : json(nullptr);
  return out;
}

CurveDocument document_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchemaVersion)
      throw std::invalid_argument("unsupported schema '" + j.at("schema").get<std::string>() + "'");
    TropicalCurve c{polynomial_from_json(j.at("polynomial")), subdivision_from_json(j.at("subdivision")), {}, {}, {}, {}};
    for (const auto& v : j.at("vertices")) c.vertices.push_back({point_from_json(v.at("point")), v.at("cell").get<std::size_t>()});
    for (const auto& e : j.at("edges"))
      c.edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(), vec_from_json(e.at("direction")),
                         rational_from_json(e.at("length")), e.at("weight").get<long long>(), dual_from_json(e.at("dual"))});
    for (const auto& r : j.at("rays"))
      c.rays.push_back({r.at("vertex").get<std::size_t>(), vec_from_json(r.at("direction")), r.at("weight").get<long long>(),
                        dual_from_json(r.at("dual"))});
    for (const auto& l : j.at("lines"))
      c.lines.push_back({point_from_json(l.at("anchor")), vec_from_json(l.at("direction")), l.at("weight").get<long long>(),
                         dual_from_json(l.at("dual"))});
    CurveDocument doc{kSchemaVersion, j.at("source").get<std::string>(), std::move(c), std::nullopt};
    if (!j.at("cycle").is_null())
      doc.cycle = cycle_from_json(j.at("cycle"), std::make_shared<const TropicalCurve>(doc.curve));
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed curve document: ") + e.what());
  }
}

Point2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'x,y'", 0);
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };
  try {
    return {Rational::parse(trim(text.substr(0, comma))), Rational::parse(trim(text.substr(comma + 1)))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Divisor parse_divisor(const std::string& raw, const Point2& origin) {
  // Accept the Unicode minus sign as '-'.
  std::string text;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 3, "\xE2\x88\x92") == 0) {
      text.push_back('-');
      i += 2;
    } else {
      text.push_back(raw[i]);
    }
  }
  Divisor d;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  for (;;) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty divisor", pos);
      break;
    }
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    long long mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::from_chars(text.data() + start, text.data() + pos, mult);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    if (pos >= text.size()) throw ParseError("expected point", pos);
    Point2 p;
    if (text[pos] == 'O') {
      p = origin;
      ++pos;
    } else if (text[pos] == '[') {
      const auto close = text.find(']', pos);
      if (close == std::string::npos) throw ParseError("expected ']'", pos);
      try {
        p = parse_point(text.substr(pos + 1, close - pos - 1));
      } catch (const ParseError&) {
        throw ParseError("malformed point", pos);
      }
      pos = close + 1;
    } else {
      throw ParseError("expected '[x,y]' or 'O'", pos);
    }
    d.terms.push_back({p, sign * mult});
    first = false;
  }
  return d;
}

}  // namespace trop
