#include "trop/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trop {

void Viewport::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw std::invalid_argument("invalid viewport: need x_min < x_max and y_min < y_max");
}

bool Viewport::contains(const Point2& p) const {
  return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
}

Viewport parse_viewport(const std::string& text) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(Rational::parse(item));
  if (parts.size() != 4) throw std::invalid_argument("viewport needs four values xmin,ymin,xmax,ymax");
  Viewport v{parts[0], parts[1], parts[2], parts[3]};
  v.validate();
  return v;
}

std::optional<std::pair<Point2, Point2>> clip(const Viewport& v, const Point2& origin, IntVec2 direction,
                                              ParamRange range) {
  auto& lo = range.lo;
  auto& hi = range.hi;
  // Constraint p * s <= q for each side of the rectangle.
  const Rational dx(direction.dx), dy(direction.dy);
  const std::pair<Rational, Rational> sides[] = {
      {-dx, origin.x - v.x_min}, {dx, v.x_max - origin.x}, {-dy, origin.y - v.y_min}, {dy, v.y_max - origin.y}};
  for (const auto& [p, q] : sides) {
    if (p == 0) {
      if (q < 0) return std::nullopt;
      continue;
    }
    const Rational s = q / p;
    if (p < 0) {
      if (!lo || *lo < s) lo = s;
    } else {
      if (!hi || s < *hi) hi = s;
    }
  }
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return std::pair{along(origin, direction, *lo), along(origin, direction, *hi)};
}

namespace {

const Rational kWidth(640);
const Rational kInset(150);
const Rational kInsetMargin(10);

void extend(std::optional<Viewport>& box, const Point2& p) {
  if (!box) {
    box = Viewport{p.x, p.y, p.x, p.y};
    return;
  }
  box->x_min = min(box->x_min, p.x);
  box->y_min = min(box->y_min, p.y);
  box->x_max = max(box->x_max, p.x);
  box->y_max = max(box->y_max, p.y);
}

std::string num(const Rational& r) {
  std::string s = r.decimal(6);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

class Canvas {
 public:
  explicit Canvas(const Viewport& v) : v_(v), scale_(kWidth / (v.x_max - v.x_min)) {}

  Rational width() const { return kWidth; }
  Rational height() const { return (v_.y_max - v_.y_min) * scale_; }
  Rational px(const Rational& x) const { return (x - v_.x_min) * scale_; }
  Rational py(const Rational& y) const { return (v_.y_max - y) * scale_; }

 private:
  Viewport v_;
  Rational scale_;
};

struct Style {
  std::string stroke;
  std::string width;
  std::string dash;   // empty: solid
};

class Writer {
 public:
  Writer(const Canvas& canvas, const Viewport& v) : canvas_(canvas), v_(v) {}

  std::ostringstream out;

  void segment(const Point2& a, const Point2& b, const Style& s, const std::string& cls) {
    out << "  <line class=\"" << cls << "\" x1=\"" << num(canvas_.px(a.x)) << "\" y1=\"" << num(canvas_.py(a.y))
        << "\" x2=\"" << num(canvas_.px(b.x)) << "\" y2=\"" << num(canvas_.py(b.y)) << "\" stroke=\"" << s.stroke
        << "\" stroke-width=\"" << s.width << "\"";
    if (!s.dash.empty()) out << " stroke-dasharray=\"" << s.dash << "\"";
    out << "/>\n";
  }

  // Draws the visible part of a piece; returns its midpoint when drawn.
  std::optional<Point2> piece(const Point2& origin, IntVec2 dir, ParamRange range, const Style& s,
                              const std::string& cls) {
    const auto c = clip(v_, origin, dir, range);
    if (!c) return std::nullopt;
    segment(c->first, c->second, s, cls);
    return Point2{(c->first.x + c->second.x) / 2, (c->first.y + c->second.y) / 2};
  }

  void dot(const Point2& p, const std::string& fill, const std::string& r, const std::string& cls) {
    if (!v_.contains(p)) return;
    out << "  <circle class=\"" << cls << "\" cx=\"" << num(canvas_.px(p.x)) << "\" cy=\"" << num(canvas_.py(p.y))
        << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
  }

  void label(const Point2& p, const std::string& text, const std::string& cls) {
    if (!v_.contains(p)) return;
    out << "  <text class=\"" << cls << "\" x=\"" << num(canvas_.px(p.x) + 4) << "\" y=\"" << num(canvas_.py(p.y) - 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
  }

 private:
  const Canvas& canvas_;
  Viewport v_;
};

void draw_curve(Writer& w, const TropicalCurve& c, const std::set<std::size_t>& cycle_edges, const Style& base,
                const std::string& cls) {
  const Style highlight{"#d62728", "3", base.dash};
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    const bool on_cycle = cycle_edges.count(i) > 0;
    const auto mid = w.piece(c.vertices[e.from].position, e.direction, {Rational(0), e.length},
                             on_cycle ? highlight : base, on_cycle ? cls + " cycle" : cls + " edge");
    if (mid && e.weight > 1) w.label(*mid, std::to_string(e.weight), "weight");
  }
  for (const auto& r : c.rays) {
    const auto mid = w.piece(c.vertices[r.vertex].position, r.direction, {Rational(0), std::nullopt}, base, cls + " ray");
    if (mid && r.weight > 1) w.label(*mid, std::to_string(r.weight), "weight");
  }
  for (const auto& l : c.lines) {
    const auto mid = w.piece(l.anchor, l.direction, {}, base, cls + " line");
    if (mid && l.weight > 1) w.label(*mid, std::to_string(l.weight), "weight");
  }
  for (const auto& v : c.vertices) w.dot(v.position, base.stroke, "2.5", cls + " vertex");
}

std::set<std::size_t> cycle_edge_ids(const TropicalCurve& c, const CycleModel& cycle) {
  std::set<std::size_t> ids;
  const std::size_t n = cycle.vertex_ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = cycle.vertex_ids[i], b = cycle.vertex_ids[(i + 1) % n];
    for (std::size_t e = 0; e < c.edges.size(); ++e)
      if ((c.edges[e].from == a && c.edges[e].to == b) || (c.edges[e].from == b && c.edges[e].to == a)) ids.insert(e);
  }
  return ids;
}

void draw_inset(std::ostringstream& out, const DualSubdivision& s, const Rational& canvas_width) {
  const auto& verts = s.polygon.vertices();
  if (verts.empty()) return;
  long long x0 = verts.front().x, x1 = x0, y0 = verts.front().y, y1 = y0;
  for (const auto& p : verts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const Rational span(std::max<long long>({x1 - x0, y1 - y0, 1}));
  const Rational pad(12);
  const Rational left = canvas_width - kInset - kInsetMargin;
  const Rational top = kInsetMargin;
  const Rational unit = (kInset - 2 * pad) / span;
  auto ix = [&](long long x) { return left + pad + Rational(x - x0) * unit; };
  auto iy = [&](long long y) { return top + kInset - pad - Rational(y - y0) * unit; };

  out << "  <g class=\"subdivision\">\n";
  out << "    <rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(kInset) << "\" height=\""
      << num(kInset) << "\" fill=\"#ffffff\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  if (verts.size() >= 3) {
    out << "    <polygon points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i)
      out << (i ? " " : "") << num(ix(verts[i].x)) << "," << num(iy(verts[i].y));
    out << "\" fill=\"#f2f2f2\" stroke=\"none\"/>\n";
  }
  for (const auto& e : s.edges)
    out << "    <line x1=\"" << num(ix(e.a.x)) << "\" y1=\"" << num(iy(e.a.y)) << "\" x2=\"" << num(ix(e.b.x))
        << "\" y2=\"" << num(iy(e.b.y)) << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  for (const auto& p : s.vertices)
    out << "    <circle cx=\"" << num(ix(p.x)) << "\" cy=\"" << num(iy(p.y)) << "\" r=\"2\" fill=\"#444444\"/>\n";
  out << "  </g>\n";
}

}  // namespace

Viewport default_viewport(const TropicalCurve& c, const PlotOptions& options) {
  std::optional<Viewport> box;
  for (const auto& v : c.vertices) extend(box, v.position);
  for (const auto& l : c.lines) extend(box, l.anchor);
  if (options.other) {
    for (const auto& v : options.other->vertices) extend(box, v.position);
    for (const auto& l : options.other->lines) extend(box, l.anchor);
  }
  if (options.meets)
    for (const auto& e : options.meets->entries) extend(box, e.point);
  if (options.construction) {
    extend(box, options.construction->through_pq.center);
    extend(box, options.construction->through_ro.center);
  }
  if (!box) box = Viewport{Rational(0), Rational(0), Rational(0), Rational(0)};
  const Rational span = max(box->x_max - box->x_min, box->y_max - box->y_min);
  const Rational pad = span / 4 + 1;
  Viewport v{box->x_min - pad, box->y_min - pad, box->x_max + pad, box->y_max + pad};
  v.validate();
  return v;
}

std::string render_svg(const TropicalCurve& c, const PlotOptions& options) {
  const Viewport view = options.viewport ? *options.viewport : default_viewport(c, options);
  view.validate();
  const Canvas canvas(view);
  Writer w(canvas, view);

  w.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  w.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(canvas.width()) << "\" height=\""
        << num(canvas.height()) << "\" viewBox=\"0 0 " << num(canvas.width()) << " " << num(canvas.height()) << "\">\n";
  w.out << "  <rect x=\"0\" y=\"0\" width=\"" << num(canvas.width()) << "\" height=\"" << num(canvas.height())
        << "\" fill=\"#ffffff\"/>\n";

  std::set<std::size_t> highlighted;
  if (options.cycle) highlighted = cycle_edge_ids(c, *options.cycle);

  if (options.other) draw_curve(w, *options.other, {}, Style{"#1f77b4", "1.5", ""}, "other");
  if (options.construction) {
    const Style dashed{"#2ca02c", "1.5", "6,4"};
    draw_curve(w, build_curve(line_polynomial(options.construction->through_pq.center)), {}, dashed, "construction");
    draw_curve(w, build_curve(line_polynomial(options.construction->through_ro.center)), {}, dashed, "construction");
  }
  draw_curve(w, c, highlighted, Style{"#000000", "1.5", ""}, "curve");

  if (options.meets)
    for (const auto& e : options.meets->entries) {
      w.dot(e.point, "#ff7f0e", "4", "intersection");
      if (e.multiplicity > 1) w.label(e.point, std::to_string(e.multiplicity), "multiplicity");
    }

  if (options.cycle && options.construction) {
    const auto& cyc = *options.cycle;
    const auto& g = *options.construction;
    const std::pair<const char*, CyclePoint> marks[] = {
        {"P", g.through_pq.first}, {"Q", g.through_pq.second}, {"R", g.through_pq.third}, {"P+Q", g.sum}};
    for (const auto& [name, p] : marks) {
      const Point2 at = embed(cyc, p);
      w.dot(at, "#9467bd", "3.5", "construction-point");
      w.label(at, name, "construction-label");
    }
    if (cyc.origin) {
      const Point2 o = embed(cyc, *cyc.origin);
      w.dot(o, "#9467bd", "3.5", "construction-point");
      w.label(o, "O", "construction-label");
    }
  }

  if (options.subdivision_inset) draw_inset(w.out, c.subdivision, canvas.width());
  w.out << "</svg>\n";
  return w.out.str();
}

}  // namespace trop
