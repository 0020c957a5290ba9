#include "trop/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace trop {

namespace {

struct Lifted {
  LatticePoint p;
  Rational h;
};

std::vector<Lifted> lift(const TropicalPolynomial& f) {
  std::vector<Lifted> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back({planar(e), c});
  return pts;
}

SubdivisionEdge make_edge(LatticePoint a, LatticePoint b) {
  SubdivisionEdge e;
  e.a = std::min(a, b);
  e.b = std::max(a, b);
  return e;
}

void build_line_chain(const std::vector<Lifted>& pts, DualSubdivision& out) {
  const LatticePoint base = out.polygon.vertices().front();
  const IntVec2 u = primitive(out.polygon.vertices().back() - base).direction;
  // Position along the line, then the upper concave chain of (position, height).
  std::vector<std::pair<long long, const Lifted*>> seq;
  for (const auto& l : pts) {
    const IntVec2 d = l.p - base;
    seq.emplace_back(u.dx != 0 ? d.dx / u.dx : d.dy / u.dy, &l);
  }
  std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<long long, const Lifted*>> chain;
  for (const auto& s : seq) {
    while (chain.size() >= 2) {
      const auto& o = chain[chain.size() - 2];
      const auto& a = chain.back();
      // keep only strict right turns (concave from above)
      const Rational cr = Rational(a.first - o.first) * (s.second->h - o.second->h) -
                          (a.second->h - o.second->h) * Rational(s.first - o.first);
      if (cr.sign() >= 0)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    out.edges.push_back(make_edge(chain[i].second->p, chain[i + 1].second->p));
  for (const auto& c : chain) out.vertices.push_back(c.second->p);
}

void build_upper_faces(const std::vector<Lifted>& pts, DualSubdivision& out) {
  const std::size_t n = pts.size();
  std::set<std::tuple<Rational, Rational, Rational>> seen;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const IntVec2 u = pts[j].p - pts[i].p;
        const IntVec2 v = pts[k].p - pts[i].p;
        const long long det = det2(u, v);
        if (det == 0) continue;
        // height = sx * a + sy * b + off through the three lifted points
        const Rational dh1 = pts[j].h - pts[i].h;
        const Rational dh2 = pts[k].h - pts[i].h;
        const Rational sx = (dh1 * Rational(v.dy) - dh2 * Rational(u.dy)) / Rational(det);
        const Rational sy = (dh2 * Rational(u.dx) - dh1 * Rational(v.dx)) / Rational(det);
        const Rational off = pts[i].h - sx * Rational(pts[i].p.x) - sy * Rational(pts[i].p.y);
        auto key = std::make_tuple(sx, sy, off);
        if (seen.count(key)) continue;
        bool upper = true;
        std::vector<LatticePoint> on_face;
        for (const auto& q : pts) {
          const Rational plane = sx * Rational(q.p.x) + sy * Rational(q.p.y) + off;
          if (q.h > plane) {
            upper = false;
            break;
          }
          if (q.h == plane) on_face.push_back(q.p);
        }
        if (!upper) continue;
        seen.insert(key);
        SubdivisionCell cell;
        cell.vertices = convex_hull(on_face).vertices();
        std::sort(on_face.begin(), on_face.end());
        cell.points = std::move(on_face);
        cell.slope_x = sx;
        cell.slope_y = sy;
        cell.offset = off;
        out.cells.push_back(std::move(cell));
      }
  // Deterministic cell order: by first vertex, then by vertex list.
  std::sort(out.cells.begin(), out.cells.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.vertices < b.vertices; });

  std::map<std::pair<LatticePoint, LatticePoint>, std::size_t> index;
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    const auto& vs = out.cells[c].vertices;
    for (std::size_t t = 0; t < vs.size(); ++t) {
      SubdivisionEdge e = make_edge(vs[t], vs[(t + 1) % vs.size()]);
      auto [it, inserted] = index.emplace(std::make_pair(e.a, e.b), out.edges.size());
      if (inserted) out.edges.push_back(e);
      out.edges[it->second].cells.push_back(c);
    }
  }
  std::set<LatticePoint> verts;
  for (auto& e : out.edges) {
    if (e.cells.size() > 2) throw std::logic_error("subdivision edge shared by more than two cells");
    e.kind = e.cells.size() == 2 ? EdgeKind::Interior : EdgeKind::Boundary;
    verts.insert(e.a);
    verts.insert(e.b);
  }
  out.vertices.assign(verts.begin(), verts.end());
}

}  // namespace

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
  const TropicalPolynomial g = as_affine(f);
  DualSubdivision out;
  out.polygon = newton_polygon(g);
  out.dimension = out.polygon.dimension();
  const auto pts = lift(g);
  if (out.dimension == 0) {
    out.vertices = {pts.front().p};
  } else if (out.dimension == 1) {
    build_line_chain(pts, out);
    std::sort(out.edges.begin(), out.edges.end(),
              [](const SubdivisionEdge& a, const SubdivisionEdge& b) {
                return std::tie(a.a, a.b) < std::tie(b.a, b.b);
              });
    std::sort(out.vertices.begin(), out.vertices.end());
  } else {
    build_upper_faces(pts, out);
  }
  return out;
}

bool is_unimodular_triangulation(const DualSubdivision& s) {
  if (s.dimension != 2) return false;
  for (const auto& c : s.cells) {
    if (c.vertices.size() != 3) return false;
    if (std::abs(det2(c.vertices[1] - c.vertices[0], c.vertices[2] - c.vertices[0])) != 1) return false;
  }
  return true;
}

std::size_t interior_lattice_vertex_count(const DualSubdivision& s) {
  return static_cast<std::size_t>(std::count_if(s.vertices.begin(), s.vertices.end(), [&](LatticePoint p) {
    return s.polygon.strictly_contains(p);
  }));
}

long long lattice_length(const SubdivisionEdge& e) { return primitive(e.b - e.a).content; }

}  // namespace trop
