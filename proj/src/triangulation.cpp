#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mckay/error.hpp"
#include "mckay/junior_fan.hpp"

namespace mckay {

namespace {

__extension__ typedef __int128 i128;
using Tri = std::array<std::size_t, 3>;

// Points of the simplex are handled through their first two scaled coordinates.
struct P2 {
  std::int64_t x, y;
};

P2 project(const LatticePoint& p) { return {p.scaled[0], p.scaled[1]}; }

std::int64_t orient(const P2& a, const P2& b, const P2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Squared length of a difference vector in the S_3-invariant form
// u0^2 + u1^2 + u2^2 with u2 = -u0 - u1.
i128 qform(std::int64_t u0, std::int64_t u1) {
  i128 a = u0, b = u1, c = -(a + b);
  return a * a + b * b + c * c;
}

// > 0 iff q is strictly inside the circumcircle of the counterclockwise
// triangle abc, circles taken in the invariant form.
int incircle(const P2& a, const P2& b, const P2& c, const P2& q) {
  i128 r[3][3];
  const P2* v[3] = {&a, &b, &c};
  for (int k = 0; k < 3; ++k) {
    std::int64_t u0 = v[k]->x - q.x, u1 = v[k]->y - q.y;
    r[k][0] = u0;
    r[k][1] = u1;
    r[k][2] = qform(u0, u1);
  }
  i128 det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
             r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
             r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// Incremental Delaunay triangulation inside a fixed outer triangle, whose
// edges are never flipped.
class Mesh {
public:
  Mesh(const std::vector<P2>& pts, Tri outer) : pts_(pts) {
    if (orient(pts_[outer[0]], pts_[outer[1]], pts_[outer[2]]) < 0)
      std::swap(outer[1], outer[2]);
    add(outer[0], outer[1], outer[2]);
  }

  void insert(std::size_t p) {
    const P2& q = pts_[p];
    std::size_t loc = tris_.size();
    std::array<std::int64_t, 3> o{};
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (!alive_[t])
        continue;
      const Tri& v = tris_[t];
      o = {orient(pts_[v[0]], pts_[v[1]], q), orient(pts_[v[1]], pts_[v[2]], q),
           orient(pts_[v[2]], pts_[v[0]], q)};
      if (o[0] >= 0 && o[1] >= 0 && o[2] >= 0) {
        loc = t;
        break;
      }
    }
    if (loc == tris_.size())
      fail(Errc::Arithmetic, "triangulation: point outside the region");
    const Tri v = tris_[loc];
    int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
    if (zeros > 1)
      fail(Errc::Arithmetic, "triangulation: duplicate point");
    kill(loc);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    if (zeros == 0) {
      add(v[0], v[1], p);
      add(v[1], v[2], p);
      add(v[2], v[0], p);
      stack = {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}};
    } else {
      int i = o[0] == 0 ? 0 : o[1] == 0 ? 1 : 2;
      std::size_t a = v[i], b = v[(i + 1) % 3], c = v[(i + 2) % 3];
      add(a, p, c);
      add(p, b, c);
      stack = {{b, c}, {c, a}};
      auto nb = edges_.find(key(b, a));
      if (nb != edges_.end()) {
        std::size_t t2 = nb->second;
        std::size_t e = third(t2, b, a);
        kill(t2);
        add(b, p, e);
        add(p, a, e);
        stack.push_back({a, e});
        stack.push_back({e, b});
      }
    }
    while (!stack.empty()) {
      auto [u, w] = stack.back();
      stack.pop_back();
      auto it = edges_.find(key(u, w));
      auto jt = edges_.find(key(w, u));
      if (it == edges_.end() || jt == edges_.end())
        continue;
      std::size_t t1 = it->second, t2 = jt->second;
      std::size_t apex = third(t1, u, w), opp = third(t2, w, u);
      if (!strictly_convex(u, w, apex, opp))
        continue;
      if (incircle(pts_[u], pts_[w], pts_[apex], pts_[opp]) > 0) {
        kill(t1);
        kill(t2);
        add(u, opp, apex);
        add(opp, w, apex);
        stack.push_back({u, opp});
        stack.push_back({opp, w});
      }
    }
  }

  // Triangles grouped into cells: triangles sharing a cocircular interior
  // edge of a strictly convex quadrilateral land in the same cell.
  std::vector<std::vector<Tri>> cells() const {
    std::vector<std::size_t> parent(tris_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (!alive_[t])
        continue;
      for (int k = 0; k < 3; ++k) {
        std::size_t u = tris_[t][k], w = tris_[t][(k + 1) % 3];
        auto jt = edges_.find(key(w, u));
        if (jt == edges_.end() || jt->second < t)
          continue;
        std::size_t apex = third(t, u, w), opp = third(jt->second, w, u);
        if (strictly_convex(u, w, apex, opp) &&
            incircle(pts_[u], pts_[w], pts_[apex], pts_[opp]) == 0)
          parent[find(t)] = find(jt->second);
      }
    }
    std::map<std::size_t, std::vector<Tri>> groups;
    for (std::size_t t = 0; t < tris_.size(); ++t)
      if (alive_[t])
        groups[find(t)].push_back(tris_[t]);
    std::vector<std::vector<Tri>> out;
    for (auto& [root, ts] : groups)
      out.push_back(std::move(ts));
    return out;
  }

private:
  static std::uint64_t key(std::size_t a, std::size_t b) {
    return (std::uint64_t(a) << 32) | std::uint64_t(b);
  }

  std::size_t third(std::size_t t, std::size_t a, std::size_t b) const {
    for (std::size_t v : tris_[t])
      if (v != a && v != b)
        return v;
    fail(Errc::Arithmetic, "triangulation: corrupt mesh");
  }

  bool strictly_convex(std::size_t u, std::size_t w, std::size_t apex,
                       std::size_t opp) const {
    std::int64_t s1 = orient(pts_[apex], pts_[opp], pts_[u]);
    std::int64_t s2 = orient(pts_[apex], pts_[opp], pts_[w]);
    return (s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0);
  }

  void add(std::size_t a, std::size_t b, std::size_t c) {
    std::size_t t = tris_.size();
    tris_.push_back({a, b, c});
    alive_.push_back(1);
    edges_[key(a, b)] = t;
    edges_[key(b, c)] = t;
    edges_[key(c, a)] = t;
  }

  void kill(std::size_t t) {
    alive_[t] = 0;
    const Tri& v = tris_[t];
    for (int k = 0; k < 3; ++k) {
      auto it = edges_.find(key(v[k], v[(k + 1) % 3]));
      if (it != edges_.end() && it->second == t)
        edges_.erase(it);
    }
  }

  const std::vector<P2>& pts_;
  std::vector<Tri> tris_;
  std::vector<char> alive_;
  std::unordered_map<std::uint64_t, std::size_t> edges_;
};

bool in_closed_triangle(const std::vector<P2>& pts, const Tri& t, const P2& q) {
  std::int64_t s = orient(pts[t[0]], pts[t[1]], pts[t[2]]);
  std::int64_t o0 = orient(pts[t[0]], pts[t[1]], q);
  std::int64_t o1 = orient(pts[t[1]], pts[t[2]], q);
  std::int64_t o2 = orient(pts[t[2]], pts[t[0]], q);
  if (s < 0)
    return o0 <= 0 && o1 <= 0 && o2 <= 0;
  return o0 >= 0 && o1 >= 0 && o2 >= 0;
}

Tri sorted(Tri t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Replaces every multi-triangle cell by a triangulation of its polygon that is
// invariant under the cell's stabilizer in W, transported along W-orbits.
class CellRepair {
public:
  CellRepair(const std::vector<LatticePoint>& pts, const std::vector<P2>& p2,
             const SymmetryAction& w)
    : pts_(pts), p2_(p2), w_(w) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      index_.emplace(pts[i].scaled, i);
  }

  std::vector<Tri> run(const std::vector<std::vector<Tri>>& cells) {
    std::vector<Tri> out;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> polygons;   // key -> ccw polygon
    for (const auto& c : cells) {
      if (c.size() == 1) {
        out.push_back(c[0]);
        continue;
      }
      auto poly = boundary(c);
      auto k = poly;
      std::sort(k.begin(), k.end());
      polygons.emplace(k, poly);
    }
    std::set<std::vector<std::size_t>> done;
    for (const auto& [k, poly] : polygons) {
      if (done.count(k))
        continue;
      std::vector<Perm3> stab;
      std::map<std::vector<std::size_t>, Perm3> orbit;
      for (const auto& p : w_.perms) {
        auto img = image_key(p, k);
        if (!polygons.count(img))
          fail(Errc::NoEquivariantTriangulation,
               "cocircular cell has no image cell under W");
        if (img == k)
          stab.push_back(p);
        orbit.emplace(img, p);
      }
      std::vector<Tri> rep = invariant_split(poly, stab);
      for (const auto& [img, p] : orbit) {
        done.insert(img);
        for (const Tri& t : rep)
          out.push_back({map(p, t[0]), map(p, t[1]), map(p, t[2])});
      }
    }
    return out;
  }

private:
  std::size_t map(const Perm3& p, std::size_t v) const {
    auto it = index_.find(act(p, pts_[v].scaled));
    if (it == index_.end())
      fail(Errc::SymmetryBroken, "W does not preserve the point set");
    return it->second;
  }

  std::vector<std::size_t> image_key(const Perm3& p, const std::vector<std::size_t>& k) const {
    std::vector<std::size_t> out;
    for (std::size_t v : k)
      out.push_back(map(p, v));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Counterclockwise boundary cycle starting at the least vertex.
  std::vector<std::size_t> boundary(const std::vector<Tri>& cell) const {
    std::set<std::pair<std::size_t, std::size_t>> directed;
    for (const Tri& t : cell) {
      Tri c = t;
      if (orient(p2_[c[0]], p2_[c[1]], p2_[c[2]]) < 0)
        std::swap(c[1], c[2]);
      for (int k = 0; k < 3; ++k)
        directed.insert({c[k], c[(k + 1) % 3]});
    }
    std::map<std::size_t, std::size_t> next;
    for (const auto& [a, b] : directed)
      if (!directed.count({b, a}))
        next[a] = b;
    std::vector<std::size_t> poly;
    std::size_t start = next.begin()->first, v = start;
    do {
      poly.push_back(v);
      v = next.at(v);
    } while (v != start && poly.size() <= next.size());
    if (poly.size() != next.size())
      fail(Errc::Arithmetic, "cocircular cell is not a simple polygon");
    return poly;
  }

  static void enumerate(const std::vector<std::size_t>& poly, std::size_t i, std::size_t j,
                        std::vector<std::vector<Tri>>& out) {
    if (j - i < 2) {
      out.push_back({});
      return;
    }
    for (std::size_t m = i + 1; m < j; ++m) {
      std::vector<std::vector<Tri>> left, right;
      enumerate(poly, i, m, left);
      enumerate(poly, m, j, right);
      for (const auto& l : left)
        for (const auto& r : right) {
          std::vector<Tri> t = l;
          t.insert(t.end(), r.begin(), r.end());
          t.push_back({poly[i], poly[m], poly[j]});
          out.push_back(std::move(t));
        }
    }
  }

  std::vector<Tri> invariant_split(const std::vector<std::size_t>& poly,
                                   const std::vector<Perm3>& stab) const {
    if (stab.size() == 1) {
      std::vector<Tri> fan;
      for (std::size_t k = 1; k + 1 < poly.size(); ++k)
        fan.push_back({poly[0], poly[k], poly[k + 1]});
      return fan;
    }
    if (poly.size() > 12)
      fail(Errc::NoEquivariantTriangulation, "cocircular cell too large to search");
    std::vector<std::vector<Tri>> all;
    enumerate(poly, 0, poly.size() - 1, all);
    for (auto& cand : all) {
      std::set<Tri> s;
      for (const Tri& t : cand)
        s.insert(sorted(t));
      bool invariant = std::all_of(stab.begin(), stab.end(), [&](const Perm3& p) {
        return std::all_of(cand.begin(), cand.end(), [&](const Tri& t) {
          return s.count(sorted({map(p, t[0]), map(p, t[1]), map(p, t[2])})) != 0;
        });
      });
      if (invariant)
        return cand;
    }
    fail(Errc::NoEquivariantTriangulation,
         "no triangulation of a cocircular cell is invariant under its stabilizer");
  }

  const std::vector<LatticePoint>& pts_;
  const std::vector<P2>& p2_;
  const SymmetryAction& w_;
  std::map<Scaled, std::size_t> index_;
};

std::int64_t element_order(const Scaled& a, std::int64_t d) {
  std::int64_t g = std::gcd(std::gcd(std::gcd(a[0], a[1]), a[2]), d);
  return d / g;
}

} // namespace

std::vector<std::array<std::size_t, 2>> Triangulation::edges() const {
  std::set<std::array<std::size_t, 2>> s;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) {
      std::size_t a = t[k], b = t[(k + 1) % 3];
      s.insert({std::min(a, b), std::max(a, b)});
    }
  return {s.begin(), s.end()};
}

Triangulation canonical(std::int64_t denominator, std::vector<LatticePoint> vertices,
                        std::vector<std::array<std::size_t, 3>> triangles) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  std::vector<std::size_t> rank(vertices.size());
  Triangulation t;
  t.denominator = denominator;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    t.vertices.push_back(vertices[order[i]]);
  }
  for (auto tri : triangles) {
    for (auto& v : tri)
      v = rank[v];
    P2 a = project(t.vertices[tri[0]]), b = project(t.vertices[tri[1]]),
       c = project(t.vertices[tri[2]]);
    if (orient(a, b, c) < 0)
      std::swap(tri[1], tri[2]);
    std::rotate(tri.begin(), std::min_element(tri.begin(), tri.end()), tri.end());
    t.triangles.push_back(tri);
  }
  std::sort(t.triangles.begin(), t.triangles.end());
  return t;
}

Triangulation symmetric_triangulation(const JuniorSet& j, const SymmetryAction& w) {
  const std::int64_t d = j.denominator;
  std::vector<LatticePoint> pts = j.all_points();
  std::set<Scaled> present;
  for (const auto& p : pts)
    present.insert(p.scaled);
  for (const auto& p : w.perms)
    for (const auto& v : pts)
      if (!present.count(act(p, v.scaled)))
        fail(Errc::SymmetryBroken, "junior points are not invariant under " + p.str());

  std::vector<P2> p2;
  for (const auto& p : pts)
    p2.push_back(project(p));
  auto index_of = [&](const Scaled& s) {
    return static_cast<std::size_t>(
        std::lower_bound(pts.begin(), pts.end(), LatticePoint{s, d}) - pts.begin());
  };
  Tri outer = {index_of({d, 0, 0}), index_of({0, d, 0}), index_of({0, 0, d})};
  CellRepair repair(pts, p2, w);

  // Stage one: corners and points of order prime to 3.
  Mesh coarse(p2, outer);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!pts[i].is_corner() && element_order(pts[i].scaled, d) % 3 != 0)
      coarse.insert(i);
  std::vector<Tri> stage1 = repair.run(coarse.cells());

  // Stage two: the rest, refined inside each coarse triangle.
  std::vector<std::vector<Tri>> cells;
  for (const Tri& t : stage1) {
    Mesh fine(p2, t);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (i != t[0] && i != t[1] && i != t[2] && in_closed_triangle(p2, t, p2[i]))
        fine.insert(i);
    for (auto& c : fine.cells())
      cells.push_back(std::move(c));
  }
  Triangulation out = canonical(d, pts, repair.run(cells));

  std::set<Tri> tris;
  for (const auto& t : out.triangles)
    tris.insert(sorted(t));
  std::map<Scaled, std::size_t> index;
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    index.emplace(out.vertices[i].scaled, i);
  for (const auto& p : w.perms)
    for (const auto& t : out.triangles) {
      Tri img;
      for (int k = 0; k < 3; ++k)
        img[k] = index.at(act(p, out.vertices[t[k]].scaled));
      if (!tris.count(sorted(img)))
        fail(Errc::NoEquivariantTriangulation,
             "triangulation is not invariant under " + p.str());
    }
  return out;
}

// Verification

namespace {

TriangulationReport failure(std::string property, std::string detail,
                            std::vector<std::size_t> witness, std::size_t count) {
  TriangulationReport r;
  r.ok = false;
  r.property = std::move(property);
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  r.triangle_count = count;
  return r;
}

// Interiors of two counterclockwise triangles are disjoint iff some edge of
// one of them has the other triangle weakly on its outer side.
bool interiors_disjoint(const std::array<P2, 3>& a, const std::array<P2, 3>& b) {
  auto separates = [](const std::array<P2, 3>& s, const std::array<P2, 3>& o) {
    for (int k = 0; k < 3; ++k) {
      const P2& p = s[k];
      const P2& q = s[(k + 1) % 3];
      if (orient(p, q, o[0]) <= 0 && orient(p, q, o[1]) <= 0 && orient(p, q, o[2]) <= 0)
        return true;
    }
    return false;
  };
  return separates(a, b) || separates(b, a);
}

bool on_simplex_boundary(const LatticePoint& a, const LatticePoint& b) {
  for (int i = 0; i < 3; ++i)
    if (a.scaled[i] == 0 && b.scaled[i] == 0)
      return true;
  return false;
}

} // namespace

TriangulationReport verify_triangulation(const Triangulation& t, const Overlattice& n,
                                         const SymmetryAction& w) {
  const std::size_t count = t.triangles.size();
  const std::int64_t d = n.denominator();
  const auto& vs = t.vertices;

  // vertex-set
  if (t.denominator != d)
    return failure("vertex-set", "denominator differs from the overlattice", {}, count);
  std::vector<LatticePoint> expected = delta_lattice_points(n);
  if (vs != expected)
    return failure("vertex-set", "vertices differ from the lattice points of the simplex",
                   {}, count);
  std::vector<char> used(vs.size(), 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t v : t.triangles[i]) {
      if (v >= vs.size())
        return failure("vertex-set", "vertex index out of range", {i}, count);
      used[v] = 1;
    }
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (!used[v])
      return failure("vertex-set", "unused vertex " + vs[v].str(), {v}, count);

  // orientation
  std::vector<std::array<P2, 3>> geo(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (int k = 0; k < 3; ++k)
      geo[i][k] = project(vs[t.triangles[i][k]]);
    if (orient(geo[i][0], geo[i][1], geo[i][2]) <= 0)
      return failure("orientation", "triangle is degenerate or clockwise", {i}, count);
  }

  // coverage: total area, edge pairing, pairwise disjoint interiors
  i128 area = 0;
  for (const auto& g : geo)
    area += orient(g[0], g[1], g[2]);
  if (area != i128(d) * d)
    return failure("coverage", "triangle areas do not sum to the simplex area", {}, count);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> directed;
  for (std::size_t i = 0; i < count; ++i)
    for (int k = 0; k < 3; ++k) {
      auto e = std::make_pair(t.triangles[i][k], t.triangles[i][(k + 1) % 3]);
      if (!directed.emplace(e, i).second)
        return failure("coverage", "edge used twice in the same direction",
                       {directed.at(e), i}, count);
    }
  for (const auto& [e, i] : directed)
    if (!directed.count({e.second, e.first}) && !on_simplex_boundary(vs[e.first], vs[e.second]))
      return failure("coverage", "interior edge bounds only one triangle", {i}, count);
  {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto lo = [&](std::size_t i) {
      return std::min({geo[i][0].x, geo[i][1].x, geo[i][2].x});
    };
    auto hi = [&](std::size_t i) {
      return std::max({geo[i][0].x, geo[i][1].x, geo[i][2].x});
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::make_pair(lo(a), a) < std::make_pair(lo(b), b);
    });
    for (std::size_t a = 0; a < count; ++a) {
      std::size_t i = order[a];
      for (std::size_t b = a + 1; b < count && lo(order[b]) < hi(i); ++b) {
        std::size_t j = order[b];
        if (!interiors_disjoint(geo[i], geo[j]))
          return failure("coverage", "overlapping triangles", {std::min(i, j), std::max(i, j)},
                         count);
      }
    }
  }

  // basic
  for (std::size_t i = 0; i < count; ++i) {
    const auto& tr = t.triangles[i];
    if (!is_basic({vs[tr[0]], vs[tr[1]], vs[tr[2]]}, n))
      return failure("basic", "triangle is not a basis of N", {i}, count);
  }

  // lattice-empty
  {
    std::vector<P2> pts;
    for (const auto& v : vs)
      pts.push_back(project(v));
    std::vector<std::size_t> by_x(vs.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
      return std::make_pair(pts[a].x, a) < std::make_pair(pts[b].x, b);
    });
    for (std::size_t i = 0; i < count; ++i) {
      const Tri& tr = t.triangles[i];
      std::int64_t x0 = std::min({pts[tr[0]].x, pts[tr[1]].x, pts[tr[2]].x});
      std::int64_t x1 = std::max({pts[tr[0]].x, pts[tr[1]].x, pts[tr[2]].x});
      auto first = std::lower_bound(by_x.begin(), by_x.end(), x0,
                                    [&](std::size_t v, std::int64_t x) { return pts[v].x < x; });
      for (auto it = first; it != by_x.end() && pts[*it].x <= x1; ++it) {
        std::size_t v = *it;
        if (v == tr[0] || v == tr[1] || v == tr[2])
          continue;
        if (in_closed_triangle(pts, tr, pts[v]))
          return failure("lattice-empty", "triangle contains lattice point " + vs[v].str(),
                         {i}, count);
      }
    }
  }

  // triangle-count
  if (count != n.index())
    return failure("triangle-count",
                   std::to_string(count) + " triangles but |G'| = " + std::to_string(n.index()),
                   {}, count);

  // equivariance
  {
    std::map<Scaled, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i)
      index.emplace(vs[i].scaled, i);
    std::set<Tri> tris;
    for (const auto& tr : t.triangles)
      tris.insert(sorted(tr));
    for (const auto& p : w.perms)
      for (std::size_t i = 0; i < count; ++i) {
        Tri img;
        for (int k = 0; k < 3; ++k) {
          auto it = index.find(act(p, vs[t.triangles[i][k]].scaled));
          if (it == index.end())
            return failure("equivariance", "W moves a vertex off the vertex set", {i}, count);
          img[k] = it->second;
        }
        if (!tris.count(sorted(img)))
          return failure("equivariance", "image under " + p.str() + " is not a triangle", {i},
                         count);
      }
  }

  // junior
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const auto& s = vs[v].scaled;
    if (s[0] < 0 || s[1] < 0 || s[2] < 0 || s[0] + s[1] + s[2] != d)
      return failure("junior", "vertex off the junior simplex", {v}, count);
  }

  TriangulationReport ok;
  ok.triangle_count = count;
  return ok;
}

} // namespace mckay
