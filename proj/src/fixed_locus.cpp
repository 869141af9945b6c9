#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "mckay/error.hpp"
#include "mckay/junior_fan.hpp"

namespace mckay {

namespace {

// On the torus orbit of an invariant cone the lift acts as a translation
// composed with the induced lattice automorphism A of the quotient by the
// cone's span. The fixed set is finite with |det(I - A)| points when that
// number is nonzero, and otherwise empty or of positive dimension; either way
// its Euler characteristic is |det(I - A)|, whatever the phases.

int trace(const Perm3& p) { return (p(0) == 0) + (p(1) == 1) + (p(2) == 2); }
int sign(const Perm3& p) { return p.is_odd() ? -1 : 1; }

// Fixed ray: the quotient carries the two eigenvalues other than 1.
std::int64_t ray_term(const Perm3& p) { return std::abs(1 - (trace(p) - 1) + sign(p)); }

// Invariant edge: the quotient is a line on which A acts by det / det(A on span).
std::int64_t edge_term(const Perm3& p, bool swapped) {
  int lambda = sign(p) * (swapped ? -1 : 1);
  return std::abs(1 - lambda);
}

bool fixes(const Perm3& p, const LatticePoint& v) { return act(p, v) == v; }

std::int64_t star_euler(const Triangulation& t, const Perm3& p,
                        const std::vector<std::size_t>& center) {
  std::int64_t total = 0;
  auto contains_center = [&](const auto& cell) {
    for (std::size_t c : center)
      if (std::find(cell.begin(), cell.end(), c) == cell.end())
        return false;
    return true;
  };
  if (center.size() == 1 && fixes(p, t.vertices[center[0]]))
    total += ray_term(p);
  for (const auto& e : t.edges()) {
    if (!contains_center(e))
      continue;
    const auto& a = t.vertices[e[0]];
    const auto& b = t.vertices[e[1]];
    if (fixes(p, a) && fixes(p, b))
      total += edge_term(p, false);
    else if (act(p, a) == b)
      total += edge_term(p, true);
  }
  for (const auto& tr : t.triangles) {
    if (!contains_center(tr))
      continue;
    std::set<LatticePoint> s, img;
    for (std::size_t v : tr) {
      s.insert(t.vertices[v]);
      img.insert(act(p, t.vertices[v]));
    }
    total += s == img ? 1 : 0;
  }
  return total;
}

// The cell whose relative interior contains the barycenter.
std::vector<std::size_t> central_cell(const Triangulation& t) {
  const std::int64_t d = t.denominator;
  if (d % 3 == 0) {
    LatticePoint c{{d / 3, d / 3, d / 3}, d};
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
      if (t.vertices[i] == c)
        return {i};
  }
  // Compare 3 * (barycentric coordinates) against the scaled barycenter (d,d,d).
  for (const auto& tr : t.triangles) {
    std::array<std::array<std::int64_t, 2>, 3> v;
    for (int k = 0; k < 3; ++k)
      v[k] = {3 * t.vertices[tr[k]].scaled[0], 3 * t.vertices[tr[k]].scaled[1]};
    auto orient = [](const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b,
                     const std::array<std::int64_t, 2>& c) {
      return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    std::array<std::int64_t, 2> q{d, d};
    if (orient(v[0], v[1], q) > 0 && orient(v[1], v[2], q) > 0 && orient(v[2], v[0], q) > 0)
      return {tr[0], tr[1], tr[2]};
  }
  fail(Errc::SymmetryBroken, "barycenter lies on an edge of an S3-invariant triangulation");
}

// Character lattice M = {m in Z^3 : m.v in Z for every vertex v}. Returns the
// least positive multiple of the primitive vector u lying in M.
Scaled lift_to_dual(const Triangulation& t, Scaled u) {
  std::int64_t g = std::gcd(std::gcd(std::abs(u[0]), std::abs(u[1])), std::abs(u[2]));
  for (auto& x : u)
    x /= g;
  const std::int64_t d = t.denominator;
  std::int64_t k = 1;
  for (const auto& v : t.vertices) {
    std::int64_t dot = u[0] * v.scaled[0] + u[1] * v.scaled[1] + u[2] * v.scaled[2];
    std::int64_t r = ((dot % d) + d) % d;
    k = std::lcm(k, d / std::gcd(r, d));
  }
  return {k * u[0], k * u[1], k * u[2]};
}

bool character_trivial(const Scaled& m, const MonomialElement& lift) {
  Rat s = Rat(m[0]) * lift.phases[0] + Rat(m[1]) * lift.phases[1] +
          Rat(m[2]) * lift.phases[2];
  return s.is_integer();
}

// Torus-orbit strata carrying a fixed curve of a transposition's lift: fixed
// rays (eigenvalues 1, -1 on the quotient) and swapped edges (eigenvalue 1),
// provided the invariant character of the stratum is trivial on the lift.
std::int64_t fixed_curves(const Triangulation& t, const Perm3& p, const MonomialElement& lift) {
  int i = p(0) == 0 ? 0 : p(1) == 1 ? 1 : 2;
  int j = (i + 1) % 3, k = (i + 2) % 3;
  std::int64_t count = 0;
  for (const auto& v : t.vertices) {
    if (!fixes(p, v))
      continue;
    Scaled u{};
    u[i] = v.scaled[j] + v.scaled[k];
    u[j] = u[k] = -v.scaled[i];
    count += character_trivial(lift_to_dual(t, u), lift) ? 1 : 0;
  }
  for (const auto& e : t.edges()) {
    const auto& a = t.vertices[e[0]].scaled;
    const auto& b = t.vertices[e[1]].scaled;
    if (act(p, a) != b)
      continue;
    Scaled u{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    count += character_trivial(lift_to_dual(t, u), lift) ? 1 : 0;
  }
  return count;
}

} // namespace

std::int64_t fixed_set_euler(const Triangulation& t, const Perm3& p) {
  std::int64_t total = 0;
  for (const auto& v : t.vertices)
    if (fixes(p, v))
      total += ray_term(p);
  for (const auto& e : t.edges()) {
    const auto& a = t.vertices[e[0]];
    const auto& b = t.vertices[e[1]];
    if (fixes(p, a) && fixes(p, b))
      total += edge_term(p, false);
    else if (act(p, a) == b && act(p, b) == a)
      total += edge_term(p, true);
  }
  for (const auto& tr : t.triangles) {
    std::set<LatticePoint> s, img;
    for (std::size_t v : tr) {
      s.insert(t.vertices[v]);
      img.insert(act(p, t.vertices[v]));
    }
    total += s == img ? 1 : 0;
  }
  return total;
}

FixedLocusSummary fixed_locus(const Triangulation& t, const SymmetryAction& w,
                              const CaseTag& tag) {
  if (tag.kind == Case::Unsupported)
    fail(Errc::UnsupportedCase, "fixed locus is only defined for the monomial cases I-V");
  FixedLocusSummary out;
  for (std::size_t i = 0; i < w.perms.size(); ++i)
    if (w.perms[i].order() == 2)
      out.fixed_curve_count += fixed_curves(t, w.perms[i], w.lifts[i]);

  switch (w.order()) {
    case 1:
      break;
    case 2: {
      const Perm3& s = w.perms[0].is_identity() ? w.perms[1] : w.perms[0];
      out.transposition_points = fixed_set_euler(t, s);
      break;
    }
    case 6: {
      const Perm3 cyc = Perm3::from_image(1, 2, 0);
      const Perm3 swap = Perm3::from_image(0, 2, 1);
      out.full_points = fixed_set_euler(t, cyc);
      std::int64_t central = star_euler(t, swap, central_cell(t));
      if (central != out.full_points)
        fail(Errc::VerificationFailed,
             "fixed points near the center disagree: " + std::to_string(central) + " vs " +
                 std::to_string(out.full_points));
      // the three transpositions are conjugate, so each sees the same count
      out.transposition_points = 3 * (fixed_set_euler(t, swap) - central);
      break;
    }
    default:
      fail(Errc::UnsupportedCase,
           "symmetry group of order " + std::to_string(w.order()) + " is not supported");
  }
  out.isolated_points_total = out.transposition_points + out.full_points;
  return out;
}

int local_resolution_euler(int stabilizer_order) {
  switch (stabilizer_order) {
    case 2: return 2;
    case 6: return 3;
    default:
      fail(Errc::InvalidParameter,
           "no local resolution for a stabilizer of order " + std::to_string(stabilizer_order));
  }
}

} // namespace mckay
