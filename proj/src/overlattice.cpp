#include <algorithm>

#include "mckay/error.hpp"
#include "mckay/junior_fan.hpp"

namespace mckay {

bool LatticePoint::is_corner() const {
  int zeros = 0;
  for (auto a : scaled)
    zeros += a == 0;
  return zeros == 2;
}

std::string LatticePoint::str() const {
  return "(" + std::to_string(scaled[0]) + "," + std::to_string(scaled[1]) + "," +
         std::to_string(scaled[2]) + ")/" + std::to_string(denominator);
}

std::uint64_t Overlattice::key(const Scaled& a) const {
  return std::uint64_t(a[0]) | (std::uint64_t(a[1]) << 21) | (std::uint64_t(a[2]) << 42);
}

Overlattice Overlattice::of(const FiniteMonomialGroup& gprime) {
  Overlattice n;
  for (const auto& e : gprime.elements()) {
    if (!e.is_diagonal())
      fail(Errc::NotDiagonal, "overlattice needs a diagonal group, got " + e.str());
    for (const auto& q : e.phases)
      n.denom_ = checked_lcm(n.denom_, q.den());
  }
  for (const auto& e : gprime.elements()) {
    Scaled a;
    for (int i = 0; i < 3; ++i)
      a[i] = e.phases[i].num() * (n.denom_ / e.phases[i].den());
    n.residues_.push_back(a);
  }
  std::sort(n.residues_.begin(), n.residues_.end());
  for (const auto& a : n.residues_)
    n.keys_.insert(n.key(a));
  return n;
}

bool Overlattice::contains_scaled(const Scaled& a) const {
  Scaled m;
  for (int i = 0; i < 3; ++i)
    m[i] = ((a[i] % denom_) + denom_) % denom_;
  return keys_.count(key(m)) != 0;
}

bool Overlattice::contains(const std::array<Rat, 3>& p) const {
  Scaled a;
  for (int i = 0; i < 3; ++i) {
    if (denom_ % p[i].den() != 0)
      return false;
    a[i] = p[i].num() * (denom_ / p[i].den());
  }
  return contains_scaled(a);
}

std::vector<LatticePoint> JuniorSet::all_points() const {
  std::vector<LatticePoint> out(corners.begin(), corners.end());
  out.insert(out.end(), phi1.begin(), phi1.end());
  out.insert(out.end(), phi2.begin(), phi2.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::array<LatticePoint, 3> corner_points(std::int64_t d) {
  return {LatticePoint{{d, 0, 0}, d}, LatticePoint{{0, d, 0}, d},
          LatticePoint{{0, 0, d}, d}};
}

} // namespace

JuniorSet junior_set(const FiniteMonomialGroup& gprime) {
  Overlattice n = Overlattice::of(gprime);
  const std::int64_t d = n.denominator();
  JuniorSet j;
  j.denominator = d;
  j.corners = corner_points(d);
  for (const auto& a : n.residues()) {
    if (a[0] + a[1] + a[2] != d)
      continue;
    LatticePoint p{a, d};
    (p.has_zero_coord() ? j.phi2 : j.phi1).push_back(p);
  }
  return j;
}

std::vector<LatticePoint> delta_lattice_points(const Overlattice& n) {
  // Off the corners every coordinate lies in [0,1), so a point of the simplex
  // is in N exactly when it equals one of the residues.
  const std::int64_t d = n.denominator();
  auto c = corner_points(d);
  std::vector<LatticePoint> out(c.begin(), c.end());
  for (const auto& a : n.residues())
    if (a[0] + a[1] + a[2] == d)
      out.push_back(LatticePoint{a, d});
  std::sort(out.begin(), out.end());
  return out;
}

// SymmetryAction

SymmetryAction SymmetryAction::trivial() {
  return SymmetryAction{{Perm3::identity()}, {MonomialElement::identity()}};
}

SymmetryAction SymmetryAction::of_group(const FiniteMonomialGroup& g) {
  SymmetryAction w;
  for (const auto& p : g.perm_image()) {
    auto it = std::find_if(g.elements().begin(), g.elements().end(),
                           [&](const MonomialElement& e) { return e.perm == p; });
    w.perms.push_back(p);
    w.lifts.push_back(*it);
  }
  return w;
}

SymmetryAction SymmetryAction::of_perms(std::vector<Perm3> perms) {
  SymmetryAction w;
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  if (perms.empty() || !perms.front().is_identity())
    perms.insert(perms.begin(), Perm3::identity());
  for (const auto& p : perms) {
    w.perms.push_back(p);
    w.lifts.push_back(MonomialElement(p, {}));
  }
  return w;
}

Scaled act(const Perm3& p, const Scaled& v) { return {v[p(0)], v[p(1)], v[p(2)]}; }

LatticePoint act(const Perm3& p, const LatticePoint& v) {
  return LatticePoint{act(p, v.scaled), v.denominator};
}

bool is_basic(const std::array<LatticePoint, 3>& tri, const Overlattice& n) {
  __extension__ typedef __int128 i128;
  std::array<Scaled, 3> v;
  for (int k = 0; k < 3; ++k) {
    if (n.denominator() % tri[k].denominator != 0)
      return false;   // not even in N
    for (int i = 0; i < 3; ++i)
      v[k][i] = tri[k].scaled[i] * (n.denominator() / tri[k].denominator);
  }
  const auto& a = v[0];
  const auto& b = v[1];
  const auto& c = v[2];
  i128 det = i128(a[0]) * (i128(b[1]) * c[2] - i128(b[2]) * c[1]) -
             i128(a[1]) * (i128(b[0]) * c[2] - i128(b[2]) * c[0]) +
             i128(a[2]) * (i128(b[0]) * c[1] - i128(b[1]) * c[0]);
  if (det < 0)
    det = -det;
  // det(w) = det(scaled) / d^3 must equal 1/|G'|
  i128 d = n.denominator();
  return det * i128(n.index()) == d * d * d;
}

} // namespace mckay
