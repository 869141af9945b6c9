#ifndef MCKAY_JUNIOR_FAN_HPP_
#define MCKAY_JUNIOR_FAN_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

using Scaled = std::array<std::int64_t, 3>;

// A point (a/d, b/d, c/d) stored by its numerators over the common denominator d.
struct LatticePoint {
  Scaled scaled{};
  std::int64_t denominator = 1;

  Rat coord(int i) const { return Rat(scaled[i], denominator); }
  std::array<Rat, 3> coords() const { return {coord(0), coord(1), coord(2)}; }
  bool is_corner() const;
  bool has_zero_coord() const {
    return scaled[0] == 0 || scaled[1] == 0 || scaled[2] == 0;
  }
  std::string str() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// N = Z^3 + sum of the phase vectors of a diagonal group.
class Overlattice {
public:
  /// Errc::NotDiagonal if gprime has an element with nontrivial permutation.
  static Overlattice of(const FiniteMonomialGroup& gprime);

  std::int64_t denominator() const { return denom_; }
  /// [N : Z^3].
  std::size_t index() const { return residues_.size(); }
  bool contains(const std::array<Rat, 3>& p) const;
  /// Membership of (a/d, b/d, c/d) for d = denominator().
  bool contains_scaled(const Scaled& a) const;
  /// Phase vectors scaled by d, each coordinate in [0, d); sorted.
  const std::vector<Scaled>& residues() const { return residues_; }

private:
  std::int64_t denom_ = 1;
  std::vector<Scaled> residues_;
  std::unordered_set<std::uint64_t> keys_;
  std::uint64_t key(const Scaled& a) const;
};

struct JuniorSet {
  std::int64_t denominator = 1;
  std::vector<LatticePoint> phi1;  // all coordinates nonzero
  std::vector<LatticePoint> phi2;  // some coordinate zero
  std::array<LatticePoint, 3> corners;

  std::size_t size() const { return phi1.size() + phi2.size(); }
  /// Corners, phi1 and phi2 together, sorted.
  std::vector<LatticePoint> all_points() const;
};

JuniorSet junior_set(const FiniteMonomialGroup& gprime);

/// Points of the junior simplex lying in N, sorted.
std::vector<LatticePoint> delta_lattice_points(const Overlattice& n);

// The permutation image W of a monomial group acting on N by coordinate
// permutation, with one monomial element of G over each permutation.
struct SymmetryAction {
  std::vector<Perm3> perms;              // includes identity
  std::vector<MonomialElement> lifts;    // lifts[i] lies over perms[i]

  static SymmetryAction trivial();
  /// W = perm image of g, lifts = least element over each permutation.
  static SymmetryAction of_group(const FiniteMonomialGroup& g);
  /// Permutations only; lifts get zero phases.
  static SymmetryAction of_perms(std::vector<Perm3> perms);

  std::size_t order() const { return perms.size(); }
};

/// Image of a point under the coordinate permutation: w_i = v_{p(i)}.
Scaled act(const Perm3& p, const Scaled& v);
LatticePoint act(const Perm3& p, const LatticePoint& v);

struct Triangulation {
  std::int64_t denominator = 1;
  std::vector<LatticePoint> vertices;                 // sorted
  std::vector<std::array<std::size_t, 3>> triangles;  // counterclockwise, sorted

  std::vector<std::array<std::size_t, 2>> edges() const;
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Puts vertices and triangles into canonical order (vertices sorted,
/// each triangle counterclockwise starting at its least index, list sorted).
Triangulation canonical(std::int64_t denominator, std::vector<LatticePoint> vertices,
                        std::vector<std::array<std::size_t, 3>> triangles);

/// W-invariant unimodular triangulation of the junior simplex with vertex set
/// Phi plus corners. Errc::SymmetryBroken if W does not preserve Phi;
/// Errc::NoEquivariantTriangulation if a cocircular cell admits no invariant split.
Triangulation symmetric_triangulation(const JuniorSet& j, const SymmetryAction& w);

bool is_basic(const std::array<LatticePoint, 3>& tri, const Overlattice& n);

struct TriangulationReport {
  bool ok = true;
  std::string property;                // first violated property, empty when ok
  std::string detail;
  std::vector<std::size_t> witness;    // triangle (or vertex) indices
  std::size_t triangle_count = 0;
};

/// Checks, in order: vertex-set, orientation, coverage, basic, lattice-empty,
/// triangle-count, equivariance, junior.
TriangulationReport verify_triangulation(const Triangulation& t, const Overlattice& n,
                                         const SymmetryAction& w);

struct FixedLocusSummary {
  std::int64_t isolated_points_total = 0;
  std::int64_t transposition_points = 0;
  std::int64_t full_points = 0;
  std::int64_t fixed_curve_count = 0;
};

/// Euler characteristic of the fixed set of the lift of `p` on the toric
/// resolution, summed over torus orbits of invariant cells.
std::int64_t fixed_set_euler(const Triangulation& t, const Perm3& p);

FixedLocusSummary fixed_locus(const Triangulation& t, const SymmetryAction& w,
                              const CaseTag& tag);

/// Stabilizer order 2 -> 2, order 6 -> 3; Errc::InvalidParameter otherwise.
int local_resolution_euler(int stabilizer_order);

enum class GeometryFormat { Json, Svg };
/// "json" / "svg"; Errc::UnsupportedFormat otherwise.
GeometryFormat parse_geometry_format(std::string_view name);

std::string export_geometry(const Triangulation& t, GeometryFormat format,
                            const SymmetryAction& w = SymmetryAction::trivial());
/// Inverse of the JSON export; Errc::Parse on malformed input.
Triangulation import_geometry_json(std::string_view text);

} // namespace mckay

#endif
