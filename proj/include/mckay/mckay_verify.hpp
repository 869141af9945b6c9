#ifndef MCKAY_MCKAY_VERIFY_HPP_
#define MCKAY_MCKAY_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/junior_fan.hpp"

namespace mckay {

struct McKayReport {
  CaseTag tag;
  std::uint64_t group_order = 0;
  std::uint64_t diagonal_order = 0;
  std::int64_t chi_formula = 0;
  std::int64_t chi_geometric = 0;
  std::int64_t classes_formula = 0;
  std::int64_t classes_bruteforce = 0;
  std::int64_t orbifold_euler = 0;
  bool verdict = false;
};

/// Closed-form Euler number of the crepant resolution. Errc::InvalidParameter
/// for r < 1, 3 | r in cases III/IV, r != 1 in case V, or an unsupported case.
/// For Abelian tags r is the group order.
std::int64_t chi_crepant_formula(Case kind, int r);
/// Closed-form number of conjugacy classes (same preconditions).
std::int64_t class_count_formula(Case kind, int r);

/// Everything built on the way to the geometric Euler number.
struct EquivariantResolution {
  FiniteMonomialGroup diagonal;
  Overlattice lattice;
  JuniorSet junior;
  SymmetryAction symmetry;
  Triangulation triangulation;
  TriangulationReport check;
};

/// Diagonal subgroup, overlattice, junior points and the W-invariant
/// triangulation (W = permutation image of g), verified.
EquivariantResolution resolve(const FiniteMonomialGroup& g);

/// Euler number assembled from the triangulation and the fixed-point strata.
/// Errc::UnsupportedCase for unsupported groups; Errc::VerificationFailed if
/// the triangulation fails its checks; Errc::Arithmetic on an inexact division.
std::int64_t chi_geometric(const FiniteMonomialGroup& g);
std::int64_t chi_geometric(const FiniteMonomialGroup& g, const CaseTag& tag);
std::int64_t chi_geometric(const EquivariantResolution& res, const CaseTag& tag);

/// Classifies g and fills in every count.
McKayReport verify(const FiniteMonomialGroup& g);
/// As above with an explicit tag; Errc::InvalidParameter unless g is exactly the
/// standard group of that tag (or an abelian group of order r for Abelian).
McKayReport verify(const FiniteMonomialGroup& g, const CaseTag& tag);

struct SweepRow {
  CaseTag tag;
  std::optional<McKayReport> report;
  std::optional<Errc> error;
  std::string message;

  /// Rows rejected for an invalid parameter (e.g. 3 | r) are skipped, not failed.
  bool skipped() const { return error == Errc::InvalidParameter; }
  bool passed() const { return report && report->verdict; }
};

struct SweepTable {
  std::vector<SweepRow> rows;
  bool ok() const;
};

/// One row per r, in the given order; per-row errors are collected.
SweepTable sweep(Case kind, const std::vector<int>& r_values);

/// Keys in the fixed order case, r, group_order, ..., verdict.
/// indent < 0 gives a single line.
std::string report_json(const McKayReport& report, int indent = -1);
std::string report_text(const McKayReport& report);

} // namespace mckay

#endif
