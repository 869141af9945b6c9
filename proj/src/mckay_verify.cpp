#include "mckay/mckay_verify.hpp"

#include <cstdio>

#include <json.hpp>

namespace mckay {

namespace {

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0)
    fail(Errc::Arithmetic, std::string(what) + ": " + std::to_string(a) +
                               " is not divisible by " + std::to_string(b));
  return a / b;
}

void check_parameter(Case kind, int r) {
  if (r < 1)
    fail(Errc::InvalidParameter, "r must be at least 1");
  if ((kind == Case::III || kind == Case::IV) && r % 3 == 0)
    fail(Errc::InvalidParameter, "r must not be divisible by 3");
  if (kind == Case::V && r != 1)
    fail(Errc::InvalidParameter, "case V takes no r parameter (r must be 1)");
  if (kind == Case::Unsupported)
    fail(Errc::InvalidParameter, "no formula for unsupported groups");
}

} // namespace

std::int64_t chi_crepant_formula(Case kind, int r) {
  check_parameter(kind, r);
  const std::int64_t n = r;
  switch (kind) {
    case Case::Abelian: return n;
    case Case::I: {
      std::int64_t k = n % 2 == 1 ? 1 : 2;
      return exact_div(n - k, 2, "case I") + 2 * k;
    }
    case Case::II: return exact_div(n * n - n, 2, "case II") + 2 * n;
    case Case::III:
      return exact_div(n * n - 3 * (n - 1) - 1, 6, "case III") + 3 + 2 * (n - 1);
    case Case::IV: return exact_div(n * n - 3 * n + 2, 2, "case IV") + 6 * n + 3;
    case Case::V: return 6;
    default: break;
  }
  fail(Errc::InvalidParameter, "no formula for unsupported groups");
}

std::int64_t class_count_formula(Case kind, int r) {
  check_parameter(kind, r);
  const std::int64_t n = r;
  switch (kind) {
    case Case::I:
      // n = 2m+1 gives m+2 classes, n = 2m gives m+3
      return n % 2 == 1 ? (n - 1) / 2 + 2 : n / 2 + 3;
    case Case::III:
      return 2 * (n - 1) + exact_div(n * n - 3 * (n - 1) - 1, 6, "case III") + 3;
    default:
      return chi_crepant_formula(kind, r);
  }
}

EquivariantResolution resolve(const FiniteMonomialGroup& g) {
  FiniteMonomialGroup gp = diagonal_subgroup(g);
  Overlattice lattice = Overlattice::of(gp);
  JuniorSet junior = junior_set(gp);
  SymmetryAction w = SymmetryAction::of_group(g);
  Triangulation t = symmetric_triangulation(junior, w);
  TriangulationReport check = verify_triangulation(t, lattice, w);
  return EquivariantResolution{std::move(gp), std::move(lattice), std::move(junior),
                               std::move(w), std::move(t), std::move(check)};
}

std::int64_t chi_geometric(const EquivariantResolution& res, const CaseTag& tag) {
  if (tag.kind == Case::Unsupported)
    fail(Errc::UnsupportedCase, "geometric Euler number needs a case I-V or abelian group");
  if (!res.check.ok)
    fail(Errc::VerificationFailed,
         "triangulation fails " + res.check.property + ": " + res.check.detail);
  const auto chi_cover = static_cast<std::int64_t>(res.triangulation.triangles.size());
  const auto w = static_cast<std::int64_t>(res.symmetry.order());
  if (w == 1)
    return chi_cover;

  FixedLocusSummary f = fixed_locus(res.triangulation, res.symmetry, tag);
  const std::int64_t p2 = f.transposition_points, p6 = f.full_points;
  std::int64_t free_part = exact_div(chi_cover - p2 - p6, w, "free orbits");
  if (w == 2)
    return free_part + p2 * local_resolution_euler(2);
  return free_part + exact_div(p2, 3, "transposition orbits") * local_resolution_euler(2) +
         p6 * local_resolution_euler(6);
}

std::int64_t chi_geometric(const FiniteMonomialGroup& g, const CaseTag& tag) {
  return chi_geometric(resolve(g), tag);
}

std::int64_t chi_geometric(const FiniteMonomialGroup& g) { return chi_geometric(g, classify(g)); }

McKayReport verify(const FiniteMonomialGroup& g, const CaseTag& tag) {
  switch (tag.kind) {
    case Case::Unsupported:
      fail(Errc::UnsupportedCase, "group is not of monomial type I-V");
    case Case::Abelian:
      if (g.perm_image().size() != 1 || static_cast<std::size_t>(tag.r) != g.order())
        fail(Errc::InvalidParameter, "abelian tag needs a diagonal group of order r");
      break;
    default: {
      FiniteMonomialGroup standard = closure(standard_group(tag.kind, tag.r));
      if (standard.elements() != g.elements())
        fail(Errc::InvalidParameter, "group differs from the standard group of case " +
                                         std::string(case_name(tag.kind)) +
                                         " with r = " + std::to_string(tag.r));
    }
  }
  McKayReport rep;
  rep.tag = tag;
  rep.group_order = g.order();
  rep.diagonal_order = g.diagonal_order();
  rep.chi_formula = chi_crepant_formula(tag.kind, tag.r);
  rep.classes_formula = class_count_formula(tag.kind, tag.r);
  rep.chi_geometric = chi_geometric(g, tag);
  rep.classes_bruteforce = static_cast<std::int64_t>(conjugacy_classes(g).class_count());
  rep.orbifold_euler = orbifold_euler(g);
  const std::int64_t v = rep.chi_formula;
  rep.verdict = rep.chi_geometric == v && rep.classes_formula == v &&
                rep.classes_bruteforce == v && rep.orbifold_euler == v;
  return rep;
}

McKayReport verify(const FiniteMonomialGroup& g) {
  CaseTag tag = classify(g);
  if (tag.kind == Case::Unsupported)
    fail(Errc::UnsupportedCase, "group is not of monomial type I-V");
  return verify(g, tag);
}

bool SweepTable::ok() const {
  for (const auto& row : rows)
    if (!row.passed() && !row.skipped())
      return false;
  return true;
}

SweepTable sweep(Case kind, const std::vector<int>& r_values) {
  SweepTable table;
  for (int r : r_values) {
    SweepRow row;
    row.tag = CaseTag{kind, r};
    try {
      FiniteMonomialGroup g = closure(standard_group(kind, r));
      row.report = verify(g, row.tag);
    } catch (const Error& e) {
      row.error = e.code();
      row.message = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string report_json(const McKayReport& report, int indent) {
  nlohmann::ordered_json j;
  j["case"] = std::string(case_name(report.tag.kind));
  j["r"] = report.tag.r;
  j["group_order"] = report.group_order;
  j["diagonal_order"] = report.diagonal_order;
  j["chi_formula"] = report.chi_formula;
  j["chi_geometric"] = report.chi_geometric;
  j["classes_formula"] = report.classes_formula;
  j["classes_bruteforce"] = report.classes_bruteforce;
  j["orbifold_euler"] = report.orbifold_euler;
  j["verdict"] = report.verdict;
  return j.dump(indent);
}

std::string report_text(const McKayReport& report) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "case               %s\n"
                "r                  %d\n"
                "|G|                %llu\n"
                "|G'|               %llu\n"
                "chi (formula)      %lld\n"
                "chi (geometric)    %lld\n"
                "classes (formula)  %lld\n"
                "classes (counted)  %lld\n"
                "orbifold euler     %lld\n"
                "verdict            %s\n",
                std::string(case_name(report.tag.kind)).c_str(), report.tag.r,
                static_cast<unsigned long long>(report.group_order),
                static_cast<unsigned long long>(report.diagonal_order),
                static_cast<long long>(report.chi_formula),
                static_cast<long long>(report.chi_geometric),
                static_cast<long long>(report.classes_formula),
                static_cast<long long>(report.classes_bruteforce),
                static_cast<long long>(report.orbifold_euler),
                report.verdict ? "holds" : "FAILS");
  return buf;
}

} // namespace mckay
