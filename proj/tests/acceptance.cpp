// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
// usage: acceptance <path-to-mckay> [work-dir]

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/junior_fan.hpp"
#include "mckay/mckay_verify.hpp"

using namespace mckay;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 10)
        failures.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string label(Case c, int r) {
  return std::string(case_name(c)) + " r=" + std::to_string(r);
}

// The swept families: I and II for r = 1..40, III and IV for r up to 31
// skipping multiples of 3, V once.
std::vector<std::pair<Case, std::vector<int>>> swept_families() {
  std::vector<int> all, coprime;
  for (int r = 1; r <= 40; ++r)
    all.push_back(r);
  for (int r = 1; r <= 31; ++r)
    if (r % 3 != 0)
      coprime.push_back(r);
  return {{Case::I, all}, {Case::II, all}, {Case::III, coprime}, {Case::IV, coprime},
          {Case::V, {1}}};
}

struct SweptGroup {
  Case kind;
  int r;
  FiniteMonomialGroup group;
};

std::vector<SweptGroup> g_groups;

Outcome criterion_sweep() {
  Outcome out;
  auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& [kind, rs] : swept_families()) {
    SweepTable table = sweep(kind, rs);
    out.expect(table.rows.size() == rs.size(), std::string(case_name(kind)) + ": row count");
    for (const auto& row : table.rows) {
      std::string where = label(kind, row.tag.r);
      if (!row.report) {
        out.expect(false, where + ": " + row.message);
        continue;
      }
      const auto& rep = *row.report;
      std::int64_t v = rep.chi_formula;
      out.expect(rep.chi_geometric == v && rep.classes_formula == v &&
                     rep.classes_bruteforce == v && rep.orbifold_euler == v && rep.verdict,
                 where + ": counts disagree");
      ++rows;
    }
  }
  double dt = seconds_since(t0);
  out.expect(dt < 60.0, "runtime " + fmt_seconds(dt) + " exceeds 60s");
  out.note = std::to_string(rows) + " groups, " + fmt_seconds(dt);

  for (const auto& [kind, rs] : swept_families())
    for (int r : rs)
      g_groups.push_back({kind, r, closure(standard_group(kind, r))});
  return out;
}

Outcome criterion_pinned() {
  Outcome out;
  auto iv = verify(closure(standard_group(Case::IV, 1)));
  out.expect(iv.chi_geometric == 9 && iv.classes_bruteforce == 9 && iv.chi_formula == 9 &&
                 iv.classes_formula == 9,
             "IV r=1 is not 9 = 9");
  auto v = verify(closure(standard_group(Case::V, 1)));
  out.expect(v.chi_geometric == 6 && v.classes_bruteforce == 6 && v.chi_formula == 6 &&
                 v.classes_formula == 6,
             "V is not 6 = 6");

  // Case I: the swap fixes k points on the resolution of C^3/G', k = 1 for
  // odd r and 2 for even r, and the Euler number is (r - k)/2 + 2k.
  for (int r = 2; r <= 40; ++r) {
    auto g = closure(standard_group(Case::I, r));
    auto res = resolve(g);
    auto k = fixed_locus(res.triangulation, res.symmetry, CaseTag{Case::I, r})
                 .isolated_points_total;
    std::int64_t want_k = r % 2 ? 1 : 2;
    out.expect(k == want_k, label(Case::I, r) + ": k = " + std::to_string(k));
    std::int64_t branch = (r - want_k) / 2 + 2 * want_k;
    out.expect(chi_geometric(res, CaseTag{Case::I, r}) == branch &&
                   class_count_formula(Case::I, r) == branch,
               label(Case::I, r) + ": parity branch");
  }
  out.note = "IV r=1 -> 9, V -> 6, I parity for r = 2..40";
  return out;
}

// Independent checks of a triangulation, without verify_triangulation.
void check_triangulation(Outcome& out, const std::string& where,
                         const FiniteMonomialGroup& gprime, const EquivariantResolution& res) {
  const Triangulation& t = res.triangulation;
  const std::int64_t d = t.denominator;

  out.expect(res.check.ok, where + ": verifier reports " + res.check.property);
  out.expect(t.triangles.size() == gprime.order(),
             where + ": " + std::to_string(t.triangles.size()) + " triangles, |G'| = " +
                 std::to_string(gprime.order()));

  // vertex set = junior points plus corners
  std::set<LatticePoint> vertices(t.vertices.begin(), t.vertices.end());
  std::set<LatticePoint> expected;
  for (const auto& p : res.junior.all_points())
    expected.insert(p);
  out.expect(vertices == expected, where + ": vertex set differs from junior points + corners");
  std::set<LatticePoint> in_simplex;
  for (const auto& p : delta_lattice_points(res.lattice))
    in_simplex.insert(p);
  out.expect(in_simplex == expected, where + ": lattice points of the simplex differ");

  for (const auto& v : t.vertices)
    out.expect(v.denominator == d && v.scaled[0] + v.scaled[1] + v.scaled[2] == d &&
                   v.scaled[0] >= 0 && v.scaled[1] >= 0 && v.scaled[2] >= 0 &&
                   res.lattice.contains(v.coords()),
               where + ": vertex " + v.str() + " is not junior");

  // basic: |det| of the three generators equals d^3 / |G'| in scaled units
  const __int128 target = static_cast<__int128>(d) * d * d / static_cast<__int128>(gprime.order());
  for (const auto& tri : t.triangles) {
    const auto& a = t.vertices[tri[0]].scaled;
    const auto& b = t.vertices[tri[1]].scaled;
    const auto& c = t.vertices[tri[2]].scaled;
    __int128 det = static_cast<__int128>(a[0]) * (b[1] * c[2] - b[2] * c[1]) -
                   static_cast<__int128>(a[1]) * (b[0] * c[2] - b[2] * c[0]) +
                   static_cast<__int128>(a[2]) * (b[0] * c[1] - b[1] * c[0]);
    out.expect(det == target || det == -target, where + ": non-basic triangle");
    std::array<LatticePoint, 3> pts{t.vertices[tri[0]], t.vertices[tri[1]], t.vertices[tri[2]]};
    out.expect(is_basic(pts, res.lattice), where + ": is_basic disagrees");
  }

  // W-invariance as a set of vertex triples
  std::set<std::set<LatticePoint>> cells;
  for (const auto& tri : t.triangles)
    cells.insert({t.vertices[tri[0]], t.vertices[tri[1]], t.vertices[tri[2]]});
  for (const auto& p : res.symmetry.perms)
    for (const auto& cell : cells) {
      std::set<LatticePoint> image;
      for (const auto& v : cell)
        image.insert(act(p, v));
      out.expect(cells.count(image) == 1, where + ": not invariant under " + p.str());
    }
}

Outcome criterion_triangulations() {
  Outcome out;
  auto t0 = Clock::now();
  std::size_t n = 0;
  for (const auto& sg : g_groups) {
    if (sg.r > 15)
      continue;
    auto gprime = diagonal_subgroup(sg.group);
    check_triangulation(out, label(sg.kind, sg.r), gprime, resolve(sg.group));
    ++n;
  }
  double dt = seconds_since(t0);
  out.expect(dt < 30.0, "runtime " + fmt_seconds(dt) + " exceeds 30s");
  out.note = std::to_string(n) + " triangulations, " + fmt_seconds(dt);
  return out;
}

std::int64_t expected_fixed_points(Case kind, int r) {
  switch (kind) {
    case Case::I: return r % 2 ? 1 : 2;
    case Case::II: return r;
    case Case::III: return 3 * r - 2;
    case Case::IV: return 3 + 9 * (r - 1);
    case Case::V: return 3;
    default: return -1;
  }
}

Outcome criterion_fixed_locus() {
  Outcome out;
  for (const auto& sg : g_groups) {
    auto res = resolve(sg.group);
    auto got = fixed_locus(res.triangulation, res.symmetry, CaseTag{sg.kind, sg.r})
                   .isolated_points_total;
    out.expect(got == expected_fixed_points(sg.kind, sg.r),
               label(sg.kind, sg.r) + ": " + std::to_string(got) + " fixed points");
  }
  out.note = std::to_string(g_groups.size()) + " groups";
  return out;
}

void check_identities(Outcome& out, const std::string& where, const FiniteMonomialGroup& g) {
  auto classes = conjugacy_classes(g).class_count();
  out.expect(classes * g.order() == commuting_pair_count(g), where + ": Burnside");

  auto gprime = diagonal_subgroup(g);
  auto j = junior_set(gprime);
  out.expect(gprime.order() - 1 == 2 * j.phi1.size() + j.phi2.size(),
             where + ": junior identity");

  for (const auto& e : gprime.elements()) {
    if (e.phases[0] == 0 || e.phases[1] == 0 || e.phases[2] == 0)
      continue;
    out.expect(age(e) + age(inverse(e)) == 3, where + ": age pairing for " + e.str());
  }
}

Outcome criterion_identities() {
  Outcome out;
  std::size_t n = 0;
  for (const auto& sg : g_groups) {
    check_identities(out, label(sg.kind, sg.r), sg.group);
    ++n;
  }
  // random diagonal groups, some extended by S or by S and T
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int m = std::uniform_int_distribution<int>(2, 24)(rng);
    std::uniform_int_distribution<int> ex(0, m - 1);
    std::vector<MonomialElement> gens;
    for (int k = std::uniform_int_distribution<int>(1, 2)(rng); k > 0; --k) {
      int a = ex(rng), b = ex(rng);
      gens.push_back(MonomialElement::diagonal(m, a, b, (2 * m - a - b) % m));
    }
    int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    if (extra >= 1)
      gens.push_back(generator_S());
    if (extra == 2)
      gens.push_back(generator_T());
    auto g = FiniteMonomialGroup::generate(gens);
    check_identities(out, "random #" + std::to_string(trial) + " (order " +
                              std::to_string(g.order()) + ")",
                     g);
    ++n;
  }
  out.note = std::to_string(n) + " groups";
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_determinism(const std::string& binary, const fs::path& work) {
  Outcome out;
  const std::vector<std::pair<std::string, std::string>> specs = {
      {"iv2", R"({"case":"IV","r":2})"},
      {"iii5", R"({"case":"III","r":5})"},
      {"v", R"({"case":"V"})"},
      {"i12", R"({"case":"I","r":12})"},
  };
  std::size_t compared = 0;
  for (const auto& [name, body] : specs) {
    fs::path spec = work / (name + ".json");
    std::ofstream(spec, std::ios::binary) << body;
    const std::string quoted_bin = "\"" + binary + "\"";
    const std::string quoted_spec = "\"" + spec.string() + "\"";

    std::string analyze[2];
    for (int run = 0; run < 2; ++run) {
      fs::path o = work / (name + ".analyze." + std::to_string(run));
      int rc = run_command(quoted_bin + " analyze " + quoted_spec + " > \"" + o.string() + "\"");
      out.expect(rc == 0, name + ": analyze exit " + std::to_string(rc));
      analyze[run] = slurp(o);
    }
    out.expect(!analyze[0].empty() && analyze[0] == analyze[1], name + ": analyze output differs");
    ++compared;

    for (const char* format : {"json", "svg"}) {
      std::string bytes[2];
      for (int run = 0; run < 2; ++run) {
        fs::path o = work / (name + "." + std::to_string(run) + "." + format);
        int rc = run_command(quoted_bin + " triangulate " + quoted_spec + " --format " + format +
                             " --out \"" + o.string() + "\" > /dev/null");
        out.expect(rc == 0, name + ": triangulate exit " + std::to_string(rc));
        bytes[run] = slurp(o);
      }
      out.expect(!bytes[0].empty() && bytes[0] == bytes[1],
                 name + ": " + format + " output differs");
      ++compared;
    }
  }
  out.note = std::to_string(compared) + " output pairs compared";
  return out;
}

bool report(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s (%s)\n", out.ok ? "PASS" : "FAIL", number, title.c_str(),
              out.note.c_str());
  for (const auto& f : out.failures)
    std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return out.ok;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-mckay> [work-dir]\n");
    return 2;
  }
  const std::string binary = argv[1];
  fs::path work = argc > 2 ? fs::path(argv[2])
                           : fs::temp_directory_path() /
                                 ("mckay_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(work);

  bool all = true;
  all &= report(1, "identity sweep over the five families", criterion_sweep);
  all &= report(2, "pinned values", criterion_pinned);
  all &= report(3, "triangulation properties for r <= 15", criterion_triangulations);
  all &= report(4, "fixed-locus counts", criterion_fixed_locus);
  all &= report(5, "structural identities", criterion_identities);
  all &= report(6, "byte-identical repeated CLI output",
                [&] { return criterion_determinism(binary, work); });
  return all ? 0 : 1;
}
