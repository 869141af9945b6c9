// mckay: analyze monomial subgroups of SL(3,C), sweep the case families,
// and export equivariant junior-simplex triangulations.
//
// Exit codes: 0 verified, 1 mismatch or failed verification, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/junior_fan.hpp"
#include "mckay/mckay_verify.hpp"
#include "mckay/spec_file.hpp"

using namespace mckay;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::InvalidParameter:
    case Errc::NotSpecialLinear:
    case Errc::CapExceeded:
    case Errc::UnsupportedCase:
    case Errc::UnsupportedFormat:
    case Errc::NotDiagonal:
    case Errc::SymmetryBroken:
      return kInvalid;
    default:
      return kFailed;
  }
}

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return exit_code_for(e.code());
}

int cmd_analyze(const std::string& path, bool pretty) {
  GroupSpec spec = load_group_spec(path);
  FiniteMonomialGroup g = closure(spec);
  McKayReport rep = spec.label ? verify(g, *spec.label) : verify(g);
  if (pretty)
    std::cout << report_text(rep);
  else
    std::cout << report_json(rep, 2) << "\n";
  return rep.verdict ? kOk : kFailed;
}

std::vector<int> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d{1,6})\.\.(\d{1,6}))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    fail(Errc::Parse, "range must look like a..b, got \"" + text + "\"");
  int a = std::stoi(m[1]), b = std::stoi(m[2]);
  if (a < 1 || a > b)
    fail(Errc::Parse, "range a..b needs 1 <= a <= b, got \"" + text + "\"");
  std::vector<int> out;
  for (int r = a; r <= b; ++r)
    out.push_back(r);
  return out;
}

int cmd_sweep(const std::string& case_text, const std::string& range, bool ndjson) {
  Case kind = parse_case(case_text);
  if (kind == Case::Abelian)
    fail(Errc::Parse, "sweep needs one of the cases I, II, III, IV, V");
  std::vector<int> rs = parse_range(range);
  SweepTable table = sweep(kind, rs);

  if (!ndjson)
    std::printf("%-4s %4s %7s %6s %6s %6s %8s %8s %6s  %s\n", "case", "r", "|G|", "|G'|",
                "chi_f", "chi_g", "cls_f", "cls_bf", "orb", "verdict");
  for (const auto& row : table.rows) {
    std::string name(case_name(row.tag.kind));
    if (row.report) {
      const auto& p = *row.report;
      if (ndjson) {
        std::cout << report_json(p) << "\n";
      } else {
        std::printf("%-4s %4d %7llu %6llu %6lld %6lld %8lld %8lld %6lld  %s\n", name.c_str(),
                    row.tag.r, static_cast<unsigned long long>(p.group_order),
                    static_cast<unsigned long long>(p.diagonal_order),
                    static_cast<long long>(p.chi_formula),
                    static_cast<long long>(p.chi_geometric),
                    static_cast<long long>(p.classes_formula),
                    static_cast<long long>(p.classes_bruteforce),
                    static_cast<long long>(p.orbifold_euler), p.verdict ? "ok" : "FAIL");
      }
      continue;
    }
    const char* status = row.skipped() ? "skipped" : "error";
    if (ndjson) {
      nlohmann::ordered_json j;
      j["case"] = name;
      j["r"] = row.tag.r;
      j[status] = row.message;
      std::cout << j.dump() << "\n";
    } else {
      std::printf("%-4s %4d  %s: %s\n", name.c_str(), row.tag.r, status, row.message.c_str());
    }
  }
  return table.ok() ? kOk : kFailed;
}

int cmd_triangulate(const std::string& path, const std::string& format_name,
                    const std::string& out_path) {
  GeometryFormat format = parse_geometry_format(format_name);
  GroupSpec spec = load_group_spec(path);
  FiniteMonomialGroup g = closure(spec);
  EquivariantResolution res = resolve(g);
  const auto& check = res.check;

  std::printf("triangles    %zu (|G'| = %zu)\n", check.triangle_count, res.lattice.index());
  std::printf("vertices     %zu (phi1 %zu, phi2 %zu, corners 3)\n",
              res.triangulation.vertices.size(), res.junior.phi1.size(), res.junior.phi2.size());
  std::printf("|W|          %zu\n", res.symmetry.order());
  if (!check.ok) {
    std::printf("verification FAILED: %s (%s)\n", check.property.c_str(), check.detail.c_str());
    return kFailed;
  }
  std::printf("basic        yes\nequivariant  yes\n");

  std::string bytes = export_geometry(res.triangulation, format, res.symmetry);
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << bytes))
    fail(Errc::Parse, "cannot write " + out_path);
  std::printf("wrote        %s\n", out_path.c_str());
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay correspondence checks for monomial subgroups of SL(3,C)"};
  app.require_subcommand(1);

  std::string spec_path;
  bool pretty = false;
  auto* analyze = app.add_subcommand("analyze", "Verify chi = #classes for one group");
  analyze->add_option("spec", spec_path, "Group spec JSON file")->required();
  analyze->add_flag("--pretty", pretty, "Human-readable table instead of JSON");

  std::string case_text, range;
  bool ndjson = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify a case family over a range of r");
  sweep_cmd->add_option("case", case_text, "I, II, III, IV or V")->required();
  sweep_cmd->add_option("range", range, "Range a..b of r values")->required();
  sweep_cmd->add_flag("--ndjson", ndjson, "One JSON report per line");

  std::string format = "json", out_path;
  auto* tri = app.add_subcommand("triangulate", "Export the equivariant triangulation");
  tri->add_option("spec", spec_path, "Group spec JSON file")->required();
  tri->add_option("--format", format, "json or svg");
  tri->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze)
      return cmd_analyze(spec_path, pretty);
    if (*sweep_cmd)
      return cmd_sweep(case_text, range, ndjson);
    if (*tri)
      return cmd_triangulate(spec_path, format, out_path);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}
