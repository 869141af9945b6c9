#include "mckay/spec_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mckay/error.hpp"

namespace mckay {

namespace {

using nlohmann::json;

MonomialElement parse_generator(const json& g, const std::string& where) {
  if (!g.is_object())
    fail(Errc::Parse, where + ": expected an object with \"perm\" and \"phases\"");
  for (const auto& [k, v] : g.items())
    if (k != "perm" && k != "phases")
      fail(Errc::Parse, where + ": unknown field \"" + k + "\"");
  if (!g.contains("perm") || !g.contains("phases"))
    fail(Errc::Parse, where + ": needs both \"perm\" and \"phases\"");

  const json& perm = g.at("perm");
  if (!perm.is_array() || perm.size() != 3)
    fail(Errc::Parse, where + ".perm: expected an array of 3 integers");
  int img[3];
  for (int i = 0; i < 3; ++i) {
    if (!perm[i].is_number_integer())
      fail(Errc::Parse, where + ".perm: expected an array of 3 integers");
    img[i] = perm[i].get<int>();
  }
  Perm3 p;
  try {
    p = Perm3::from_image(img[0], img[1], img[2]);
  } catch (const Error&) {
    fail(Errc::Parse, where + ".perm: not a permutation of 0,1,2");
  }

  const json& phases = g.at("phases");
  if (!phases.is_array() || phases.size() != 3)
    fail(Errc::Parse, where + ".phases: expected an array of 3 fraction strings");
  std::array<Rat, 3> ph;
  for (int i = 0; i < 3; ++i) {
    if (!phases[i].is_string())
      fail(Errc::Parse, where + ".phases: expected fraction strings like \"1/3\"");
    try {
      ph[i] = Rat::parse(phases[i].get<std::string>());
    } catch (const Error& e) {
      fail(Errc::Parse, where + ".phases[" + std::to_string(i) + "]: " + e.what());
    }
  }
  MonomialElement e(p, ph);
  if (determinant_phase(e) != 0)
    fail(Errc::NotSpecialLinear, where + ": determinant is not 1 (element " + e.str() + ")");
  return e;
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::Parse, std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    fail(Errc::Parse, "spec must be a JSON object");

  const bool by_case = j.contains("case");
  const bool by_gens = j.contains("generators");
  if (by_case == by_gens)
    fail(Errc::Parse, "spec needs exactly one of \"case\" or \"generators\"");
  for (const auto& [k, v] : j.items()) {
    bool known = by_case ? (k == "case" || k == "r") : k == "generators";
    if (!known)
      fail(Errc::Parse, "unknown field \"" + k + "\"");
  }

  if (by_case) {
    if (!j.at("case").is_string())
      fail(Errc::Parse, "field \"case\" must be one of \"I\", \"II\", \"III\", \"IV\", \"V\"");
    Case kind = parse_case(j.at("case").get<std::string>());
    if (kind == Case::Abelian)
      fail(Errc::Parse, "field \"case\" must be one of \"I\", \"II\", \"III\", \"IV\", \"V\"");
    int r = 1;
    if (j.contains("r")) {
      const json& rv = j.at("r");
      if (!rv.is_number_integer() || rv.get<std::int64_t>() > 1'000'000 ||
          rv.get<std::int64_t>() < -1'000'000)
        fail(Errc::Parse, "field \"r\" must be an integer");
      r = rv.get<int>();
    } else if (kind != Case::V) {
      fail(Errc::Parse, "field \"r\" is required for case " + std::string(case_name(kind)));
    }
    return standard_group(kind, r);
  }

  const json& gens = j.at("generators");
  if (!gens.is_array())
    fail(Errc::Parse, "field \"generators\" must be an array");
  GroupSpec spec;
  for (std::size_t i = 0; i < gens.size(); ++i)
    spec.generators.push_back(parse_generator(gens[i], "generators[" + std::to_string(i) + "]"));
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(Errc::Parse, "cannot read spec file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str());
}

std::string group_spec_json(const GroupSpec& spec) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& e : spec.generators) {
    nlohmann::ordered_json g;
    g["perm"] = {e.perm(0), e.perm(1), e.perm(2)};
    g["phases"] = {e.phases[0].str(), e.phases[1].str(), e.phases[2].str()};
    gens.push_back(g);
  }
  nlohmann::ordered_json j;
  j["generators"] = gens;
  return j.dump() + "\n";
}

} // namespace mckay
