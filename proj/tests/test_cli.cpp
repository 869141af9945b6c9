// Spec-file parsing plus end-to-end runs of the mckay binary, whose path is
// passed as the first command-line argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/junior_fan.hpp"
#include "mckay/spec_file.hpp"

using namespace mckay;
namespace fs = std::filesystem;

namespace {

std::string g_binary;
fs::path g_work;

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_spec(const std::string& name, const std::string& body) {
  fs::path p = g_work / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

Run run(const std::string& args) {
  fs::path out = g_work / "stdout.txt", err = g_work / "stderr.txt";
  std::string cmd = "\"" + g_binary + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                    err.string() + "\"";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mckay::Error");
  return Errc::Arithmetic;
}

} // namespace

TEST_CASE("spec parsing") {
  auto v = parse_group_spec(R"({"case":"V"})");
  REQUIRE(v.label);
  CHECK(*v.label == CaseTag{Case::V, 1});

  auto i = parse_group_spec(R"({"case":"I","r":5})");
  CHECK(i.generators.size() == 2);

  auto gens = parse_group_spec(
      R"({"generators":[{"perm":[0,2,1],"phases":["1/2","1/2","1/2"]},
                        {"perm":[0,1,2],"phases":["0","1/5","4/5"]}]})");
  CHECK(!gens.label);
  CHECK(gens.generators[0] == generator_S());
  CHECK(parse_group_spec(group_spec_json(gens)).generators == gens.generators);

  CHECK(code_of([] { parse_group_spec(R"({"case":"III","r":3})"); }) == Errc::InvalidParameter);
  CHECK(code_of([] { parse_group_spec(R"({"case":"VI","r":3})"); }) == Errc::Parse);
  CHECK(code_of([] { parse_group_spec(R"({"case":"I"})"); }) == Errc::Parse);
  CHECK(code_of([] { parse_group_spec(R"({"case":"I","r":"2"})"); }) == Errc::Parse);
  CHECK(code_of([] { parse_group_spec(R"({"case":"I","r":2,"generators":[]})"); }) ==
        Errc::Parse);
  CHECK(code_of([] { parse_group_spec(R"({})"); }) == Errc::Parse);
  CHECK(code_of([] { parse_group_spec(R"({"case":"I","rr":2})"); }) == Errc::Parse);
  CHECK(code_of([] {
          parse_group_spec(R"({"generators":[{"perm":[0,1,2],"phases":["1/2","0","0"]}]})");
        }) == Errc::NotSpecialLinear);
  CHECK(code_of([] {
          parse_group_spec(R"({"generators":[{"perm":[0,0,2],"phases":["0","0","0"]}]})");
        }) == Errc::Parse);
  CHECK(code_of([] {
          parse_group_spec(R"({"generators":[{"perm":[0,1,2],"phases":["a","0","0"]}]})");
        }) == Errc::Parse);
  CHECK(code_of([] { parse_group_spec("[1,2"); }) == Errc::Parse);
  CHECK(code_of([] { load_group_spec("/nonexistent/spec.json"); }) == Errc::Parse);

  try {
    parse_group_spec(R"({"generators":[{"perm":[0,1,2],"phases":["1/2","0","0"]}]})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("generators[0]") != std::string::npos);
  }
}

TEST_CASE("analyze") {
  auto v = run("analyze \"" + write_spec("v.json", R"({"case":"V"})").string() + "\"");
  CHECK(v.code == 0);
  CHECK(v.out.find("\"verdict\": true") != std::string::npos);
  CHECK(v.out.find("\"chi_geometric\": 6") != std::string::npos);

  auto bad = run("analyze \"" + write_spec("iii3.json", R"({"case":"III","r":3})").string() + "\"");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("r must not be divisible by 3") != std::string::npos);

  auto id = run("analyze \"" +
                write_spec("id.json", R"({"generators":[{"perm":[0,1,2],"phases":["0","0","0"]}]})")
                    .string() +
                "\"");
  CHECK(id.code == 0);
  CHECK(id.out.find("\"case\": \"abelian\"") != std::string::npos);
  CHECK(id.out.find("\"classes_bruteforce\": 1") != std::string::npos);

  auto pretty = run("analyze --pretty \"" + (g_work / "v.json").string() + "\"");
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("holds") != std::string::npos);

  CHECK(run("analyze \"" + (g_work / "missing.json").string() + "\"").code == 2);
  CHECK(run("analyze \"" + write_spec("junk.json", "{").string() + "\"").code == 2);
  auto tri = run("analyze \"" +
                 write_spec("t.json", R"({"generators":[{"perm":[1,2,0],"phases":["0","0","0"]}]})")
                     .string() +
                 "\"");
  CHECK(tri.code == 2);
}

TEST_CASE("sweep") {
  auto i = run("sweep I 1..10");
  CHECK(i.code == 0);
  std::size_t ok_rows = 0;
  for (std::size_t p = 0; (p = i.out.find("  ok\n", p)) != std::string::npos; ++p)
    ++ok_rows;
  CHECK(ok_rows == 10);

  auto iv = run("sweep IV 1..7 --ndjson");
  CHECK(iv.code == 0);
  std::size_t lines = 0, skipped = 0;
  std::istringstream in(iv.out);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    skipped += line.find("\"skipped\"") != std::string::npos;
  }
  CHECK(lines == 7);
  CHECK(skipped == 2);

  auto v = run("sweep V 1..1");
  CHECK(v.code == 0);
  CHECK(v.out.find("V       1       6") != std::string::npos);

  CHECK(run("sweep I 5..2").code == 2);
  CHECK(run("sweep I 1-4").code == 2);
  CHECK(run("sweep VII 1..2").code == 2);
  CHECK(run("sweep").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("triangulate") {
  auto iv1 = write_spec("iv1.json", R"({"case":"IV","r":1})");
  auto svg = g_work / "iv1.svg";
  auto r = run("triangulate \"" + iv1.string() + "\" --format svg --out \"" + svg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("triangles    3") != std::string::npos);
  std::string s = slurp(svg);
  CHECK(s.find("class=\"phi1\"") != std::string::npos);

  auto i4 = write_spec("i4.json", R"({"case":"I","r":4})");
  auto js = g_work / "i4.json.out";
  CHECK(run("triangulate \"" + i4.string() + "\" --format json --out \"" + js.string() + "\"")
            .code == 0);
  auto t = import_geometry_json(slurp(js));
  CHECK(t.triangles.size() == 4);
  bool midpoint = false;
  for (const auto& v : t.vertices)
    midpoint = midpoint || (v.scaled[1] == v.scaled[2] && !v.is_corner());
  CHECK(midpoint);

  auto id = write_spec("id.json", R"({"generators":[{"perm":[0,1,2],"phases":["0","0","0"]}]})");
  auto one = g_work / "one.svg";
  CHECK(run("triangulate \"" + id.string() + "\" --format svg --out \"" + one.string() + "\"")
            .code == 0);
  std::string os = slurp(one);
  CHECK(os.find("<polygon") == os.rfind("<polygon"));

  CHECK(run("triangulate \"" + iv1.string() + "\" --format png --out \"" +
            (g_work / "x.png").string() + "\"")
            .code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-mckay> [doctest options]\n");
    return 2;
  }
  g_binary = argv[1];
  g_work = fs::temp_directory_path() / ("mckay_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(g_work);
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  int rc = ctx.run();
  fs::remove_all(g_work);
  return rc;
}
