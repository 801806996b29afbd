#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dimer/cli.hpp"
#include "dimer/svg.hpp"
#include "oracles.hpp"

using namespace dimer;
namespace fs = std::filesystem;

namespace {

std::string fixture_path(const std::string& name) { return std::string(DIMER_FIXTURE_DIR) + "/" + name + ".json"; }

fs::path scratch(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("dimer_cli_test_" + tag);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_command(const std::string& command, const std::string& fixture, const fs::path& out,
                const std::string& theta = "special", std::string* log = nullptr) {
  RunConfig cfg;
  cfg.input = fixture_path(fixture);
  cfg.theta = theta;
  cfg.stages = *parse_command(command);
  cfg.out_dir = out.string();
  cfg.svg = true;
  std::ostringstream os;
  const int code = run(cfg, os);
  if (log) *log = os.str();
  return code;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("theta parsing") {
  CHECK(parse_theta("special", 3).theta == std::vector<Rational>{-2, 1, 1});
  CHECK(parse_theta("-1/2, 1/2", 2).theta == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(parse_theta("1,1", 2), Error);
  CHECK_THROWS_AS(parse_theta("0,0,0", 2), Error);
  CHECK_THROWS_AS(parse_theta("a,b", 2), Error);
}

TEST_CASE("commands") {
  CHECK(parse_command("all")->size() == 6);
  CHECK(parse_command("psi") == std::vector<Stage>{Stage::Psi});
  CHECK_FALSE(parse_command("nope").has_value());
}

TEST_CASE("one vertex, every stage") {
  const auto out = scratch("c3");
  CHECK(run_command("all", "one_vertex", out) == kSuccess);
  for (const char* f : {"validate.json", "matchings.json", "fan.json", "labels.json", "chamber.json", "psi.json", "fan.svg"})
    CHECK(fs::exists(out / f));
  const auto psi = nlohmann::json::parse(slurp(out / "psi.json"));
  REQUIRE(psi["entries"].size() == 1);
  CHECK(psi["entries"][0]["vertex"] == 0);
  CHECK(psi["entries"][0]["case"] == "dualizing");
  const auto svg = slurp(out / "fan.svg");
  CHECK(svg.find("<svg") == 0);
  for (const char* label : {">v1<", ">v2<", ">v3<"}) CHECK(svg.find(label) != std::string::npos);
}

TEST_CASE("ten-vertex hexagon: psi report") {
  const auto out = scratch("fig3");
  std::string log;
  CHECK(run_command("psi", "hexagon_10", out, "special", &log) == kSuccess);
  const auto psi = nlohmann::json::parse(slurp(out / "psi.json"));
  std::map<int, std::string> formulas;
  for (const auto& e : psi["entries"]) formulas[e["vertex"].get<int>()] = e["formula"].get<std::string>();
  CHECK(formulas[1] == "L1^-1|E6∩E9");
  CHECK(formulas[2] == "L2^-1|E8∪E9");
  CHECK(formulas[5] == "L5^-1|E8");
  CHECK(formulas[7] == "L7^-1|E2∩E9");
  CHECK(psi["all_checks_pass"] == true);
  CHECK(log.find("Psi(S7) = L7^-1|E2∩E9") != std::string::npos);
  CHECK_FALSE(fs::exists(out / "fan.json"));
}

TEST_CASE("quiver drawing") {
  const auto out = scratch("quiver");
  CHECK(run_command("labels", "hexagon_10", out) == kSuccess);
  const auto svg = slurp(out / "quiver.svg");
  CHECK(svg.find(">34<") != std::string::npos);
  const auto model = oracle::fixture("conifold");
  CHECK_THROWS_AS(quiver_svg(model, build_fan(model, special_theta(2))), Error);
}

TEST_CASE("exit codes") {
  std::string log;
  CHECK(run_command("fan", "conifold", scratch("ng"), "0,0", &log) == kNonGeneric);
  CHECK(log.find("non-generic stability parameter") != std::string::npos);
  CHECK(run_command("psi", "c2z2_line", scratch("cc")) == kCrossCheckFailure);
  CHECK(run_command("psi", "conifold", scratch("ns"), "1,-1") == kValidationFailure);
  RunConfig cfg;
  cfg.input = "/nonexistent/model.json";
  cfg.stages = {Stage::Validate};
  cfg.out_dir = scratch("missing").string();
  std::ostringstream os;
  CHECK(run(cfg, os) == kValidationFailure);
}

TEST_CASE("invalid models are reported") {
  auto model = oracle::fixture("conifold");
  model.faces[0].boundary.pop_back();
  const auto dir = scratch("invalid");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.json");
    f << serialize_dimer(model);
  }
  RunConfig cfg;
  cfg.input = (dir / "bad.json").string();
  cfg.stages = {Stage::Validate};
  cfg.out_dir = (dir / "out").string();
  std::ostringstream os;
  CHECK(run(cfg, os) == kValidationFailure);
  const auto rep = nlohmann::json::parse(slurp(dir / "out" / "validate.json"));
  CHECK(rep["valid"] == false);
  CHECK_FALSE(rep["diagnostics"].empty());
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  REQUIRE(run_command("all", "hexagon_10", a) == kSuccess);
  REQUIRE(run_command("all", "hexagon_10", b) == kSuccess);
  for (const auto& entry : fs::directory_iterator(a)) {
    CAPTURE(entry.path().filename().string());
    CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
  }
}

TEST_CASE("command line executable") {
  const auto out = scratch("exe");
  const std::string exe = DIMER_CLI_PATH;
  const std::string ok = exe + " chamber --input " + fixture_path("hexagonal_z3") + " --out " + out.string() + " 2>/dev/null";
  CHECK(std::system(ok.c_str()) == 0);
  CHECK(fs::exists(out / "chamber.json"));
  const std::string bad = exe + " nonsense --input " + fixture_path("conifold") + " >/dev/null 2>&1";
  CHECK(std::system(bad.c_str()) != 0);
}

}
