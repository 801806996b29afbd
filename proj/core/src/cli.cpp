#include "dimer/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dimer/dimer_core.hpp"
#include "dimer/matchings.hpp"
#include "dimer/reid.hpp"
#include "dimer/report.hpp"
#include "dimer/svg.hpp"

namespace dimer {

namespace {

constexpr Stage kAllStages[] = {Stage::Validate, Stage::Matchings, Stage::Fan,
                                Stage::Labels,   Stage::Chamber,   Stage::Psi};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Input, "cannot write " + path.string());
  out << text;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonGeneric: return kNonGeneric;
    case ErrorKind::CrossCheck: return kCrossCheckFailure;
    default: return kValidationFailure;
  }
}

}  // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Validate: return "validate";
    case Stage::Matchings: return "matchings";
    case Stage::Fan: return "fan";
    case Stage::Labels: return "labels";
    case Stage::Chamber: return "chamber";
    case Stage::Psi: return "psi";
  }
  return "?";
}

std::optional<std::vector<Stage>> parse_command(std::string_view command) {
  if (command == "all") return std::vector<Stage>(std::begin(kAllStages), std::end(kAllStages));
  for (auto s : kAllStages)
    if (command == to_string(s)) return std::vector<Stage>{s};
  return std::nullopt;
}

StabilityParam parse_theta(const std::string& text, int num_vertices) {
  if (text == "special") return special_theta(num_vertices);
  StabilityParam theta;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    try {
      theta.theta.emplace_back(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, "theta: cannot parse '" + item + "' as a fraction p/q");
    }
  }
  if (static_cast<int>(theta.theta.size()) != num_vertices)
    throw Error(ErrorKind::Input, "theta: expected " + std::to_string(num_vertices) + " entries, got " +
                                      std::to_string(theta.theta.size()));
  Rational sum = 0;
  for (const auto& q : theta.theta) sum += q;
  if (sum != 0) throw Error(ErrorKind::Input, "theta: entries must sum to zero");
  return theta;
}

int run(const RunConfig& config, std::ostream& log) {
  try {
    const std::filesystem::path out = config.out_dir;
    std::filesystem::create_directories(out);
    auto wants = [&](Stage s) { return std::find(config.stages.begin(), config.stages.end(), s) != config.stages.end(); };
    Stage last = Stage::Validate;
    for (auto s : config.stages) last = std::max(last, s);

    std::ifstream in(config.input, std::ios::binary);
    if (!in) throw Error(ErrorKind::Input, "cannot read " + config.input);
    std::stringstream buf;
    buf << in.rdbuf();
    DimerModel model;
    try {
      model = parse_dimer(buf.str());
    } catch (const Error& e) {
      if (wants(Stage::Validate)) write_file(out / "validate.json", validate_report(DimerModel{}, {e.what()}));
      throw;
    }
    if (wants(Stage::Validate)) write_file(out / "validate.json", validate_report(model, {}));
    if (last == Stage::Validate) return kSuccess;

    const auto theta = parse_theta(config.theta, model.num_vertices);
    const auto matchings = enumerate_perfect_matchings(model);
    const auto basis = homology_basis(model);
    std::optional<Point2> anchor;
    if (model.anchor) anchor = Point2{(*model.anchor)[0], (*model.anchor)[1]};
    if (wants(Stage::Matchings))
      write_file(out / "matchings.json", matchings_report(matching_points_and_polygon(model, matchings, basis, anchor)));
    if (last == Stage::Matchings) return kSuccess;

    const Fan fan = build_fan(model, matchings, basis, theta, anchor);
    if (wants(Stage::Fan)) write_file(out / "fan.json", fan_report(model, fan));
    if (config.svg) write_file(out / "fan.svg", triangulation_svg(fan));
    if (wants(Stage::Labels)) write_file(out / "labels.json", labels_report(model, fan));
    if (config.svg && model.positions) write_file(out / "quiver.svg", quiver_svg(model, fan));
    if (wants(Stage::Chamber)) write_file(out / "chamber.json", chamber_report(theta, chamber_and_walls(model, fan, theta)));

    if (wants(Stage::Psi)) {
      if (!is_special(theta)) throw Error(ErrorKind::Input, "psi: the stability parameter must be special");
      const auto report = classify_psi_unchecked(model, fan);
      write_file(out / "psi.json", psi_report(fan, report));
      for (const auto& e : report.entries) log << "Psi(S" << e.vertex << ") = " << e.formula() << "\n";
      for (const auto& f : report.failures()) log << "check failed: " << f << "\n";
      if (!report.all_checks_pass()) return kCrossCheckFailure;
    }
    return kSuccess;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace dimer
