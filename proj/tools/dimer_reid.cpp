#include <iostream>

#include <CLI11.hpp>

#include "dimer/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Toric crepant resolutions and vertex-simple transforms from dimer models"};
  std::string command;
  dimer::RunConfig config;
  app.add_option("command", command, "validate | matchings | fan | labels | chamber | psi | all")
      ->required()
      ->check(CLI::IsMember({"validate", "matchings", "fan", "labels", "chamber", "psi", "all"}));
  app.add_option("--input", config.input, "dimer model JSON")->required()->check(CLI::ExistingFile);
  app.add_option("--theta", config.theta, "'special' or comma separated fractions p/q")->capture_default_str();
  app.add_option("--out", config.out_dir, "output directory")->capture_default_str();
  app.add_flag("--svg", config.svg, "also write SVG figures");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dimer::kValidationFailure;
  }
  config.stages = *dimer::parse_command(command);
  return dimer::run(config, std::cerr);
}
