#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parageo/cli/experiment.hpp"

using namespace parageo;

namespace {

struct Flags {
  std::string config_file;
  std::string algebra, type, suite, x, z, second, output, format;
  std::optional<int> grid;
  std::optional<unsigned> orders;
  bool print_config = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_file, "JSON experiment config; flags override its fields");
  sub->add_option("-a,--algebra", f.algebra, "catalog algebra: proj(m), grass(n,m), conf(p,q), lagr3, su21, xxdot");
  sub->add_option("-t,--type", f.type, "full_n | grade(-j) | null_cone | rank(r) | strata(..) | span(..)");
  sub->add_option("-g,--grid", f.grid, "integer coordinate range [-g, g] (default 2)");
  sub->add_option("-r,--orders", f.orders, "maximal order (default depth + 3)");
  sub->add_option("--suite", f.suite, "verify: lemmas | brackets | safety | all");
  sub->add_option("-x,--x", f.x, "direction, e.g. \"E21 + (1/2)*E32\" or \"[1,0,1/2]\"");
  sub->add_option("-z,--z", f.z, "reparam: element of p_+ (default: sweep the grid)");
  sub->add_option("--second", f.second, "reparam: second direction (default: --x)");
  sub->add_option("-o,--output", f.output, "output file (default stdout)");
  sub->add_option("-f,--format", f.format, "json | md");
  sub->add_flag("--print-config", f.print_config, "print the resolved config as JSON and exit");
}

ExperimentConfig assemble(const std::string& command, const Flags& f) {
  ExperimentConfig c;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + f.config_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, f.config_file + ": " + e.what());
    }
    c = ExperimentConfig::from_json(j);
  }
  c.command = command;
  auto set = [](std::string& field, const std::string& value) {
    if (!value.empty()) field = value;
  };
  set(c.algebra, f.algebra);
  set(c.type_spec, f.type);
  set(c.suite, f.suite);
  set(c.x, f.x);
  set(c.z, f.z);
  set(c.second, f.second);
  set(c.output_path, f.output);
  set(c.format, f.format);
  if (f.grid) c.grid = f.grid;
  if (f.orders) c.orders = f.orders;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on distinguished curves of parabolic geometries"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"catalog", "list the catalog algebra families"},
      {"verify", "run identity suites on an algebra"},
      {"jets", "search the minimal jet order determining curves of a type"},
      {"fiber", "sample the standard fiber of admissible 2-jets"},
      {"family", "dimension of the family of curves through o in a direction"},
      {"reparam", "projective reparametrizations between chains or |1|-graded geodesics"},
      {"classify", "G_0-stratum of a direction or stratum counts over a type"}};
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const ExperimentConfig config = assemble(app.get_subcommands().front()->get_name(), flags);
    if (flags.print_config) {
      std::cout << config.to_json().dump(2) << "\n";
      return 0;
    }
    const RunResult result = run(config);
    const std::string bytes = emit(result.report, config.format);
    if (config.output_path.empty()) {
      std::cout << bytes;
    } else {
      std::ofstream out(config.output_path, std::ios::binary);
      if (!out || !(out << bytes)) throw Error(ErrorCode::IoError, "cannot write " + config.output_path);
    }
    if (result.exit_code != 0) std::cerr << "parageo: FAIL\n";
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "parageo: " << e.what() << "\n";
    return 2;
  }
}
