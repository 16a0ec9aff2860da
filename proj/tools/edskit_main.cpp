// edskit: elliptic divisibility sequences, primitive-divisor detection,
// and certified Zsigmondy index bounds from the command line.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "edskit/cli.hpp"

namespace {

const std::map<std::string, edskit::FamilyKind> kFamilies{
    {"congruent", edskit::FamilyKind::CongruentT},
    {"twist", edskit::FamilyKind::TwistT},
    {"product", edskit::FamilyKind::ProductT},
    {"cube", edskit::FamilyKind::CubeT},
    {"somos4", edskit::FamilyKind::Somos4Curve},
};

const std::map<std::string, edskit::RunConfig::Format> kFormats{
    {"jsonl", edskit::RunConfig::Format::Jsonl},
    {"csv", edskit::RunConfig::Format::Csv},
    {"pretty", edskit::RunConfig::Format::Pretty},
};

int env_digit_budget() {
  if (const char* env = std::getenv("EDSKIT_DIGIT_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    std::cerr << "warning: ignoring invalid EDSKIT_DIGIT_BUDGET='" << env << "'\n";
  }
  return edskit::kDefaultDigitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  using edskit::RunConfig;

  CLI::App app{"elliptic divisibility sequences and primitive-divisor bounds"};
  app.require_subcommand(1);

  RunConfig config;
  config.digit_budget = env_digit_budget();
  std::string point_text;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", config.family, "curve family")
        ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
    cmd->add_option("--t", config.t, "family parameter T")->check(CLI::NonNegativeNumber);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "jsonl, csv, or pretty")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  CLI::App* gen = app.add_subcommand("gen", "generate sequence terms with primitive verdicts");
  add_family(gen);
  gen->add_flag("--somos", config.somos_terms, "raw Somos-4 terms instead of a curve sequence");
  gen->add_option("--n", config.n, "number of terms")->check(CLI::PositiveNumber);
  gen->add_option("--point", point_text, "override marked point, 'x,y' exact rationals");
  gen->add_option("--digit-budget", config.digit_budget, "per-term decimal digit cap")
      ->check(CLI::PositiveNumber);
  add_format(gen);
  gen->add_option("--out", config.out_path, "output file (default stdout)");

  CLI::App* zs = app.add_subcommand("zsigmondy", "certified or observed index-bound report");
  add_family(zs);
  zs->add_option("--point", point_text, "override marked point, 'x,y' exact rationals");
  zs->add_option("--k", config.doublings, "doublings for the height interval")
      ->check(CLI::PositiveNumber);
  zs->add_option("--observe", config.observe, "minimum checked sequence length")
      ->check(CLI::PositiveNumber);
  zs->add_option("--digit-budget", config.digit_budget, "per-term decimal digit cap")
      ->check(CLI::PositiveNumber);
  add_format(zs);
  zs->add_option("--out", config.out_path, "output file (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "batch reports over a T range");
  sweep->add_option("--family", config.family, "curve family")
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  sweep->add_option("--t-min", config.t_min, "first T")->required();
  sweep->add_option("--t-max", config.t_max, "last T")->required();
  sweep->add_option("--k", config.doublings, "doublings for the height interval")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--observe", config.observe, "minimum checked sequence length")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", config.jobs, "concurrent instances")->check(CLI::PositiveNumber);
  sweep->add_option("--digit-budget", config.digit_budget, "per-term decimal digit cap")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out-dir", config.out_dir, "directory for summary.csv + instances.jsonl")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (gen->parsed()) config.command = RunConfig::Command::Gen;
  if (zs->parsed()) config.command = RunConfig::Command::Zsigmondy;
  if (sweep->parsed()) config.command = RunConfig::Command::Sweep;
  config.t_given = gen->count("--t") > 0 || zs->count("--t") > 0;
  if (!point_text.empty()) config.point = point_text;

  return edskit::run_command(config, std::cout, std::cerr);
}
