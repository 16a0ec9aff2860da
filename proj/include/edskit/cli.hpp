#ifndef EDSKIT_CLI_HPP
#define EDSKIT_CLI_HPP

// Command plumbing shared by the binary and the integration tests:
// gen streams per-term records, zsigmondy emits one report, sweep runs
// a T-range concurrently and writes summary.csv + instances.jsonl.
// Exit codes: 0 ok, 2 usage, 3 math-domain (torsion, bad T, no point),
// 4 digit/length budget exceeded.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "edskit/curve.hpp"
#include "edskit/eds.hpp"

namespace edskit {

struct RunConfig {
  enum class Command { Gen, Zsigmondy, Sweep };
  enum class Format { Jsonl, Csv, Pretty };

  Command command = Command::Gen;
  FamilyKind family = FamilyKind::CongruentT;
  bool somos_terms = false;  // gen --somos: raw u_k records, no curve

  std::uint64_t t = 0;
  bool t_given = false;
  std::uint64_t t_min = 0;
  std::uint64_t t_max = 0;

  std::optional<std::string> point;  // "x,y" with exact rationals

  int n = 10;          // gen: sequence length
  int doublings = 5;   // zsigmondy/sweep: height interval k
  int observe = 40;    // zsigmondy/sweep: minimum checked length
  int digit_budget = kDefaultDigitBudget;
  int jobs = 1;        // sweep concurrency

  Format format = Format::Jsonl;
  std::string out_path;  // gen/zsigmondy; empty = stdout
  std::string out_dir;   // sweep; required
};

// Exact rational from "p" or "p/q" decimal text.
Rational parse_rational(const std::string& text);

// "x,y" pair; used by --point.
RationalPoint parse_point(const std::string& text);

int run_gen(const RunConfig& config, std::ostream& out);
int run_zsigmondy(const RunConfig& config, std::ostream& out);
int run_sweep(const RunConfig& config, std::ostream& diagnostics);

// Dispatches on config.command, mapping exceptions to exit codes and
// writing the message to err.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace edskit

#endif
