#include "edskit/cli.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

#include "edskit/records.hpp"

namespace edskit {

namespace {

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw Error("cannot open output file: " + path);
  return file;
}

FamilyInstance instantiate_from(const RunConfig& config) {
  std::optional<RationalPoint> override_point;
  if (config.point) override_point = parse_point(*config.point);
  std::uint64_t t = config.family == FamilyKind::Somos4Curve ? 0 : config.t;
  if (config.family != FamilyKind::Somos4Curve && !config.t_given) {
    throw UsageError("this family needs --t");
  }
  return family_instantiate(config.family, t, override_point);
}

void write_term_csv_header(std::ostream& out) {
  out << "n,A,B,has_primitive,primitive_part,fundprop_holds\n";
}

void write_term_csv_row(std::ostream& out, const TermRecord& r) {
  out << r.n << ',' << r.a << ',' << r.b << ',' << (r.has_primitive ? "true" : "false") << ','
      << r.primitive_part << ',' << (r.fundprop_holds ? "true" : "false") << '\n';
}

void write_term_pretty(std::ostream& out, const TermRecord& r) {
  out << "n=" << r.n << " B=" << r.b << " A=" << r.a
      << " primitive=" << (r.has_primitive ? "yes" : "no") << " part=" << r.primitive_part
      << " fundprop=" << (r.fundprop_holds ? "holds" : "fails") << '\n';
}

void write_somos_csv_header(std::ostream& out) { out << "n,u,has_primitive,primitive_part\n"; }

void write_somos_csv_row(std::ostream& out, const SomosRecord& r) {
  out << r.n << ',' << r.u << ',' << (r.has_primitive ? "true" : "false") << ','
      << r.primitive_part << '\n';
}

// One sweep entry; report is absent when the instance failed (no
// point in budget, torsion override, ...), with the reason kept.
struct SweepRow {
  std::uint64_t t = 0;
  std::optional<ZsigmondyReport> report;
  std::string error;
  long long wall_ms = 0;
};

SweepRow sweep_one(std::uint64_t t, const RunConfig& config) {
  SweepRow row;
  row.t = t;
  auto started = std::chrono::steady_clock::now();
  try {
    FamilyInstance inst = family_instantiate(config.family, t);
    ZsigmondyOptions opts;
    opts.doublings = config.doublings;
    opts.observe_length = config.observe;
    opts.digit_budget = config.digit_budget;
    row.report = zsigmondy_bound(inst, opts);
  } catch (const Error& e) {
    row.error = e.what();
  }
  auto elapsed = std::chrono::steady_clock::now() - started;
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return row;
}

constexpr const char* kSweepCsvHeader =
    "t,point_found,point_x,point_y,point_class,hhat_lo,hhat_hi,"
    "candidate_even_max,candidate_odd_max,verified_Z,verified_Ze,verified_Zo,"
    "certified_even,certified_odd,certified,error,wall_ms";

void write_sweep_csv_row(std::ostream& out, const SweepRow& row) {
  out << row.t << ',';
  if (row.report) {
    const ZsigmondyReport& r = *row.report;
    out << "true," << rational_to_string(r.point_x) << ',' << rational_to_string(r.point_y) << ','
        << point_class_name(r.point_class) << ',' << format_double(r.hhat.lo) << ','
        << format_double(r.hhat.hi) << ',' << r.candidate_even_max << ',';
    if (r.candidate_odd_max) out << *r.candidate_odd_max;
    out << ',' << r.verified_z << ',' << r.verified_ze << ',' << r.verified_zo << ','
        << (r.certified_even ? "true" : "false") << ',' << (r.certified_odd ? "true" : "false")
        << ',' << (r.certified ? "true" : "false") << ",,";
  } else {
    out << "false,,,,,,,,,,,,,," << csv_escape(row.error) << ',';
  }
  out << row.wall_ms << '\n';
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational x;
  if (text.empty() || mpq_set_str(x.get_mpq_t(), text.c_str(), 10) != 0) {
    throw UsageError("not a rational: '" + text + "' (want p or p/q in decimal)");
  }
  if (x.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

RationalPoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--point wants 'x,y' with exact rationals, got '" + text + "'");
  }
  return RationalPoint(parse_rational(text.substr(0, comma)),
                       parse_rational(text.substr(comma + 1)));
}

int run_gen(const RunConfig& config, std::ostream& fallback) {
  if (config.n < 1) throw UsageError("--n must be >= 1");
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, config.out_path, fallback);

  if (config.somos_terms) {
    SomosSequence som = somos4(std::max(config.n, 4));
    if (config.format == RunConfig::Format::Csv) write_somos_csv_header(out);
    for (int k = 1; k <= config.n; ++k) {
      SomosRecord r = make_somos_record(som, k);
      switch (config.format) {
        case RunConfig::Format::Jsonl: out << to_json(r).dump() << '\n'; break;
        case RunConfig::Format::Csv: write_somos_csv_row(out, r); break;
        case RunConfig::Format::Pretty:
          out << "n=" << r.n << " u=" << r.u << " primitive=" << (r.has_primitive ? "yes" : "no")
              << " part=" << r.primitive_part << '\n';
          break;
      }
    }
    return 0;
  }

  FamilyInstance inst = instantiate_from(config);
  EdsSequence seq = generate(inst.curve, inst.p, config.n, config.digit_budget);
  if (config.format == RunConfig::Format::Csv) write_term_csv_header(out);
  for (int n = 1; n <= config.n; ++n) {
    TermRecord r = make_term_record(seq, n);
    switch (config.format) {
      case RunConfig::Format::Jsonl: out << to_json(r).dump() << '\n'; break;
      case RunConfig::Format::Csv: write_term_csv_row(out, r); break;
      case RunConfig::Format::Pretty: write_term_pretty(out, r); break;
    }
  }
  return 0;
}

int run_zsigmondy(const RunConfig& config, std::ostream& fallback) {
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, config.out_path, fallback);

  FamilyInstance inst = instantiate_from(config);
  ZsigmondyOptions opts;
  opts.doublings = config.doublings;
  opts.observe_length = config.observe;
  opts.digit_budget = config.digit_budget;
  ZsigmondyReport report = zsigmondy_bound(inst, opts);

  Json j = report_to_json(report);
  switch (config.format) {
    case RunConfig::Format::Jsonl: out << j.dump() << '\n'; break;
    case RunConfig::Format::Pretty: out << j.dump(2) << '\n'; break;
    case RunConfig::Format::Csv:
      throw UsageError("zsigmondy reports are JSON; use --format jsonl or pretty");
  }
  return 0;
}

int run_sweep(const RunConfig& config, std::ostream& diagnostics) {
  if (config.out_dir.empty()) throw UsageError("sweep needs --out-dir");
  if (config.t_max >= config.t_min && config.t_max - config.t_min > 1'000'000) {
    throw UsageError("sweep range too large (over 1e6 values)");
  }
  std::filesystem::create_directories(config.out_dir);

  // empty range (t_min > t_max) legally yields a header-only summary
  std::vector<std::uint64_t> ts;
  for (std::uint64_t t = config.t_min; t <= config.t_max; ++t) {
    if (config.family == FamilyKind::CongruentT && (t < 5 || !is_squarefree(t))) continue;
    ts.push_back(t);
  }

  std::vector<SweepRow> rows(ts.size());
  std::atomic<std::size_t> cursor{0};
  int jobs = std::max(1, std::min(config.jobs, 64));
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= ts.size()) return;
      rows[i] = sweep_one(ts[i], config);
    }
  };
  if (jobs == 1 || ts.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::filesystem::path dir(config.out_dir);
  std::ofstream csv(dir / "summary.csv");
  std::ofstream jsonl(dir / "instances.jsonl");
  if (!csv || !jsonl) throw Error("cannot open sweep outputs under " + config.out_dir);

  csv << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    write_sweep_csv_row(csv, row);
    if (row.report) {
      jsonl << report_to_json(*row.report).dump() << '\n';
    } else {
      jsonl << Json{{"t", row.t}, {"error", row.error}}.dump() << '\n';
    }
  }
  diagnostics << "sweep: " << rows.size() << " instances -> " << (dir / "summary.csv").string()
              << '\n';
  return 0;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::Gen: return run_gen(config, out);
      case RunConfig::Command::Zsigmondy: return run_zsigmondy(config, out);
      case RunConfig::Command::Sweep: return run_sweep(config, out);
    }
    throw Error("unknown command");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 4;
  } catch (const TorsionError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace edskit
