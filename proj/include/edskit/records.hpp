#ifndef EDSKIT_RECORDS_HPP
#define EDSKIT_RECORDS_HPP

// Persisted shapes for CLI output: per-term records and the full
// index-bound report. Big integers travel as decimal strings (terms
// reach thousands of digits); everything round-trips losslessly.

#include <string>

#include <json.hpp>

#include "edskit/primitive.hpp"
#include "edskit/somos.hpp"
#include "edskit/zsigmondy.hpp"

namespace edskit {

using Json = nlohmann::ordered_json;

struct TermRecord {
  int n = 0;
  std::string a;
  std::string b;
  bool has_primitive = false;
  std::string primitive_part;
  bool fundprop_holds = true;  // stored true at n = 1 (divisibility test starts at 2)

  bool operator==(const TermRecord&) const = default;
};

TermRecord make_term_record(const EdsSequence& seq, int n);
Json to_json(const TermRecord& record);
TermRecord term_record_from_json(const Json& j);

struct SomosRecord {
  int n = 0;
  std::string u;
  bool has_primitive = false;
  std::string primitive_part;

  bool operator==(const SomosRecord&) const = default;
};

SomosRecord make_somos_record(const SomosSequence& som, int k);
Json to_json(const SomosRecord& record);

Json report_to_json(const ZsigmondyReport& report);

// "num" or "num/den", exact.
std::string rational_to_string(const Rational& x);

// Shortest %.12g rendering; used for CSV cells so reruns byte-match.
std::string format_double(double v);

// RFC-4180 style quoting, applied only when needed.
std::string csv_escape(const std::string& field);

}  // namespace edskit

#endif
