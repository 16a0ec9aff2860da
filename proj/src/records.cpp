#include "edskit/records.hpp"

#include <cstdio>

namespace edskit {

TermRecord make_term_record(const EdsSequence& seq, int n) {
  PrimitiveVerdict v = primitive_verdict(seq, n);
  TermRecord r;
  r.n = n;
  r.a = seq.a(n).get_str();
  r.b = seq.b(n).get_str();
  r.has_primitive = v.has_primitive;
  r.primitive_part = v.primitive_part.get_str();
  r.fundprop_holds = v.fundprop_holds;
  return r;
}

Json to_json(const TermRecord& record) {
  return Json{{"n", record.n},
              {"A", record.a},
              {"B", record.b},
              {"has_primitive", record.has_primitive},
              {"primitive_part", record.primitive_part},
              {"fundprop_holds", record.fundprop_holds}};
}

TermRecord term_record_from_json(const Json& j) {
  TermRecord r;
  r.n = j.at("n").get<int>();
  r.a = j.at("A").get<std::string>();
  r.b = j.at("B").get<std::string>();
  r.has_primitive = j.at("has_primitive").get<bool>();
  r.primitive_part = j.at("primitive_part").get<std::string>();
  r.fundprop_holds = j.at("fundprop_holds").get<bool>();
  BigInt b;
  if (mpz_set_str(b.get_mpz_t(), r.b.c_str(), 10) != 0 || b < 1) {
    throw DomainError("term_record_from_json: B must parse as an integer >= 1");
  }
  BigInt a;
  if (mpz_set_str(a.get_mpz_t(), r.a.c_str(), 10) != 0) {
    throw DomainError("term_record_from_json: A must parse as an integer");
  }
  return r;
}

SomosRecord make_somos_record(const SomosSequence& som, int k) {
  SomosRecord r;
  r.n = k;
  r.u = som.u(k).get_str();
  BigInt part = primitive_part_vs_all(som.terms, k);
  r.has_primitive = part > 1;
  r.primitive_part = part.get_str();
  return r;
}

Json to_json(const SomosRecord& record) {
  return Json{{"n", record.n},
              {"u", record.u},
              {"has_primitive", record.has_primitive},
              {"primitive_part", record.primitive_part}};
}

Json report_to_json(const ZsigmondyReport& report) {
  Json j;
  j["instance"] = report.instance_id;
  j["family"] = family_name(report.family);
  j["t"] = report.t;
  j["point"] = Json{{"x", rational_to_string(report.point_x)},
                    {"y", rational_to_string(report.point_y)}};
  j["point_class"] = point_class_name(report.point_class);
  j["hhat"] = Json{{"lo", report.hhat.lo}, {"hi", report.hhat.hi},
                   {"certified", report.hhat_certified}};
  j["candidate_even_max"] = report.candidate_even_max;
  j["candidate_odd_max"] =
      report.candidate_odd_max ? Json(*report.candidate_odd_max) : Json(nullptr);
  j["even_envelope_crossover"] = report.even_envelope_crossover;
  j["odd_envelope_crossover"] =
      report.odd_envelope_crossover ? Json(*report.odd_envelope_crossover) : Json(nullptr);
  j["scan_horizon"] = report.scan_horizon;
  j["checked_up_to"] = report.checked_up_to;
  j["failing_indices"] = report.failing_indices;
  j["verified_Z"] = report.verified_z;
  j["verified_Ze"] = report.verified_ze;
  j["verified_Zo"] = report.verified_zo;
  j["certified_even"] = report.certified_even;
  j["certified_odd"] = report.certified_odd;
  j["certified"] = report.certified;
  return j;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace edskit
