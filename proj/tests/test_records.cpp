#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "edskit/records.hpp"

using namespace edskit;

namespace {

std::string random_decimal(std::mt19937_64& rng, int max_digits, bool allow_negative) {
  int digits = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_digits));
  std::string s;
  if (allow_negative && (rng() & 1)) s += '-';
  s += static_cast<char>('1' + rng() % 9);
  for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + rng() % 10);
  return s;
}

}  // namespace

TEST_CASE("term records from the Somos-curve sequence") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  auto seq = generate(inst.curve, inst.p, 8);

  auto r1 = make_term_record(seq, 1);
  CHECK(r1.n == 1);
  CHECK(r1.a == "0");
  CHECK(r1.b == "1");
  CHECK_FALSE(r1.has_primitive);
  CHECK(r1.primitive_part == "1");
  CHECK(r1.fundprop_holds);

  auto r5 = make_term_record(seq, 5);
  CHECK(r5.b == "4");
  CHECK(r5.has_primitive);
  CHECK(r5.primitive_part == "4");
  CHECK_FALSE(r5.fundprop_holds);  // 4 does not divide 25 B_1
}

TEST_CASE("term record JSON shape and key order") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  auto seq = generate(inst.curve, inst.p, 5);
  Json j = to_json(make_term_record(seq, 5));

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "A", "B", "has_primitive", "primitive_part",
                                         "fundprop_holds"});
  CHECK(j["n"] == 5);
  CHECK(j["B"] == "4");
  CHECK(j["has_primitive"] == true);
}

TEST_CASE("term records round-trip through JSON") {
  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 100; ++trial) {
    TermRecord r;
    r.n = static_cast<int>(rng() % 1000) + 1;
    r.a = random_decimal(rng, 60, true);
    r.b = random_decimal(rng, 60, false);
    r.has_primitive = (rng() & 1) != 0;
    r.primitive_part = random_decimal(rng, 30, false);
    r.fundprop_holds = (rng() & 1) != 0;

    // Through the object API and through the serialized text.
    CHECK(term_record_from_json(to_json(r)) == r);
    CHECK(term_record_from_json(Json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("term record parsing validates the integer fields") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  auto seq = generate(inst.curve, inst.p, 3);
  Json good = to_json(make_term_record(seq, 2));

  Json zero_b = good;
  zero_b["B"] = "0";
  CHECK_THROWS_AS(term_record_from_json(zero_b), DomainError);

  Json negative_b = good;
  negative_b["B"] = "-144";
  CHECK_THROWS_AS(term_record_from_json(negative_b), DomainError);

  Json junk_b = good;
  junk_b["B"] = "12x4";
  CHECK_THROWS_AS(term_record_from_json(junk_b), DomainError);

  Json junk_a = good;
  junk_a["A"] = "";
  CHECK_THROWS_AS(term_record_from_json(junk_a), DomainError);

  Json missing = good;
  missing.erase("n");
  CHECK_THROWS(term_record_from_json(missing));
}

TEST_CASE("somos records") {
  auto som = somos4(10);
  auto r8 = make_somos_record(som, 8);
  CHECK(r8.n == 8);
  CHECK(r8.u == "23");
  CHECK(r8.has_primitive);
  CHECK(r8.primitive_part == "23");

  auto r10 = make_somos_record(som, 10);
  CHECK(r10.u == "314");
  CHECK(r10.primitive_part == "157");

  Json j = to_json(r8);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "u", "has_primitive", "primitive_part"});
}

TEST_CASE("zsigmondy report serialization") {
  auto inst = family_instantiate(FamilyKind::CongruentT, 5);
  Json j = report_to_json(zsigmondy_bound(inst));

  CHECK(j["instance"] == "congruent_t5");
  CHECK(j["family"] == "congruent");
  CHECK(j["t"] == 5);
  CHECK(j["point"]["x"] == "-4");
  CHECK(j["point"]["y"] == "6");
  CHECK(j["point_class"] == "negative_x");
  CHECK(j["hhat"]["certified"] == true);
  CHECK(j["hhat"]["lo"].get<double>() < 1.899);
  CHECK(j["hhat"]["hi"].get<double>() > 1.899);
  CHECK(j["candidate_even_max"] == 4);
  CHECK(j["candidate_odd_max"] == 1);
  CHECK(j["even_envelope_crossover"].get<int>() > 4);
  CHECK(j["scan_horizon"] == 10000);
  CHECK(j["checked_up_to"] == 40);
  CHECK(j["failing_indices"] == Json::array({1}));
  CHECK(j["verified_Z"] == 1);
  CHECK(j["verified_Ze"] == 0);
  CHECK(j["verified_Zo"] == 1);
  CHECK(j["certified"] == true);
}

TEST_CASE("reports without an odd scan serialize null maxima") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  Json j = report_to_json(zsigmondy_bound(inst));
  CHECK(j["candidate_odd_max"].is_null());
  CHECK(j["odd_envelope_crossover"].is_null());
  CHECK(j["certified"] == false);
  CHECK(j["verified_Zo"] == 3);
  CHECK(j["family"] == "somos4");
}

TEST_CASE("rational_to_string") {
  CHECK(rational_to_string(Rational(BigInt(1681), BigInt(144))) == "1681/144");
  CHECK(rational_to_string(Rational(-4)) == "-4");
  CHECK(rational_to_string(Rational(0)) == "0");
  Rational reduced(BigInt(6), BigInt(4));
  reduced.canonicalize();
  CHECK(rational_to_string(reduced) == "3/2");
}

TEST_CASE("format_double") {
  CHECK(format_double(1.899) == "1.899");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1e300) == "1e+300");
  CHECK(format_double(2.0455976886891887) == "2.04559768869");
  // Deterministic: identical input, identical text.
  CHECK(format_double(0.1 + 0.2) == format_double(0.1 + 0.2));
}

TEST_CASE("csv_escape") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("") == "");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
  CHECK(csv_escape("-4/9") == "-4/9");
}
