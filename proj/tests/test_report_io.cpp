#include "hcanon/report_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>

using namespace hcanon;
using namespace hcanon::testing;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = HCANON_FIXTURE_DIR;

std::string report_for(const Problem& p) { return emit_json(to_report_file(analyze(p))); }

json orbit_json(const std::string& kind, int n, json vector) {
  return json{{"mode", "orbit"}, {"n", n}, {"rep", {{"kind", kind}}}, {"vector", std::move(vector)}};
}

}  // namespace

TEST_SUITE("report_io") {

TEST_CASE("orbit fixtures match the builtins byte for byte") {
  CHECK(report_for(load_problem_file(kFixtures / "secant_n5.json")) == report_for(builtin_secant(5)));
  CHECK(report_for(load_problem_file(kFixtures / "secant_n5_scaled.json")) == report_for(builtin_secant(5)));
  CHECK(report_for(load_problem_file(kFixtures / "rnc_k2.json")) == report_for(builtin_rnc(2)));
  CHECK(report_for(load_problem_file(kFixtures / "rnc_k3.json")) == report_for(builtin_rnc(3)));
}

TEST_CASE("secant n = 5 report contents") {
  const json j = json::parse(report_for(builtin_secant(5)));
  CHECK(j["dim_quotient"] == 10);
  CHECK(j["strict_trivial"] == false);
  CHECK(j["g_multiple"]["m0"] == 4);
  CHECK(j["g_multiple"]["period"] == 0);
  CHECK(j["character_group"]["free_rank"] == 3);
}

TEST_CASE("direct fixtures") {
  const auto direct = to_report_file(analyze(load_problem_file(kFixtures / "direct_rnc_k3.json")));
  const auto builtin = to_report_file(analyze(builtin_rnc(3)));
  CHECK(direct.provenance == "direct");
  CHECK(direct.multiplicities == builtin.multiplicities);
  CHECK(direct.delta == builtin.delta);
  CHECK(direct.g_multiple == builtin.g_multiple);

  const auto connected = to_report_file(analyze(load_problem_file(kFixtures / "direct_connected.json")));
  CHECK(connected.connected_torus_assumption);
  CHECK(emit_text(connected).find("connected torus:     assumed") != std::string::npos);

  CHECK_THROWS_AS(load_problem_file(kFixtures / "direct_not_closed.json"), NotSubalgebraError);
  const auto unstable = load_problem_file(kFixtures / "direct_unstable.json");
  CHECK_THROWS_AS(analyze(unstable), DecompositionError);
}

TEST_CASE("malformed problem files") {
  CHECK_THROWS_AS(load_problem_file(kFixtures / "orbit_empty_vector.json"), ParseError);
  CHECK_THROWS_AS(load_problem_file(kFixtures / "does_not_exist.json"), ParseError);
  CHECK_THROWS_AS(problem_from_json(json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(problem_from_json(json{{"mode", "both"}}), ParseError);

  const json term = {{"coeff", "1"}, {"basis", {1, 2}}};
  CHECK_NOTHROW(problem_from_json(orbit_json("wedge2", 3, json::array({term}))));
  // unknown field
  json extra = orbit_json("wedge2", 3, json::array({term}));
  extra["verbose"] = true;
  CHECK_THROWS_AS(problem_from_json(extra), ParseError);
  // e_i ^ e_i
  CHECK_THROWS_AS(problem_from_json(orbit_json("wedge2", 3, json::array({{{"coeff", "1"}, {"basis", {2, 2}}}}))),
                  ParseError);
  // label out of range
  CHECK_THROWS_AS(problem_from_json(orbit_json("standard", 3, json::array({{{"coeff", "1"}, {"basis", 4}}}))),
                  ParseError);
  // decimal coefficients are not exact rationals
  CHECK_THROWS_AS(problem_from_json(orbit_json("standard", 3, json::array({{{"coeff", "0.5"}, {"basis", 1}}}))),
                  ParseError);
  // sym needs k, and the exponents must sum to it
  CHECK_THROWS_AS(problem_from_json(orbit_json("sym", 2, json::array({{{"coeff", "1"}, {"basis", {1, 0}}}}))),
                  ParseError);
  json sym = orbit_json("sym", 2, json::array({{{"coeff", "1"}, {"basis", {1, 0}}}}));
  sym["rep"]["k"] = 2;
  CHECK_THROWS_AS(problem_from_json(sym), ParseError);
  // direct matrices must be n x n
  const json bad_shape = json::parse(R"({"mode": "direct", "n": 2, "h_basis": [[["1", "0"]]]})");
  CHECK_THROWS_AS(problem_from_json(bad_shape), ParseError);
}

TEST_CASE("wedge2 labels are antisymmetric") {
  const json forward = orbit_json("wedge2", 4, json::array({{{"coeff", "2"}, {"basis", {1, 3}}}}));
  const json backward = orbit_json("wedge2", 4, json::array({{{"coeff", "-2"}, {"basis", {3, 1}}}}));
  CHECK(report_for(problem_from_json(forward)) == report_for(problem_from_json(backward)));
}

TEST_CASE("property: JSON reports round-trip byte for byte") {
  Rng rng(41);
  std::vector<Problem> problems{builtin_secant(5), builtin_secant(8), builtin_rnc(1), builtin_rnc(4),
                                load_problem_file(kFixtures / "direct_connected.json")};
  const auto rep = std::make_shared<const WeightRep>(make_rep(RepKind::sym, 3, 2));
  for (int trial = 0; trial < 8; ++trial) {
    RepVector v(rep);
    for (std::size_t b = 0; b < rep->dim(); ++b) {
      if (uniform(rng, 0, 2) == 0) v.add_term(b, random_rational(rng));
    }
    problems.push_back(Problem::from_orbit(v));
  }
  for (const auto& p : problems) {
    const ReportFile r = to_report_file(analyze(p));
    const std::string text = emit_json(r);
    const ReportFile parsed = report_from_json(json::parse(text));
    CHECK(parsed == r);
    CHECK(emit_json(parsed) == text);
  }
}

TEST_CASE("report parsing rejects schema violations") {
  json j = json::parse(report_for(builtin_rnc(3)));
  j.erase("delta");
  CHECK_THROWS_AS(report_from_json(j), ParseError);
  json k = json::parse(report_for(builtin_rnc(3)));
  k["dim_g"] = -1;
  CHECK_THROWS_AS(report_from_json(k), ParseError);
}

TEST_CASE("text and JSON carry the same verdicts") {
  for (const auto& p : {builtin_secant(6), builtin_rnc(2), builtin_rnc(3)}) {
    const ReportFile r = to_report_file(analyze(p));
    const json j = json::parse(emit_json(r));
    const std::string text = emit_text(r);
    const std::string strict = j["strict_trivial"].get<bool>() ? "true" : "false";
    CHECK(text.find("strict_trivial:      " + strict + "\n") != std::string::npos);
    CHECK(text.find("g_multiple:          " + format_multiple(r.g_multiple) + "\n") != std::string::npos);
    CHECK(text.find("delta:               " + to_string(r.delta) + "\n") != std::string::npos);
    CHECK(text.find("dim g/h:             " + std::to_string(j["dim_quotient"].get<int>()) + "\n") !=
          std::string::npos);
  }
}

TEST_CASE("format_multiple") {
  CHECK(format_multiple(std::nullopt) == "no");
  CHECK(format_multiple(MultipleSolution{4, 0}) == "yes m=4");
  CHECK(format_multiple(MultipleSolution{1, 2}) == "yes m=1 mod 2");
  CHECK(format_multiple(MultipleSolution{0, 1}) == "yes (all m)");
}

TEST_CASE("sweeps") {
  const auto secant = run_sweep(Family::secant, 5, 8);
  REQUIRE(secant.size() == 4);
  for (std::size_t i = 0; i < secant.size(); ++i) {
    CHECK(secant[i].parameter == 5 + i);
    CHECK(secant[i].dim_quotient == 10 + 4 * i);
  }
  const auto rnc = run_sweep(Family::rnc, 1, 4);
  std::vector<std::string> column;
  for (const auto& r : rnc) column.push_back(format_multiple(r.g_multiple));
  CHECK(column == std::vector<std::string>{"yes m=1", "yes m=1", "no", "no"});

  CHECK(emit_sweep_table(rnc) == emit_sweep_table(run_sweep(Family::rnc, 1, 4)));
  const json rows = json::parse(emit_sweep_json(secant));
  REQUIRE(rows.size() == 4);
  CHECK(rows[3]["dim_quotient"] == 22);

  CHECK_THROWS_AS(run_sweep(Family::rnc, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(Family::secant, 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(Family::rnc, 0, 2), std::invalid_argument);
}

}  // TEST_SUITE
