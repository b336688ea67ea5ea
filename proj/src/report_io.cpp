#include "hcanon/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcanon {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

void expect_keys(const json& obj, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  for (const auto& k : required) {
    if (!obj.contains(k)) fail(where + ": missing field \"" + k + "\"");
  }
  for (const auto& [k, _] : obj.items()) {
    if (!required.contains(k) && !optional.contains(k)) fail(where + ": unexpected field \"" + k + "\"");
  }
}

std::uint64_t get_count(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(where + ": expected a nonnegative integer");
}

Integer get_integer(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(where + ": not an integer: \"" + s + "\"");
    return z;
  }
  fail(where + ": expected an integer");
}

IntVector get_int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(get_integer(x, where));
  return v;
}

std::vector<IntVector> get_int_vectors(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of integer vectors");
  std::vector<IntVector> out;
  for (const auto& x : j) out.push_back(get_int_vector(x, where));
  return out;
}

Rational get_rational(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": rationals must be strings such as \"3/4\"");
  return parse_rational(j.get<std::string>());
}

// Integers serialize as JSON numbers when they fit, strings otherwise.
ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

ordered_json int_vector_json(const IntVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

ordered_json class_json(const CharClass& c) {
  ordered_json j;
  j["torsion"] = int_vector_json(c.torsion);
  j["free"] = int_vector_json(c.free);
  return j;
}

CharClass class_from_json(const json& j, const std::string& where) {
  expect_keys(j, {"torsion", "free"}, {}, where);
  return CharClass{get_int_vector(j["torsion"], where + ".torsion"),
                   get_int_vector(j["free"], where + ".free")};
}

ordered_json multiple_json(const std::optional<MultipleSolution>& g) {
  if (!g) return nullptr;
  ordered_json j;
  j["m0"] = integer_json(g->m0);
  j["period"] = integer_json(g->period);
  return j;
}

std::optional<MultipleSolution> multiple_from_json(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  expect_keys(j, {"m0", "period"}, {}, where);
  return MultipleSolution{get_integer(j["m0"], where + ".m0"), get_integer(j["period"], where + ".period")};
}

bool get_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where + ": expected true or false");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a string");
  return j.get<std::string>();
}

RepKind parse_kind(const std::string& s) {
  if (s == "standard") return RepKind::standard;
  if (s == "dual") return RepKind::dual;
  if (s == "wedge2") return RepKind::wedge2;
  if (s == "sym") return RepKind::sym;
  fail("rep.kind: unknown representation \"" + s + "\" (expected standard, dual, wedge2 or sym)");
}

// Adds coeff * basis(label) to v. Labels are one-based indices for
// standard/dual ([i] or i) and wedge2 ([i, j], i != j, [j, i] = -[i, j]);
// exponent vectors for sym.
void add_labelled_term(RepVector& v, const json& label, const Rational& coeff, std::size_t term) {
  const WeightRep& rep = v.rep();
  const std::string where = "vector[" + std::to_string(term) + "].basis";
  IntVector raw;
  if (label.is_number_integer()) raw.push_back(get_integer(label, where));
  else raw = get_int_vector(label, where);

  auto index_arg = [&](const Integer& z) -> std::size_t {
    if (z < 1 || z > static_cast<unsigned long>(rep.n())) fail(where + ": index out of range 1..n");
    return z.get_ui() - 1;
  };

  switch (rep.kind()) {
    case RepKind::standard:
    case RepKind::dual: {
      if (raw.size() != 1) fail(where + ": expected a single index");
      v.add_term(index_arg(raw[0]), coeff);
      return;
    }
    case RepKind::wedge2: {
      if (raw.size() != 2) fail(where + ": expected a pair [i, j]");
      const std::size_t i = index_arg(raw[0]);
      const std::size_t j = index_arg(raw[1]);
      if (i == j) fail(where + ": e_i ^ e_i is not a basis vector");
      if (i < j) v.add_term(*rep.index_of({i, j}), coeff);
      else v.add_term(*rep.index_of({j, i}), -coeff);
      return;
    }
    case RepKind::sym: {
      if (raw.size() != rep.n()) fail(where + ": exponent vector must have length n");
      BasisLabel exps;
      for (const auto& z : raw) {
        if (z < 0 || !z.fits_ulong_p()) fail(where + ": exponents must be nonnegative");
        exps.push_back(z.get_ui());
      }
      const auto idx = rep.index_of(exps);
      if (!idx) fail(where + ": exponents must sum to k = " + std::to_string(rep.degree()));
      v.add_term(*idx, coeff);
      return;
    }
  }
}

Problem orbit_problem(const json& j) {
  expect_keys(j, {"mode", "n", "rep", "vector"}, {}, "orbit problem");
  const std::uint64_t n = get_count(j["n"], "n");
  const json& rj = j["rep"];
  expect_keys(rj, {"kind"}, {"k"}, "rep");
  const RepKind kind = parse_kind(get_string(rj["kind"], "rep.kind"));
  std::uint64_t k = 0;
  if (kind == RepKind::sym) {
    if (!rj.contains("k")) fail("rep: sym requires a degree k");
    k = get_count(rj["k"], "rep.k");
  } else if (rj.contains("k")) {
    fail("rep: k is only meaningful for sym");
  }
  std::shared_ptr<const WeightRep> rep;
  try {
    rep = std::make_shared<const WeightRep>(make_rep(kind, n, k));
  } catch (const std::invalid_argument& e) {
    fail(std::string("rep: ") + e.what());
  }

  const json& terms = j["vector"];
  if (!terms.is_array() || terms.empty()) fail("vector: expected a nonempty array of terms");
  RepVector v(rep);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "vector[" + std::to_string(t) + "]";
    expect_keys(terms[t], {"coeff", "basis"}, {}, where);
    add_labelled_term(v, terms[t]["basis"], get_rational(terms[t]["coeff"], where + ".coeff"), t);
  }
  return Problem::from_orbit(v);
}

Problem direct_problem(const json& j) {
  expect_keys(j, {"mode", "n", "h_basis"}, {"relations", "g_characters"}, "direct problem");
  const std::uint64_t n = get_count(j["n"], "n");
  if (n < 1) fail("n must be at least 1");
  const json& hb = j["h_basis"];
  if (!hb.is_array()) fail("h_basis: expected an array of n x n matrices");
  std::vector<RatMatrix> basis;
  for (std::size_t b = 0; b < hb.size(); ++b) {
    const std::string where = "h_basis[" + std::to_string(b) + "]";
    const json& m = hb[b];
    if (!m.is_array() || m.size() != n) fail(where + ": expected " + std::to_string(n) + " rows");
    RatMatrix x(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!m[r].is_array() || m[r].size() != n) fail(where + ": every row needs " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) x(r, c) = get_rational(m[r][c], where);
    }
    basis.push_back(std::move(x));
  }
  std::optional<std::vector<IntVector>> relations;
  if (j.contains("relations")) relations = get_int_vectors(j["relations"], "relations");
  std::optional<std::vector<IntVector>> g;
  if (j.contains("g_characters")) g = get_int_vectors(j["g_characters"], "g_characters");
  return Problem::direct(n, std::move(basis), std::move(relations), std::move(g));
}

}  // namespace

Problem problem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mode")) fail("problem file: missing \"mode\"");
  const std::string mode = get_string(j["mode"], "mode");
  if (mode == "orbit") return orbit_problem(j);
  if (mode == "direct") return direct_problem(j);
  fail("mode: expected \"orbit\" or \"direct\", got \"" + mode + "\"");
}

Problem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
  return problem_from_json(j);
}

ReportFile to_report_file(const AnalysisReport& r) {
  ReportFile f;
  f.provenance = r.provenance;
  f.connected_torus_assumption = r.connected_torus_assumption;
  f.dim_g = r.dim_g;
  f.dim_h = r.dim_h;
  f.dim_quotient = r.dim_quotient;
  f.invariant_factors = r.character_group.invariant_factors();
  f.free_rank = r.character_group.free_rank();
  for (const auto& [c, m] : r.multiplicities) f.multiplicities.emplace_back(c, m);
  f.delta = r.delta;
  f.det_class = r.det_class;
  f.strict_trivial = r.strict_trivial;
  f.g_multiple = r.g_multiple;
  f.kappa_note = r.kappa_note;
  return f;
}

ordered_json to_json(const ReportFile& r) {
  ordered_json j;
  j["provenance"] = r.provenance;
  j["connected_torus_assumption"] = r.connected_torus_assumption;
  j["dim_g"] = r.dim_g;
  j["dim_h"] = r.dim_h;
  j["dim_quotient"] = r.dim_quotient;
  ordered_json group;
  group["invariant_factors"] = int_vector_json(r.invariant_factors);
  group["free_rank"] = r.free_rank;
  j["character_group"] = std::move(group);
  ordered_json mults = ordered_json::array();
  for (const auto& [c, m] : r.multiplicities) {
    ordered_json e;
    e["class"] = class_json(c);
    e["count"] = m;
    mults.push_back(std::move(e));
  }
  j["multiplicities"] = std::move(mults);
  j["delta"] = class_json(r.delta);
  j["det_class"] = class_json(r.det_class);
  j["strict_trivial"] = r.strict_trivial;
  j["g_multiple"] = multiple_json(r.g_multiple);
  j["kappa_note"] = r.kappa_note;
  return j;
}

ReportFile report_from_json(const json& j) {
  expect_keys(j,
              {"provenance", "connected_torus_assumption", "dim_g", "dim_h", "dim_quotient",
               "character_group", "multiplicities", "delta", "det_class", "strict_trivial",
               "g_multiple", "kappa_note"},
              {}, "report");
  ReportFile r;
  r.provenance = get_string(j["provenance"], "provenance");
  r.connected_torus_assumption = get_bool(j["connected_torus_assumption"], "connected_torus_assumption");
  r.dim_g = get_count(j["dim_g"], "dim_g");
  r.dim_h = get_count(j["dim_h"], "dim_h");
  r.dim_quotient = get_count(j["dim_quotient"], "dim_quotient");
  const json& group = j["character_group"];
  expect_keys(group, {"invariant_factors", "free_rank"}, {}, "character_group");
  r.invariant_factors = get_int_vector(group["invariant_factors"], "character_group.invariant_factors");
  r.free_rank = get_count(group["free_rank"], "character_group.free_rank");
  const json& mults = j["multiplicities"];
  if (!mults.is_array()) fail("multiplicities: expected an array");
  for (const auto& e : mults) {
    expect_keys(e, {"class", "count"}, {}, "multiplicities[]");
    r.multiplicities.emplace_back(class_from_json(e["class"], "multiplicities[].class"),
                                  get_count(e["count"], "multiplicities[].count"));
  }
  r.delta = class_from_json(j["delta"], "delta");
  r.det_class = class_from_json(j["det_class"], "det_class");
  r.strict_trivial = get_bool(j["strict_trivial"], "strict_trivial");
  r.g_multiple = multiple_from_json(j["g_multiple"], "g_multiple");
  r.kappa_note = get_string(j["kappa_note"], "kappa_note");
  return r;
}

std::string emit_json(const ReportFile& r) { return to_json(r).dump(2) + "\n"; }

std::string format_multiple(const std::optional<MultipleSolution>& g) {
  if (!g) return "no";
  if (g->period == 0) return "yes m=" + to_string(g->m0);
  if (g->period == 1) return "yes (all m)";
  return "yes m=" + to_string(g->m0) + " mod " + to_string(g->period);
}

std::string emit_text(const ReportFile& r) {
  std::ostringstream out;
  auto factors = [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
      if (i) s += ',';
      s += to_string(r.invariant_factors[i]);
    }
    return s + "]";
  };
  out << "provenance:          " << r.provenance << '\n'
      << "connected torus:     " << (r.connected_torus_assumption ? "assumed" : "no") << '\n'
      << "dim g:               " << r.dim_g << '\n'
      << "dim h:               " << r.dim_h << '\n'
      << "dim g/h:             " << r.dim_quotient << '\n'
      << "character group:     invariant_factors=" << factors() << " free_rank=" << r.free_rank << '\n'
      << "multiplicities:\n";
  for (const auto& [c, m] : r.multiplicities) out << "  " << to_string(c) << "  x" << m << '\n';
  out << "delta:               " << to_string(r.delta) << '\n'
      << "det class:           " << to_string(r.det_class) << '\n'
      << "strict_trivial:      " << (r.strict_trivial ? "true" : "false") << '\n'
      << "g_multiple:          " << format_multiple(r.g_multiple) << '\n'
      << "kappa_note:          " << r.kappa_note << '\n';
  return out.str();
}

Problem builtin_problem(Family family, std::uint64_t parameter) {
  return family == Family::secant ? builtin_secant(parameter) : builtin_rnc(parameter);
}

std::vector<SweepRow> run_sweep(Family family, std::uint64_t from, std::uint64_t to) {
  if (from > to) throw std::invalid_argument("empty sweep range");
  const std::uint64_t lowest = family == Family::secant ? 5 : 1;
  if (from < lowest) {
    throw std::invalid_argument(std::string(family == Family::secant ? "n" : "k") + " must be at least " +
                                std::to_string(lowest));
  }
  std::vector<std::future<SweepRow>> pending;
  for (std::uint64_t p = from; p <= to; ++p) {
    pending.push_back(std::async(std::launch::async, [family, p] {
      const AnalysisReport r = analyze(builtin_problem(family, p));
      return SweepRow{p, r.dim_quotient, r.delta, r.strict_trivial, r.g_multiple};
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string emit_sweep_table(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "parameter" << std::setw(14) << "dim_quotient" << std::setw(44)
      << "delta" << std::setw(16) << "strict_trivial"
      << "g_multiple\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(10) << r.parameter << std::setw(14) << r.dim_quotient << std::setw(44)
        << to_string(r.delta) << std::setw(16) << (r.strict_trivial ? "true" : "false")
        << format_multiple(r.g_multiple) << '\n';
  }
  return out.str();
}

std::string emit_sweep_json(const std::vector<SweepRow>& rows) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["parameter"] = r.parameter;
    j["dim_quotient"] = r.dim_quotient;
    j["delta"] = class_json(r.delta);
    j["strict_trivial"] = r.strict_trivial;
    j["g_multiple"] = multiple_json(r.g_multiple);
    a.push_back(std::move(j));
  }
  return a.dump(2) + "\n";
}

}  // namespace hcanon
