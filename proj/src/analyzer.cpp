#include "hcanon/analyzer.hpp"

#include <stdexcept>
#include <utility>

namespace hcanon {

const char* const kKappaNote =
    "delta is the determinant of the T_H action on g/h (anticanonical direction); "
    "the canonical character kappa is -delta; both verdicts are sign-invariant";

namespace {

IntVector all_ones(std::size_t n) { return IntVector(n, Integer(1)); }

Lattice default_g_characters(std::size_t n) {
  const std::vector<IntVector> gens{all_ones(n)};
  return Lattice(n, gens);
}

// Characters of GL(n) restrict to multiples of (1, ..., 1).
void check_g_characters(const Lattice& g) {
  if (g.rank() != 1) {
    throw ValidationError("g_characters must generate a rank-1 lattice (GL(n) has the single character det)");
  }
  const auto& gen = g.generators().front();
  for (const auto& x : gen) {
    if (x != gen.front()) {
      throw ValidationError("g_characters must be multiples of (1, ..., 1)");
    }
  }
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

}  // namespace

Problem::Problem(MatrixLieAlgebra h, Lattice relations, Lattice g_characters, CartanSlice torus,
                 std::string provenance, bool connected)
    : h_(std::move(h)),
      relations_(std::move(relations)),
      g_characters_(std::move(g_characters)),
      torus_(std::move(torus)),
      provenance_(std::move(provenance)),
      connected_(connected) {}

Problem Problem::create(MatrixLieAlgebra h, Lattice relations, std::optional<Lattice> g_characters,
                        std::string provenance, bool connected_torus_assumption) {
  const std::size_t n = h.n();
  if (relations.ambient_rank() != n) {
    throw ValidationError("relation vectors must have length n = " + std::to_string(n));
  }
  Lattice g = g_characters ? std::move(*g_characters) : default_g_characters(n);
  if (g.ambient_rank() != n) {
    throw ValidationError("g_characters vectors must have length n = " + std::to_string(n));
  }
  check_g_characters(g);

  CartanSlice torus = cartan_intersection(h);
  for (const auto& l : relations.generators()) {
    const RatVector lr = to_rational(l);
    for (const auto& t : torus.basis) {
      if (!is_zero(dot(lr, t))) {
        throw ValidationError("relation lattice is not annihilated by t_H = Lie(T ∩ H)");
      }
    }
  }
  if (torus.dim() + relations.rank() != n) {
    throw ValidationError("dim t_H = " + std::to_string(torus.dim()) + " but n - rank(L) = " +
                          std::to_string(n - relations.rank()));
  }
  return Problem(std::move(h), std::move(relations), std::move(g), std::move(torus),
                 std::move(provenance), connected_torus_assumption);
}

Problem Problem::from_orbit(const RepVector& v) {
  const WeightRep& rep = v.rep();
  MatrixLieAlgebra h = stabilizer_subalgebra(rep, v);
  Lattice relations = v.is_zero() ? Lattice(rep.n()) : stabilizer_torus_lattice(v);
  return create(std::move(h), std::move(relations), std::nullopt, "orbit " + v.describe());
}

Problem Problem::direct(std::size_t n, std::vector<RatMatrix> h_basis,
                        std::optional<std::vector<IntVector>> relations,
                        std::optional<std::vector<IntVector>> g_characters) {
  for (const auto& x : h_basis) {
    if (x.rows() != n || x.cols() != n) throw ValidationError("h_basis matrices must be n x n");
  }
  if (!is_subalgebra(h_basis)) {
    throw NotSubalgebraError("not a subalgebra: some bracket of h_basis elements leaves their span");
  }
  MatrixLieAlgebra h(n, std::move(h_basis));

  auto lattice_of = [n](const std::vector<IntVector>& gens, const char* what) {
    for (const auto& g : gens) {
      if (g.size() != n) throw ValidationError(std::string(what) + " vectors must have length n");
    }
    return Lattice(n, gens);
  };
  std::optional<Lattice> g;
  if (g_characters) g = lattice_of(*g_characters, "g_characters");

  if (relations) {
    Lattice l = lattice_of(*relations, "relations");
    return create(std::move(h), std::move(l), std::move(g), "direct");
  }

  // Connected fallback: T_H is the torus with Lie algebra t_H.
  const CartanSlice torus = cartan_intersection(h);
  const Subspace annihilator =
      torus.basis.empty() ? Subspace::span(n, std::vector<RatVector>{})
                          : kernel_basis(RatMatrix::from_rows(torus.basis, n));
  std::vector<IntVector> gens;
  if (torus.basis.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  } else {
    for (const auto& b : annihilator.basis()) gens.push_back(clear_denominators(b));
  }
  Lattice l = saturate(Lattice(n, gens));
  return create(std::move(h), std::move(l), std::move(g), "direct", true);
}

Multiplicities weight_multiplicities(const Problem& p) {
  const std::size_t n = p.n();
  const AbelianQuotient q = quotient(p.relations());

  // gl(n) splits under the diagonal torus into E_ij (weight e_i - e_j) and
  // the diagonal (weight 0); group those coordinates by class in Z^n / L.
  std::map<CharClass, std::vector<std::size_t>> components;
  IntVector w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w[i] += 1;
      w[j] -= 1;
      components[q.reduce(w)].push_back(i * n + j);
      w[i] = 0;
      w[j] = 0;
    }

  const RatMatrix& equations = p.h().subspace().equations();
  Multiplicities mults;
  std::size_t h_total = 0;
  for (const auto& [c, coords] : components) {
    // dim(h ∩ gl_c) = |coords| - rank(equations restricted to coords)
    const std::size_t r = rank(select_columns(equations, coords));
    h_total += coords.size() - r;
    if (r > 0) mults.emplace(c, r);
  }
  if (h_total != p.h().dim()) {
    throw DecompositionError("h is not a sum of T_H weight spaces: components add up to dimension " +
                             std::to_string(h_total) + ", dim h = " + std::to_string(p.h().dim()));
  }
  return mults;
}

CharClass determinant_character(const Multiplicities& mults, const AbelianQuotient& q) {
  CharClass delta = q.zero();
  for (const auto& [c, m] : mults) delta = q.add(delta, q.scale(c, Integer(static_cast<unsigned long>(m))));
  return delta;
}

AnalysisReport analyze(const Problem& p) {
  const std::size_t n = p.n();
  AbelianQuotient q = quotient(p.relations());
  Multiplicities mults = weight_multiplicities(p);
  CharClass delta = determinant_character(mults, q);
  CharClass det_class = q.reduce(p.g_character_lattice().generators().front());
  auto g_multiple = solve_multiple(q, delta, det_class);
  const bool strict = q.is_zero(delta);
  return AnalysisReport{
      .dim_g = n * n,
      .dim_h = p.h().dim(),
      .dim_quotient = n * n - p.h().dim(),
      .character_group = std::move(q),
      .multiplicities = std::move(mults),
      .delta = std::move(delta),
      .strict_trivial = strict,
      .det_class = std::move(det_class),
      .g_multiple = std::move(g_multiple),
      .kappa_note = kKappaNote,
      .provenance = p.provenance(),
      .connected_torus_assumption = p.connected_torus_assumption(),
  };
}

Problem builtin_secant(std::size_t n) {
  if (n < 5) throw std::invalid_argument("secant family requires n >= 5");
  const auto rep = std::make_shared<const WeightRep>(make_rep(RepKind::wedge2, n));
  RepVector v(rep);
  v.add_term(*rep->index_of({0, 2}), 1);
  v.add_term(*rep->index_of({1, 3}), 1);
  return Problem::from_orbit(v);
}

Problem builtin_rnc(std::size_t k) {
  if (k < 1) throw std::invalid_argument("rational normal curve family requires k >= 1");
  const auto rep = std::make_shared<const WeightRep>(make_rep(RepKind::sym, 2, k));
  RepVector v(rep);
  v.add_term(*rep->index_of({k, 0}), 1);
  return Problem::from_orbit(v);
}

Rational trace_oracle(const Problem& p, std::span<const Rational> t) {
  const std::size_t n = p.n();
  if (t.size() != n) throw ValidationError("trace_oracle: t must have length n");
  if (!p.torus().contains(t)) throw ValidationError("trace_oracle: t is not in t_H");
  for (const auto& l : p.relations().generators()) {
    if (!is_zero(dot(to_rational(l), t))) throw ValidationError("trace_oracle: t does not annihilate L");
  }

  // In a reduced echelon basis the coordinate along basis vector k is the
  // entry at its pivot, so the trace is the sum of those diagonal entries.
  const auto& echelon = p.h().subspace().echelon();
  Rational trace = 0;
  for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
    RatVector image(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        const Rational& x = echelon.matrix(k, r * n + s);
        if (!is_zero(x)) image[r * n + s] = (t[r] - t[s]) * x;
      }
    if (!membership(p.h().subspace(), image)) {
      throw ValidationError("trace_oracle: h is not stable under ad(t)");
    }
    trace += image[echelon.pivots[k]];
  }
  return -trace;
}

Rational weight_pairing(const Multiplicities& mults, const AbelianQuotient& q,
                        std::span<const Rational> t) {
  Rational s = 0;
  for (const auto& [c, m] : mults) {
    s += Rational(static_cast<unsigned long>(m)) * dot(to_rational(q.lift(c)), t);
  }
  return s;
}

}  // namespace hcanon
