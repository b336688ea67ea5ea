#pragma once

// Canonical-class analysis of homogeneous spaces G/H with G = GL(n).
//
// The restricted torus T_H = T ∩ H is described by its relation lattice
// L ⊆ Z^n, so X(T_H) = Z^n / L. The adjoint action of T_H on g/h splits into
// weight spaces indexed by classes in Z^n / L; the determinant character
// delta is the sum of those classes counted with multiplicity. The canonical
// class is trivial exactly when delta is.

#include "hcanon/liealg.hpp"
#include "hcanon/numeric.hpp"
#include "hcanon/weightrep.hpp"
#include "hcanon/zlattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hcanon {

/// H's Lie algebra and T_H data do not split into T_H weight spaces.
class DecompositionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

using Multiplicities = std::map<CharClass, std::size_t>;

class Problem {
 public:
  /// Validates that cartan_intersection(h) annihilates `relations` and has
  /// dimension n - rank(relations). The G character lattice must be a
  /// nonzero sublattice of Z(1, ..., 1); nullopt means Z(1, ..., 1).
  static Problem create(MatrixLieAlgebra h, Lattice relations,
                        std::optional<Lattice> g_characters, std::string provenance,
                        bool connected_torus_assumption = false);

  /// Stabilizer of v: h from the derivation action, L from v's support
  /// weights (no relations when v = 0).
  static Problem from_orbit(const RepVector& v);

  /// User-supplied h. Without relations the torus is assumed connected and
  /// L is the saturated integer annihilator of t_H.
  static Problem direct(std::size_t n, std::vector<RatMatrix> h_basis,
                        std::optional<std::vector<IntVector>> relations,
                        std::optional<std::vector<IntVector>> g_characters);

  std::size_t n() const { return h_.n(); }
  const MatrixLieAlgebra& h() const { return h_; }
  const Lattice& relations() const { return relations_; }
  const Lattice& g_character_lattice() const { return g_characters_; }
  const CartanSlice& torus() const { return torus_; }
  const std::string& provenance() const { return provenance_; }
  bool connected_torus_assumption() const { return connected_; }

 private:
  Problem(MatrixLieAlgebra h, Lattice relations, Lattice g_characters, CartanSlice torus,
          std::string provenance, bool connected);

  MatrixLieAlgebra h_;
  Lattice relations_;
  Lattice g_characters_;
  CartanSlice torus_;
  std::string provenance_;
  bool connected_;
};

struct AnalysisReport {
  std::size_t dim_g = 0;
  std::size_t dim_h = 0;
  std::size_t dim_quotient = 0;
  AbelianQuotient character_group;
  Multiplicities multiplicities;
  CharClass delta;
  bool strict_trivial = false;
  CharClass det_class;
  std::optional<MultipleSolution> g_multiple;
  std::string kappa_note;
  std::string provenance;
  bool connected_torus_assumption = false;
};

extern const char* const kKappaNote;

/// Multiplicity of each T_H weight class on g/h (positive entries only).
/// Throws DecompositionError if h is not a sum of its weight components.
Multiplicities weight_multiplicities(const Problem& p);

CharClass determinant_character(const Multiplicities& mults, const AbelianQuotient& q);

AnalysisReport analyze(const Problem& p);

/// GL(n) orbit of e1^f1 + e2^f2 in wedge^2 C^n, ordered (e1, e2, f1, f2, ...).
Problem builtin_secant(std::size_t n);

/// GL(2) orbit of e1^k in Sym^k C^2.
Problem builtin_rnc(std::size_t k);

/// -trace of ad(diag(t)) restricted to h, computed in h's echelon basis.
/// Requires t in t_H; throws ValidationError otherwise.
Rational trace_oracle(const Problem& p, std::span<const Rational> t);

/// sum_c mult(c) <lift(c), t>, using the quotient's canonical lifts.
Rational weight_pairing(const Multiplicities& mults, const AbelianQuotient& q,
                        std::span<const Rational> t);

}  // namespace hcanon
