#pragma once

// Weight-graded representations of gl(n) with exact action rules.

#include "hcanon/numeric.hpp"
#include "hcanon/ratlin.hpp"
#include "hcanon/zlattice.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hcanon {

enum class RepKind { standard, dual, wedge2, sym };

/// Zero-based basis label. standard/dual: {i}; wedge2: {i, j} with i < j;
/// sym(k): exponent vector (a_1, ..., a_n) with sum k.
using BasisLabel = std::vector<std::size_t>;

/// A representation of gl(n) on a space with a distinguished weight basis.
///
/// Basis orders: indices for standard/dual, pairs (i, j) with i < j in
/// lexicographic order for wedge2, exponent vectors in decreasing
/// lexicographic order for sym(k) (so e_1^k comes first).
class WeightRep {
 public:
  /// Throws std::invalid_argument unless n >= 1, and k >= 1 for sym.
  static WeightRep make(RepKind kind, std::size_t n, std::size_t k = 0);

  RepKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  /// Degree k for sym(k); 1 for standard and dual; 2 for wedge2.
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return labels_.size(); }

  const BasisLabel& label(std::size_t b) const { return labels_.at(b); }
  const IntVector& weight_of(std::size_t b) const { return weights_.at(b); }
  std::optional<std::size_t> index_of(const BasisLabel& label) const;

  /// "standard", "dual", "wedge2" or "sym(k)".
  std::string name() const;
  /// One-based human-readable label, e.g. "[1,3]" for b_13.
  std::string label_text(std::size_t b) const;

  friend bool operator==(const WeightRep& a, const WeightRep& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.degree_ == b.degree_;
  }

 private:
  WeightRep(RepKind kind, std::size_t n, std::size_t degree);

  RepKind kind_;
  std::size_t n_;
  std::size_t degree_;
  std::vector<BasisLabel> labels_;
  std::vector<IntVector> weights_;
  std::map<BasisLabel, std::size_t> index_;
};

WeightRep make_rep(RepKind kind, std::size_t n, std::size_t k = 0);

/// A vector of a WeightRep; only nonzero coefficients are stored.
class RepVector {
 public:
  explicit RepVector(std::shared_ptr<const WeightRep> rep);
  explicit RepVector(const WeightRep& rep) : RepVector(std::make_shared<const WeightRep>(rep)) {}

  const WeightRep& rep() const { return *rep_; }
  const std::shared_ptr<const WeightRep>& rep_ptr() const { return rep_; }
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(std::size_t b) const;
  /// Adds c * basis[b]; cancelled terms are removed.
  RepVector& add_term(std::size_t b, const Rational& c);
  RepVector scaled(const Rational& s) const;
  RatVector dense() const;

  /// Rep name and terms, with the vector normalized so that its first
  /// coefficient is 1 (rescaling v leaves the description unchanged).
  std::string describe() const;

  friend bool operator==(const RepVector& a, const RepVector& b) {
    return *a.rep_ == *b.rep_ && a.terms_ == b.terms_;
  }

 private:
  std::shared_ptr<const WeightRep> rep_;
  std::map<std::size_t, Rational> terms_;
};

RepVector operator+(const RepVector& a, const RepVector& b);
RepVector operator-(const RepVector& a, const RepVector& b);

/// Action of x in gl(n) by the derivation rule.
RepVector act(const WeightRep& rep, const RatMatrix& x, const RepVector& v);

/// Distinct weights of the basis vectors in v's support, in basis order.
/// Throws ValidationError if v = 0.
std::vector<IntVector> support_weights(const RepVector& v);

/// Exponent vectors m with t^m = 1 on the diagonal stabilizer of v: the
/// lattice generated by the support weights.
Lattice stabilizer_torus_lattice(const RepVector& v);

}  // namespace hcanon
