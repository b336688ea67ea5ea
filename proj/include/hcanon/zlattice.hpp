#pragma once

// Integer lattices, Hermite/Smith normal forms and finitely generated
// abelian groups Z^n / L.

#include "hcanon/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hcanon {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  const std::vector<Integer>& entries() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f);
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> x, const IntMatrix& m);

struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};

/// Row-style Hermite normal form: u*m = h, u unimodular, pivots positive and
/// entries above each pivot reduced into [0, pivot). Zero rows come last.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

/// Smith normal form: u*m*v = d with nonnegative diagonal d_i | d_{i+1}.
SnfResult snf(const IntMatrix& m);

/// Sublattice of Z^n, stored as the nonzero rows of its Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank);
  Lattice(std::size_t ambient_rank, std::span<const IntVector> generators);

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<IntVector>& generators() const { return generators_; }
  IntMatrix generator_matrix() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> generators_;
};

bool is_member(const Lattice& l, std::span<const Integer> v);

/// Q-span of l intersected with Z^n.
Lattice saturate(const Lattice& l);

/// An element of Z^n / L in canonical coordinates: torsion coordinate i lies
/// in [0, d_i), free coordinates are unrestricted.
struct CharClass {
  IntVector torsion;
  IntVector free;

  friend bool operator==(const CharClass&, const CharClass&) = default;
  friend std::strong_ordering operator<=>(const CharClass& a, const CharClass& b);
};

std::string to_string(const CharClass& c);

/// Z^n / L presented as (Z/d_1 + ... + Z/d_t) + Z^free_rank with every
/// d_i >= 2 and d_i | d_{i+1}.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const Lattice& relations);

  std::size_t ambient_rank() const { return relations_.ambient_rank(); }
  const Lattice& relation_lattice() const { return relations_; }
  const IntVector& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  /// n x (t + free_rank); a row vector x maps to x * projection().
  const IntMatrix& projection() const { return projection_; }

  CharClass reduce(std::span<const Integer> v) const;
  /// A vector of Z^n whose class is c.
  IntVector lift(const CharClass& c) const;

  CharClass zero() const;
  CharClass add(const CharClass& a, const CharClass& b) const;
  CharClass scale(const CharClass& a, const Integer& m) const;
  bool is_zero(const CharClass& c) const;

  /// Throws std::invalid_argument when c does not have this group's shape.
  void check(const CharClass& c) const;

 private:
  Lattice relations_;
  IntVector factors_;
  std::size_t free_rank_ = 0;
  IntMatrix projection_;
  // Rows of v^{-1} from the Smith form, indexed like the projection columns.
  std::vector<IntVector> lift_rows_;
};

AbelianQuotient quotient(const Lattice& l);

inline CharClass reduce(const AbelianQuotient& q, std::span<const Integer> v) {
  return q.reduce(v);
}

/// Solution set of delta = m * chi as m0 + period * Z. period == 0 means m0
/// is the unique solution; m0 lies in [0, period) otherwise.
struct MultipleSolution {
  Integer m0;
  Integer period;

  friend bool operator==(const MultipleSolution&, const MultipleSolution&) = default;
};

std::optional<MultipleSolution> solve_multiple(const AbelianQuotient& q, const CharClass& delta,
                                               const CharClass& chi);

}  // namespace hcanon
