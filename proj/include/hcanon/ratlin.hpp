#pragma once

// Exact linear algebra over the rationals.

#include "hcanon/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hcanon {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  /// Rows of the result are the given vectors, which must share a length.
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
  /// n x n matrix with a single 1 at (i, j).
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Row-major entries; doubles as the n^2-vector realization of a square matrix.
  const std::vector<Rational>& entries() const { return data_; }
  RatVector row(std::size_t i) const;

  RatMatrix transpose() const;
  bool is_zero() const;

  /// Inverse of flatten for square matrices.
  static RatMatrix unflatten(std::span<const Rational> v, std::size_t n);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& m);
RatVector operator*(const RatMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows end up at the bottom.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Determinant of a square matrix.
Rational determinant(const RatMatrix& m);

/// One solution of a*x = b with free variables set to 0, or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

/// A linear subspace of Q^ambient_dim with an independent basis.
///
/// The basis is kept exactly as supplied. On construction the subspace also
/// derives a defining system of equations (rows y with <y, b> = 0 for every
/// basis vector b), which makes membership a sparse matrix-vector product.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim);
  /// Throws ValidationError when the vectors are linearly dependent.
  Subspace(std::size_t ambient_dim, std::vector<RatVector> basis);

  /// Subspace spanned by arbitrary vectors, basis in reduced echelon form.
  static Subspace span(std::size_t ambient_dim, std::span<const RatVector> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }

  /// Rows cut out the subspace: v is in it iff equations() * v = 0.
  const RatMatrix& equations() const { return equations_; }

  /// Reduced echelon basis with its pivot columns; coordinates of a member
  /// with respect to this basis are its entries at the pivot columns.
  const RrefResult& echelon() const { return echelon_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> basis_;
  RrefResult echelon_;
  RatMatrix equations_;
};

/// Basis of {x : m x = 0}, in reduced echelon form (first nonzero entry 1,
/// sorted by pivot position).
Subspace kernel_basis(const RatMatrix& m);

bool membership(const Subspace& s, std::span<const Rational> v);

/// s intersected with the coordinate subspace span{e_i : i in coords}.
Subspace coordinate_intersection(const Subspace& s, std::span<const std::size_t> coords);

/// Columns `coords` of m, in the given order.
RatMatrix select_columns(const RatMatrix& m, std::span<const std::size_t> coords);

}  // namespace hcanon
