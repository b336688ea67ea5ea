#pragma once

// Matrix Lie subalgebras of gl(n).

#include "hcanon/numeric.hpp"
#include "hcanon/ratlin.hpp"
#include "hcanon/weightrep.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hcanon {

class NotSubalgebraError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// xy - yx. Throws std::invalid_argument on a size mismatch.
RatMatrix bracket(const RatMatrix& x, const RatMatrix& y);

/// Throws LinearDependenceError if the candidates are dependent; false if
/// some bracket leaves their span.
bool is_subalgebra(std::span<const RatMatrix> candidate);

/// A Lie subalgebra of gl(n) with an explicit basis.
///
/// Matrices are identified with their row-major n^2-vectors throughout.
/// Construction checks linear independence and bracket closure.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::size_t n, std::vector<RatMatrix> basis);

  /// All of gl(n), basis E_ij in row-major order.
  static MatrixLieAlgebra gl(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  /// The span of the flattened basis inside Q^(n^2).
  const Subspace& subspace() const { return space_; }

  bool contains(const RatMatrix& x) const;

 private:
  struct Trusted {};
  MatrixLieAlgebra(std::size_t n, std::vector<RatMatrix> basis, Trusted);

  std::size_t n_;
  std::vector<RatMatrix> basis_;
  Subspace space_;
};

/// Diagonal part of a matrix Lie algebra, as diagonal-entry vectors.
struct CartanSlice {
  std::size_t n = 0;
  std::vector<RatVector> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(std::span<const Rational> diag) const;
};

/// {X in gl(n) : X.v = 0}. v = 0 gives all of gl(n).
MatrixLieAlgebra stabilizer_subalgebra(const WeightRep& rep, const RepVector& v);

/// Diagonal matrices in span(h), echelonized.
CartanSlice cartan_intersection(const MatrixLieAlgebra& h);

}  // namespace hcanon
