#include "hcanon/liealg.hpp"

#include <stdexcept>
#include <utility>

namespace hcanon {

RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw std::invalid_argument("bracket: operands must be square matrices of equal size");
  }
  return x * y - y * x;
}

namespace {

std::size_t common_size(std::span<const RatMatrix> mats) {
  if (mats.empty()) return 0;
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats) {
    if (!m.is_square() || m.rows() != n) {
      throw std::invalid_argument("subalgebra candidates must be square matrices of equal size");
    }
  }
  return n;
}

std::vector<RatVector> flatten_all(std::span<const RatMatrix> mats) {
  std::vector<RatVector> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.entries());
  return out;
}

bool closed_under_bracket(std::span<const RatMatrix> basis, const Subspace& space) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!membership(space, bracket(basis[i], basis[j]).entries())) return false;
    }
  return true;
}

}  // namespace

bool is_subalgebra(std::span<const RatMatrix> candidate) {
  const std::size_t n = common_size(candidate);
  const Subspace space(n * n, flatten_all(candidate));
  return closed_under_bracket(candidate, space);
}

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t n, std::vector<RatMatrix> basis)
    : n_(n), basis_(std::move(basis)), space_(n * n, flatten_all(basis_)) {
  if (!basis_.empty() && common_size(basis_) != n) {
    throw std::invalid_argument("MatrixLieAlgebra: basis matrices are not n x n");
  }
  if (!closed_under_bracket(basis_, space_)) {
    throw NotSubalgebraError("not a subalgebra: some bracket of basis elements leaves their span");
  }
}

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t n, std::vector<RatMatrix> basis, Trusted)
    : n_(n), basis_(std::move(basis)), space_(n * n, flatten_all(basis_)) {}

MatrixLieAlgebra MatrixLieAlgebra::gl(std::size_t n) {
  std::vector<RatMatrix> basis;
  basis.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(RatMatrix::unit(n, i, j));
  return MatrixLieAlgebra(n, std::move(basis), Trusted{});
}

bool MatrixLieAlgebra::contains(const RatMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("contains: matrix is not n x n");
  return membership(space_, x.entries());
}

bool CartanSlice::contains(std::span<const Rational> diag) const {
  if (diag.size() != n) throw std::invalid_argument("CartanSlice::contains: wrong length");
  if (basis.empty()) return is_zero_vector(RatVector(diag.begin(), diag.end()));
  return solve(RatMatrix::from_rows(basis, n).transpose(), diag).has_value();
}

MatrixLieAlgebra stabilizer_subalgebra(const WeightRep& rep, const RepVector& v) {
  if (!(v.rep() == rep)) throw std::invalid_argument("stabilizer_subalgebra: vector belongs to another representation");
  const std::size_t n = rep.n();
  // Column (i*n + j) of the action matrix is E_ij . v.
  RatMatrix action(rep.dim(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RepVector image = act(rep, RatMatrix::unit(n, i, j), v);
      for (const auto& [b, c] : image.terms()) action(b, i * n + j) = c;
    }
  const Subspace kernel = kernel_basis(action);
  std::vector<RatMatrix> basis;
  basis.reserve(kernel.dim());
  for (const auto& k : kernel.basis()) basis.push_back(RatMatrix::unflatten(k, n));
  return MatrixLieAlgebra(n, std::move(basis));
}

CartanSlice cartan_intersection(const MatrixLieAlgebra& h) {
  const std::size_t n = h.n();
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(i * n + i);
  const Subspace meet = coordinate_intersection(h.subspace(), diag);
  std::vector<RatVector> vectors;
  for (const auto& b : meet.basis()) {
    RatVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = b[diag[i]];
    vectors.push_back(std::move(d));
  }
  return CartanSlice{n, Subspace::span(n, vectors).basis()};
}

}  // namespace hcanon
