#include "hcanon/ratlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hcanon {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
  }
  for (auto& x : data_) x.canonicalize();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("RatMatrix::from_rows: length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const { return is_zero_vector(data_); }

RatMatrix RatMatrix::unflatten(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("unflatten: length is not n^2");
  return RatMatrix(n, n, std::vector<Rational>(v.begin(), v.end()));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  std::vector<Rational> out(a.entries());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return RatMatrix(a.rows(), a.cols(), std::move(out));
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  std::vector<Rational> out(a.entries());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return RatMatrix(a.rows(), a.cols(), std::move(out));
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  std::vector<Rational> out(m.entries());
  for (auto& x : out) x *= s;
  return RatMatrix(m.rows(), m.cols(), std::move(out));
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVector y(a.rows());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (is_zero(x[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!is_zero(a(i, j))) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && is_zero(r(p, c))) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(r(p, j), r(lead, j));
    }
    const Rational inv = 1 / r(lead, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(r(lead, j))) r(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || is_zero(r(i, c))) continue;
      const Rational f = r(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(r(lead, j))) r(i, j) -= f * r(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
  return x;
}

namespace {

// Raw nullspace vectors read off a reduced echelon form: one per free column.
std::vector<RatVector> nullspace_vectors(const RrefResult& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.matrix(k, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RatVector> nonzero_rows(const RrefResult& e) {
  std::vector<RatVector> out;
  out.reserve(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.push_back(e.matrix.row(k));
  return out;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim),
      echelon_{RatMatrix(0, ambient_dim), {}},
      equations_(RatMatrix::identity(ambient_dim)) {}

Subspace::Subspace(std::size_t ambient_dim, std::vector<RatVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (auto& b : basis_) {
    if (b.size() != ambient_dim_) throw std::invalid_argument("Subspace: basis vector has wrong length");
    for (auto& x : b) x.canonicalize();
  }
  auto full = rref(RatMatrix::from_rows(basis_, ambient_dim_));
  if (full.pivots.size() != basis_.size()) {
    throw LinearDependenceError("linearly dependent basis: rank " + std::to_string(full.pivots.size()) +
                          " < " + std::to_string(basis_.size()) + " vectors");
  }
  const auto eqs = nullspace_vectors(full, ambient_dim_);
  equations_ = RatMatrix::from_rows(eqs, ambient_dim_);
  RatMatrix trimmed(basis_.size(), ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j) trimmed(i, j) = full.matrix(i, j);
  echelon_ = {std::move(trimmed), std::move(full.pivots)};
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RatVector> vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  return Subspace(ambient_dim, nonzero_rows(rref(RatMatrix::from_rows(vectors, ambient_dim))));
}

Subspace kernel_basis(const RatMatrix& m) {
  const auto raw = nullspace_vectors(rref(m), m.cols());
  return Subspace::span(m.cols(), raw);
}

bool membership(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("membership: vector has wrong length");
  return is_zero_vector(s.equations() * v);
}

RatMatrix select_columns(const RatMatrix& m, std::span<const std::size_t> coords) {
  RatMatrix out(m.rows(), coords.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) out(i, j) = m(i, coords[j]);
  return out;
}

Subspace coordinate_intersection(const Subspace& s, std::span<const std::size_t> coords) {
  for (auto c : coords) {
    if (c >= s.ambient_dim()) throw std::invalid_argument("coordinate_intersection: index out of range");
  }
  const Subspace local = kernel_basis(select_columns(s.equations(), coords));
  std::vector<RatVector> embedded;
  embedded.reserve(local.dim());
  for (const auto& b : local.basis()) {
    RatVector x(s.ambient_dim());
    for (std::size_t j = 0; j < coords.size(); ++j) x[coords[j]] = b[j];
    embedded.push_back(std::move(x));
  }
  return Subspace(s.ambient_dim(), std::move(embedded));
}

}  // namespace hcanon
