#include "hcanon/zlattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hcanon {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(src, j) != 0) (*this)(dst, j) += f * (*this)(src, j);
  }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, src) != 0) (*this)(i, dst) += f * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("integer matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(std::span<const Integer> x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = h.rows();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < h.cols() && lead < rows; ++c) {
    // Euclid on column c among rows lead.., always pivoting on the smallest
    // nonzero magnitude, until a single nonzero entry remains.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = lead; i < rows; ++i) {
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(lead, best);
      u.swap_rows(lead, best);
      bool clean = true;
      for (std::size_t i = lead + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = floor_div(h(i, c), h(lead, c));
        h.add_row(i, lead, -q);
        u.add_row(i, lead, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(lead, c) == 0) continue;
    if (h(lead, c) < 0) {
      h.negate_row(lead);
      u.negate_row(lead);
    }
    for (std::size_t i = 0; i < lead; ++i) {
      const Integer q = floor_div(h(i, c), h(lead, c));
      h.add_row(i, lead, -q);
      u.add_row(i, lead, -q);
    }
    ++lead;
  }
  return {std::move(h), std::move(u)};
}

namespace {

struct SnfWork {
  IntMatrix d, u, v, v_inv;
};

// Smith form that also maintains v^{-1}: every column operation applied to v
// is mirrored by the inverse row operation on v_inv.
SnfWork snf_with_inverse(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
            IntMatrix::identity(m.cols())};
  auto& d = w.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t diag = std::min(rows, cols);

  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    w.v.swap_cols(a, b);
    w.v_inv.swap_rows(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col(dst, src, f);
    w.v.add_col(dst, src, f);
    w.v_inv.add_row(src, dst, -f);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    w.u.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row(dst, src, f);
    w.u.add_row(dst, src, f);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return w;
      row_swap(t, bi);
      col_swap(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mod_floor(d(i, j), d(t, t)) != 0) {
            offender = i;
            break;
          }
        }
      if (offender == rows) break;
      row_add(t, offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      w.u.negate_row(t);
    }
  }
  return w;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  auto w = snf_with_inverse(m);
  return {std::move(w.d), std::move(w.u), std::move(w.v)};
}

Lattice::Lattice(std::size_t ambient_rank) : n_(ambient_rank) {}

Lattice::Lattice(std::size_t ambient_rank, std::span<const IntVector> generators)
    : n_(ambient_rank) {
  if (generators.empty()) return;
  const auto h = hnf(IntMatrix::from_rows(generators, n_)).h;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    auto r = h.row(i);
    if (is_zero_vector(r)) break;
    generators_.push_back(std::move(r));
  }
}

IntMatrix Lattice::generator_matrix() const { return IntMatrix::from_rows(generators_, n_); }

bool is_member(const Lattice& l, std::span<const Integer> v) {
  if (v.size() != l.ambient_rank()) throw std::invalid_argument("is_member: vector has wrong length");
  IntVector residual(v.begin(), v.end());
  std::size_t start = 0;
  for (const auto& g : l.generators()) {
    std::size_t p = 0;
    while (g[p] == 0) ++p;
    for (std::size_t j = start; j < p; ++j) {
      if (residual[j] != 0) return false;
    }
    if (mod_floor(residual[p], g[p]) != 0) return false;
    const Integer q = residual[p] / g[p];
    for (std::size_t j = p; j < residual.size(); ++j) residual[j] -= q * g[j];
    start = p + 1;
  }
  return is_zero_vector(residual);
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  const auto w = snf_with_inverse(l.generator_matrix());
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < l.rank(); ++i) rows.push_back(w.v_inv.row(i));
  return Lattice(l.ambient_rank(), rows);
}

std::strong_ordering operator<=>(const CharClass& a, const CharClass& b) {
  auto lex = [](const IntVector& x, const IntVector& y) {
    const std::size_t k = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < k; ++i) {
      const int c = cmp(x[i], y[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return x.size() <=> y.size();
  };
  if (auto c = lex(a.torsion, b.torsion); c != 0) return c;
  return lex(a.free, b.free);
}

std::string to_string(const CharClass& c) {
  auto join = [](const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += to_string(v[i]);
    }
    return s;
  };
  return "torsion=[" + join(c.torsion) + "] free=[" + join(c.free) + "]";
}

AbelianQuotient::AbelianQuotient(const Lattice& relations) : relations_(relations) {
  const std::size_t n = relations_.ambient_rank();
  const std::size_t r = relations_.rank();
  const auto w = snf_with_inverse(relations_.generator_matrix());

  std::vector<std::size_t> torsion_pos;
  for (std::size_t i = 0; i < r; ++i) {
    // The generators are independent, so all r diagonal entries are nonzero.
    if (w.d(i, i) != 1) {
      torsion_pos.push_back(i);
      factors_.push_back(w.d(i, i));
    }
  }
  free_rank_ = n - r;

  std::vector<std::size_t> positions = torsion_pos;
  for (std::size_t i = r; i < n; ++i) positions.push_back(i);

  projection_ = IntMatrix(n, positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) projection_(i, k) = w.v(i, positions[k]);
    lift_rows_.push_back(w.v_inv.row(positions[k]));
  }
}

AbelianQuotient quotient(const Lattice& l) { return AbelianQuotient(l); }

void AbelianQuotient::check(const CharClass& c) const {
  if (c.torsion.size() != factors_.size() || c.free.size() != free_rank_) {
    throw std::invalid_argument("character class does not belong to this group");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (c.torsion[i] < 0 || c.torsion[i] >= factors_[i]) {
      throw std::invalid_argument("character class torsion coordinate out of range");
    }
  }
}

CharClass AbelianQuotient::reduce(std::span<const Integer> v) const {
  if (v.size() != ambient_rank()) throw std::invalid_argument("reduce: vector has wrong length");
  const IntVector y = v * projection_;
  CharClass c;
  const std::size_t t = factors_.size();
  for (std::size_t i = 0; i < t; ++i) c.torsion.push_back(mod_floor(y[i], factors_[i]));
  c.free.assign(y.begin() + static_cast<std::ptrdiff_t>(t), y.end());
  return c;
}

IntVector AbelianQuotient::lift(const CharClass& c) const {
  check(c);
  IntVector x(ambient_rank());
  auto accumulate = [&](std::size_t k, const Integer& coeff) {
    if (coeff == 0) return;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeff * lift_rows_[k][j];
  };
  for (std::size_t i = 0; i < c.torsion.size(); ++i) accumulate(i, c.torsion[i]);
  for (std::size_t i = 0; i < c.free.size(); ++i) accumulate(c.torsion.size() + i, c.free[i]);
  return x;
}

CharClass AbelianQuotient::zero() const {
  return {IntVector(factors_.size()), IntVector(free_rank_)};
}

CharClass AbelianQuotient::add(const CharClass& a, const CharClass& b) const {
  check(a);
  check(b);
  CharClass c = a;
  for (std::size_t i = 0; i < c.torsion.size(); ++i)
    c.torsion[i] = mod_floor(c.torsion[i] + b.torsion[i], factors_[i]);
  for (std::size_t i = 0; i < c.free.size(); ++i) c.free[i] += b.free[i];
  return c;
}

CharClass AbelianQuotient::scale(const CharClass& a, const Integer& m) const {
  check(a);
  CharClass c = a;
  for (std::size_t i = 0; i < c.torsion.size(); ++i)
    c.torsion[i] = mod_floor(m * c.torsion[i], factors_[i]);
  for (auto& f : c.free) f *= m;
  return c;
}

bool AbelianQuotient::is_zero(const CharClass& c) const {
  check(c);
  return is_zero_vector(c.torsion) && is_zero_vector(c.free);
}

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::logic_error("inverse_mod: arguments are not coprime");
  }
  return inv;
}

}  // namespace

std::optional<MultipleSolution> solve_multiple(const AbelianQuotient& q, const CharClass& delta,
                                               const CharClass& chi) {
  q.check(delta);
  q.check(chi);

  // Free coordinates: m * chi_j = delta_j over Z.
  std::optional<Integer> forced;
  for (std::size_t j = 0; j < chi.free.size(); ++j) {
    const Integer& a = chi.free[j];
    const Integer& b = delta.free[j];
    if (a == 0) {
      if (b != 0) return std::nullopt;
      continue;
    }
    if (mod_floor(b, a) != 0) return std::nullopt;
    const Integer m = b / a;
    if (forced && *forced != m) return std::nullopt;
    forced = m;
  }

  // Torsion coordinates: m * a = b (mod d), merged by generalized CRT into
  // m = m0 (mod period).
  Integer m0 = 0;
  Integer period = 1;
  const auto& factors = q.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Integer& d = factors[i];
    const Integer a = mod_floor(chi.torsion[i], d);
    const Integer b = mod_floor(delta.torsion[i], d);
    const Integer g = gcd_of(a, d);
    if (mod_floor(b, g) != 0) return std::nullopt;
    const Integer dm = d / g;
    if (dm == 1) continue;
    const Integer r = mod_floor((b / g) * inverse_mod(a / g, dm), dm);

    const Integer g2 = gcd_of(period, dm);
    if (mod_floor(r - m0, g2) != 0) return std::nullopt;
    const Integer step = dm / g2;
    const Integer s = mod_floor(((r - m0) / g2) * inverse_mod(mod_floor(period / g2, step), step), step);
    m0 += period * s;
    period = lcm_of(period, dm);
    m0 = mod_floor(m0, period);
  }

  if (forced) {
    if (mod_floor(*forced - m0, period) != 0) return std::nullopt;
    return MultipleSolution{*forced, 0};
  }
  return MultipleSolution{mod_floor(m0, period), period};
}

}  // namespace hcanon
