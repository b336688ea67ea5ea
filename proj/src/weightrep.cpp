#include "hcanon/weightrep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hcanon {

namespace {

// All exponent vectors of length n summing to k, decreasing lexicographically.
void exponents(std::size_t n, std::size_t k, BasisLabel& prefix, std::vector<BasisLabel>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(k);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t a = k + 1; a-- > 0;) {
    prefix.push_back(a);
    exponents(n, k - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WeightRep::WeightRep(RepKind kind, std::size_t n, std::size_t degree)
    : kind_(kind), n_(n), degree_(degree) {
  switch (kind_) {
    case RepKind::standard:
    case RepKind::dual:
      for (std::size_t i = 0; i < n_; ++i) labels_.push_back({i});
      break;
    case RepKind::wedge2:
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) labels_.push_back({i, j});
      break;
    case RepKind::sym: {
      BasisLabel prefix;
      exponents(n_, degree_, prefix, labels_);
      break;
    }
  }
  for (std::size_t b = 0; b < labels_.size(); ++b) {
    const auto& l = labels_[b];
    IntVector w(n_);
    switch (kind_) {
      case RepKind::standard: w[l[0]] = 1; break;
      case RepKind::dual: w[l[0]] = -1; break;
      case RepKind::wedge2: w[l[0]] = 1; w[l[1]] = 1; break;
      case RepKind::sym:
        for (std::size_t i = 0; i < n_; ++i) w[i] = static_cast<unsigned long>(l[i]);
        break;
    }
    weights_.push_back(std::move(w));
    index_.emplace(l, b);
  }
}

WeightRep WeightRep::make(RepKind kind, std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("representation size n must be at least 1");
  switch (kind) {
    case RepKind::standard:
    case RepKind::dual: return WeightRep(kind, n, 1);
    case RepKind::wedge2: return WeightRep(kind, n, 2);
    case RepKind::sym:
      if (k < 1) throw std::invalid_argument("symmetric power degree k must be at least 1");
      return WeightRep(kind, n, k);
  }
  throw std::invalid_argument("unknown representation kind");
}

WeightRep make_rep(RepKind kind, std::size_t n, std::size_t k) { return WeightRep::make(kind, n, k); }

std::optional<std::size_t> WeightRep::index_of(const BasisLabel& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string WeightRep::name() const {
  switch (kind_) {
    case RepKind::standard: return "standard";
    case RepKind::dual: return "dual";
    case RepKind::wedge2: return "wedge2";
    case RepKind::sym: return "sym(" + std::to_string(degree_) + ")";
  }
  return "?";
}

std::string WeightRep::label_text(std::size_t b) const {
  const auto& l = label(b);
  const std::size_t offset = kind_ == RepKind::sym ? 0 : 1;
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(l[i] + offset);
  }
  return s + "]";
}

RepVector::RepVector(std::shared_ptr<const WeightRep> rep) : rep_(std::move(rep)) {
  if (!rep_) throw std::invalid_argument("RepVector: null representation");
}

Rational RepVector::coefficient(std::size_t b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

RepVector& RepVector::add_term(std::size_t b, const Rational& c) {
  if (b >= rep_->dim()) throw std::invalid_argument("RepVector: basis index out of range");
  if (hcanon::is_zero(c)) return *this;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (hcanon::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

RepVector RepVector::scaled(const Rational& s) const {
  RepVector out(rep_);
  if (hcanon::is_zero(s)) return out;
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, c * s);
  return out;
}

RatVector RepVector::dense() const {
  RatVector x(rep_->dim());
  for (const auto& [b, c] : terms_) x[b] = c;
  return x;
}

std::string RepVector::describe() const {
  std::string s = rep_->name() + " n=" + std::to_string(rep_->n()) + " v=";
  if (terms_.empty()) return s + "0";
  const Rational lead = terms_.begin()->second;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    const Rational normalized = c / lead;
    if (!first) s += sgn(normalized) < 0 ? " - " : " + ";
    else if (sgn(normalized) < 0) s += "-";
    first = false;
    const Rational mag = abs(normalized);
    if (mag != 1) s += to_string(mag) + "*";
    s += rep_->label_text(b);
  }
  return s;
}

RepVector operator+(const RepVector& a, const RepVector& b) {
  if (!(a.rep() == b.rep())) throw std::invalid_argument("RepVector sum: different representations");
  RepVector out = a;
  for (const auto& [i, c] : b.terms()) out.add_term(i, c);
  return out;
}

RepVector operator-(const RepVector& a, const RepVector& b) { return a + b.scaled(-1); }

namespace {

// Image of basis vector b under x, accumulated into out with weight `coeff`.
void act_on_basis(const WeightRep& rep, const RatMatrix& x, std::size_t b, const Rational& coeff,
                  RepVector& out) {
  const std::size_t n = rep.n();
  const auto& l = rep.label(b);
  switch (rep.kind()) {
    case RepKind::standard: {
      const std::size_t j = l[0];
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(x(i, j))) out.add_term(i, coeff * x(i, j));
      }
      break;
    }
    case RepKind::dual: {
      const std::size_t j = l[0];
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(x(j, i))) out.add_term(i, -coeff * x(j, i));
      }
      break;
    }
    case RepKind::wedge2: {
      // X(e_a ^ e_c) = (X e_a) ^ e_c + e_a ^ (X e_c), with e_j ^ e_i = -b_ij.
      auto wedge = [&](std::size_t p, std::size_t q, const Rational& c) {
        if (p == q) return;
        if (p < q) out.add_term(*rep.index_of({p, q}), c);
        else out.add_term(*rep.index_of({q, p}), -c);
      };
      const std::size_t a = l[0];
      const std::size_t c = l[1];
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(x(i, a))) wedge(i, c, coeff * x(i, a));
        if (!is_zero(x(i, c))) wedge(a, i, coeff * x(i, c));
      }
      break;
    }
    case RepKind::sym: {
      // Derivation on monomials: X x^a = sum_j a_j x^(a - e_j) (X e_j).
      BasisLabel m = l;
      for (std::size_t j = 0; j < n; ++j) {
        if (l[j] == 0) continue;
        const Rational aj = static_cast<unsigned long>(l[j]);
        for (std::size_t i = 0; i < n; ++i) {
          if (is_zero(x(i, j))) continue;
          m[j] -= 1;
          m[i] += 1;
          out.add_term(*rep.index_of(m), coeff * aj * x(i, j));
          m[i] -= 1;
          m[j] += 1;
        }
      }
      break;
    }
  }
}

}  // namespace

RepVector act(const WeightRep& rep, const RatMatrix& x, const RepVector& v) {
  if (x.rows() != rep.n() || x.cols() != rep.n()) throw std::invalid_argument("act: matrix is not n x n");
  if (!(v.rep() == rep)) throw std::invalid_argument("act: vector belongs to another representation");
  RepVector out(v.rep_ptr());
  for (const auto& [b, c] : v.terms()) act_on_basis(rep, x, b, c, out);
  return out;
}

std::vector<IntVector> support_weights(const RepVector& v) {
  if (v.is_zero()) throw ValidationError("support_weights: zero vector has no support");
  std::vector<IntVector> out;
  for (const auto& [b, c] : v.terms()) {
    const auto& w = v.rep().weight_of(b);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

Lattice stabilizer_torus_lattice(const RepVector& v) {
  return Lattice(v.rep().n(), support_weights(v));
}

}  // namespace hcanon
