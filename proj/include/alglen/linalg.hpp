#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alglen/errors.hpp"
#include "alglen/field.hpp"

namespace alglen {

/// Coordinate vector over a field context.
template <FieldCtx F>
using Vec = std::vector<typename F::Elem>;

template <FieldCtx F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) return false;
  }
  return true;
}

template <FieldCtx F>
Vec<F> vec_scaled(const F& f, const Vec<F>& v, const typename F::Elem& c) {
  Vec<F> r(v.size(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(c, v[i]);
  return r;
}

/// y -= c * x
template <FieldCtx F>
void vec_submul(const F& f, Vec<F>& y, const typename F::Elem& c,
                const Vec<F>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!f.is_zero(x[i])) y[i] = f.sub(y[i], f.mul(c, x[i]));
  }
}

/// Dense row-major matrix with exact entries.
template <FieldCtx F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
  }

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix mul(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const Elem& aik = (*this)(i, k);
        if (field_.is_zero(aik)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (field_.is_zero(o(k, j))) continue;
          r(i, j) = field_.add(r(i, j), field_.mul(aik, o(k, j)));
        }
      }
    }
    return r;
  }

  Matrix add(const Matrix& o) const {
    check_field(o);
    check_shape(o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
  }

  Matrix sub(const Matrix& o) const {
    check_field(o);
    check_shape(o);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
  }

  Matrix pow(int e) const {
    if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
    if (e < 0) throw DimensionMismatch("negative matrix power");
    Matrix r = identity(field_, rows_);
    for (int i = 0; i < e; ++i) r = r.mul(*this);
    return r;
  }

  /// Row-major flattening; the fixed coordinate order for M_n(F) as F^(n^2).
  Vec<F> flatten() const { return a_; }

  static Matrix from_flat(F field, int rows, int cols, const Vec<F>& v) {
    if (static_cast<std::size_t>(rows) * cols != v.size()) {
      throw DimensionMismatch("flat vector does not match matrix shape");
    }
    Matrix m(std::move(field), rows, cols);
    m.a_ = v;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.mul(b); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_.desc() == b.field_.desc() && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_field(const Matrix& o) const {
    if (!(field_.desc() == o.field_.desc())) {
      throw FieldMismatch("matrices over different fields");
    }
  }
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("matrix shapes differ");
    }
  }

  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

/// Linear subspace of F^n kept in reduced row-echelon form: pivot columns
/// strictly increase, pivot entries are 1, and a pivot column is zero in
/// every other basis row. Two subspaces are equal as sets iff their basis
/// rows are identical, so operator== is structural.
template <FieldCtx F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace(F field, int ambient)
      : field_(std::move(field)), ambient_(ambient) {
    if (ambient < 0) throw DimensionMismatch("negative ambient dimension");
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const F& field() const { return field_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Inserts v into the span. Returns true iff the dimension grew.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    int lead = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!field_.is_zero(r[j])) {
        lead = j;
        break;
      }
    }
    if (lead < 0) return false;
    Elem scale = field_.inv(r[lead]);
    for (auto& x : r) x = field_.mul(scale, x);
    // clear the new pivot column from existing rows
    for (auto& row : rows_) {
      const Elem c = row[lead];
      if (!field_.is_zero(c)) vec_submul(field_, row, c, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  bool contains(const Vec<F>& v) const {
    return vec_is_zero(field_, reduce(v));
  }

  /// Canonical residue of v modulo the subspace (zero in all pivot columns).
  Vec<F> reduce(Vec<F> v) const {
    if (static_cast<int>(v.size()) != ambient_) {
      throw DimensionMismatch("vector length does not match ambient dimension");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (!field_.is_zero(c)) vec_submul(field_, v, c, rows_[i]);
    }
    return v;
  }

  /// Coefficients of v in the basis rows, or nullopt if v is outside.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
      throw DimensionMismatch("vector length does not match ambient dimension");
    }
    Vec<F> coeffs;
    coeffs.reserve(rows_.size());
    Vec<F> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = r[pivots_[i]];
      coeffs.push_back(c);
      if (!field_.is_zero(c)) vec_submul(field_, r, c, rows_[i]);
    }
    if (!vec_is_zero(field_, r)) return std::nullopt;
    return coeffs;
  }

  std::string dump() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
      os << "[";
      for (int j = 0; j < ambient_; ++j) {
        if (j) os << " ";
        os << field_.str(row[j]);
      }
      os << "]\n";
    }
    return os.str();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_.desc() == b.field_.desc() && a.ambient_ == b.ambient_ &&
           a.rows_ == b.rows_;
  }

 private:
  F field_;
  int ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

/// Linear map F^domain -> F^codomain stored as a codomain x domain matrix.
template <FieldCtx F>
class LinearMap {
 public:
  explicit LinearMap(Matrix<F> m) : m_(std::move(m)) {}

  int domain_dim() const { return m_.cols(); }
  int codomain_dim() const { return m_.rows(); }
  const Matrix<F>& matrix() const { return m_; }
  const F& field() const { return m_.field(); }

  Vec<F> apply(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != m_.cols()) {
      throw DimensionMismatch("vector length does not match map domain");
    }
    const F& f = m_.field();
    Vec<F> r(m_.rows(), f.zero());
    for (int i = 0; i < m_.rows(); ++i) {
      for (int j = 0; j < m_.cols(); ++j) {
        if (f.is_zero(m_(i, j)) || f.is_zero(v[j])) continue;
        r[i] = f.add(r[i], f.mul(m_(i, j), v[j]));
      }
    }
    return r;
  }

 private:
  Matrix<F> m_;
};

template <FieldCtx F>
int rank(const LinearMap<F>& map) {
  Subspace<F> rows(map.field(), map.domain_dim());
  for (int i = 0; i < map.codomain_dim(); ++i) {
    Vec<F> row(map.domain_dim());
    for (int j = 0; j < map.domain_dim(); ++j) row[j] = map.matrix()(i, j);
    rows.insert(row);
  }
  return rows.dim();
}

/// Canonical basis of {v : map(v) = 0}; dim = domain - rank.
template <FieldCtx F>
Subspace<F> kernel_basis(const LinearMap<F>& map) {
  const F& f = map.field();
  const int n = map.domain_dim();
  // echelonize the row space, then read the kernel off the free columns
  Subspace<F> rows(f, n);
  for (int i = 0; i < map.codomain_dim(); ++i) {
    Vec<F> row(n);
    for (int j = 0; j < n; ++j) row[j] = map.matrix()(i, j);
    rows.insert(row);
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : rows.pivots()) is_pivot[p] = true;
  Subspace<F> ker(f, n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < rows.basis().size(); ++r) {
      v[rows.pivots()[r]] = f.neg(rows.basis()[r][free]);
    }
    ker.insert(v);
  }
  return ker;
}

/// a ∩ b via the kernel of the stacked-coefficients map
/// (alpha, beta) |-> sum alpha_i a_i - sum beta_j b_j.
template <FieldCtx F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (!(a.field().desc() == b.field().desc())) {
    throw FieldMismatch("subspaces over different fields");
  }
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("subspaces in different ambient spaces");
  }
  const F& f = a.field();
  const int ra = a.dim(), rb = b.dim();
  Matrix<F> m(f, a.ambient(), ra + rb);
  for (int k = 0; k < ra; ++k) {
    for (int i = 0; i < a.ambient(); ++i) m(i, k) = a.basis()[k][i];
  }
  for (int k = 0; k < rb; ++k) {
    for (int i = 0; i < a.ambient(); ++i) m(i, ra + k) = f.neg(b.basis()[k][i]);
  }
  Subspace<F> ker = kernel_basis(LinearMap<F>(std::move(m)));
  Subspace<F> result(f, a.ambient());
  for (const auto& coeffs : ker.basis()) {
    Vec<F> v(a.ambient(), f.zero());
    for (int k = 0; k < ra; ++k) {
      if (f.is_zero(coeffs[k])) continue;
      for (int i = 0; i < a.ambient(); ++i) {
        v[i] = f.add(v[i], f.mul(coeffs[k], a.basis()[k][i]));
      }
    }
    result.insert(v);
  }
  return result;
}

}  // namespace alglen
