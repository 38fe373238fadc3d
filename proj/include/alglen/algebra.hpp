#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alglen/errors.hpp"
#include "alglen/field.hpp"
#include "alglen/linalg.hpp"
#include "alglen/parallel.hpp"

namespace alglen {

/// A finite-dimensional associative unital algebra presented by structure
/// constants: table[i][j] holds the coordinates of e_i * e_j in the basis.
/// The constructor verifies unitality on all basis elements and
/// associativity on all basis triples.
template <FieldCtx F>
class Algebra {
 public:
  using Elem = typename F::Elem;

  static Algebra from_structure_constants(F field,
                                          std::vector<std::string> labels,
                                          std::vector<std::vector<Vec<F>>> table,
                                          Vec<F> unit) {
    Algebra a(std::move(field), std::move(labels), std::move(table),
              std::move(unit));
    a.validate();
    return a;
  }

  int dim() const { return dim_; }
  const F& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<F>& unit() const { return unit_; }

  /// Coordinates of e_i * e_j.
  const Vec<F>& basis_product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }

  Vec<F> zero_vec() const { return Vec<F>(dim_, field_.zero()); }

  Vec<F> basis_vec(int i) const {
    Vec<F> v = zero_vec();
    v[i] = field_.one();
    return v;
  }

  /// Bilinear extension of the structure constants.
  Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const {
    if (static_cast<int>(a.size()) != dim_ ||
        static_cast<int>(b.size()) != dim_) {
      throw DimensionMismatch("element coordinates do not match algebra");
    }
    Vec<F> r = zero_vec();
    for (int i = 0; i < dim_; ++i) {
      if (field_.is_zero(a[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (field_.is_zero(b[j])) continue;
        const Elem c = field_.mul(a[i], b[j]);
        for (const auto& [k, s] : sparse_[static_cast<std::size_t>(i) * dim_ + j]) {
          r[k] = field_.add(r[k], field_.mul(c, s));
        }
      }
    }
    return r;
  }

  Vec<F> add(const Vec<F>& a, const Vec<F>& b) const {
    Vec<F> r = zero_vec();
    for (int i = 0; i < dim_; ++i) r[i] = field_.add(a[i], b[i]);
    return r;
  }

  Vec<F> sub(const Vec<F>& a, const Vec<F>& b) const {
    Vec<F> r = zero_vec();
    for (int i = 0; i < dim_; ++i) r[i] = field_.sub(a[i], b[i]);
    return r;
  }

  Vec<F> scale(const Elem& c, const Vec<F>& a) const {
    Vec<F> r = zero_vec();
    for (int i = 0; i < dim_; ++i) r[i] = field_.mul(c, a[i]);
    return r;
  }

  /// Number of elements when the field is finite and q^dim fits the budget.
  std::int64_t element_count(std::int64_t budget) const {
    auto q = field_.size();
    if (!q) throw InfiniteField("cannot enumerate elements over Q");
    std::int64_t count = 1;
    for (int i = 0; i < dim_; ++i) {
      if (count > budget / *q) {
        throw BudgetExceeded("element enumeration needs " +
                             std::to_string(*q) + "^" + std::to_string(dim_) +
                             " elements, over budget " + std::to_string(budget));
      }
      count *= *q;
    }
    return count;
  }

  /// Element with enumeration index i in odometer order (last coordinate
  /// varies fastest). Fixed so search witnesses are reproducible.
  Vec<F> element_from_index(std::int64_t idx) const {
    auto q = field_.size();
    if (!q) throw InfiniteField("cannot index elements over Q");
    Vec<F> v(dim_, field_.zero());
    for (int i = dim_ - 1; i >= 0; --i) {
      v[i] = field_.from_index(idx % *q);
      idx /= *q;
    }
    return v;
  }

  std::string format_element(const Vec<F>& v) const {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
      if (field_.is_zero(v[i])) continue;
      if (!out.empty()) out += " + ";
      if (!field_.eq(v[i], field_.one())) out += field_.str(v[i]) + "*";
      out += labels_[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  Algebra(F field, std::vector<std::string> labels,
          std::vector<std::vector<Vec<F>>> table, Vec<F> unit)
      : field_(std::move(field)),
        dim_(static_cast<int>(table.size())),
        labels_(std::move(labels)),
        unit_(std::move(unit)) {
    if (dim_ == 0) throw DimensionMismatch("algebra must have dimension >= 1");
    if (static_cast<int>(labels_.size()) != dim_) {
      throw DimensionMismatch("label count does not match dimension");
    }
    if (static_cast<int>(unit_.size()) != dim_) {
      throw DimensionMismatch("unit coordinates do not match dimension");
    }
    table_.reserve(static_cast<std::size_t>(dim_) * dim_);
    for (auto& row : table) {
      if (static_cast<int>(row.size()) != dim_) {
        throw DimensionMismatch("structure-constant table is not dim x dim");
      }
      for (auto& entry : row) {
        if (static_cast<int>(entry.size()) != dim_) {
          throw DimensionMismatch("structure-constant entry has wrong length");
        }
        table_.push_back(std::move(entry));
      }
    }
    sparse_.resize(table_.size());
    for (std::size_t t = 0; t < table_.size(); ++t) {
      for (int k = 0; k < dim_; ++k) {
        if (!field_.is_zero(table_[t][k])) sparse_[t].emplace_back(k, table_[t][k]);
      }
    }
  }

  void validate() const {
    for (int i = 0; i < dim_; ++i) {
      const Vec<F> e = basis_vec(i);
      if (mul(unit_, e) != e || mul(e, unit_) != e) {
        throw NotUnital("unit fails on basis element " + std::to_string(i) +
                        " (" + labels_[i] + ")");
      }
    }
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        const Vec<F>& ij = basis_product(i, j);
        for (int k = 0; k < dim_; ++k) {
          // (e_i e_j) e_k vs e_i (e_j e_k)
          Vec<F> lhs = mul(ij, basis_vec(k));
          Vec<F> rhs = mul(basis_vec(i), basis_product(j, k));
          if (lhs != rhs) {
            throw NotAssociative("associativity fails on basis triple (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
          }
        }
      }
    }
  }

  F field_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Vec<F>> table_;  // dim*dim entries, row-major
  std::vector<std::vector<std::pair<int, Elem>>> sparse_;
  Vec<F> unit_;
};

/// An algebra element bound to its parent algebra.
template <FieldCtx F>
class Element {
 public:
  Element(const Algebra<F>* alg, Vec<F> coords)
      : alg_(alg), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != alg_->dim()) {
      throw DimensionMismatch("element coordinates do not match algebra");
    }
  }

  const Algebra<F>* algebra() const { return alg_; }
  const Vec<F>& coords() const { return coords_; }

  friend Element operator*(const Element& a, const Element& b) {
    if (a.alg_ != b.alg_) {
      throw AlgebraMismatch("elements of different algebras");
    }
    return Element(a.alg_, a.alg_->mul(a.coords_, b.coords_));
  }

  friend Element operator+(const Element& a, const Element& b) {
    if (a.alg_ != b.alg_) {
      throw AlgebraMismatch("elements of different algebras");
    }
    return Element(a.alg_, a.alg_->add(a.coords_, b.coords_));
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.coords_ == b.coords_;
  }

 private:
  const Algebra<F>* alg_;
  Vec<F> coords_;
};

template <FieldCtx F>
Element<F> element_mul(const Element<F>& a, const Element<F>& b) {
  return a * b;
}

/// Monic annihilating polynomial of least degree; coeffs[i] multiplies x^i.
template <FieldCtx F>
struct MinPoly {
  std::vector<typename F::Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Vec<F> evaluate(const Algebra<F>& alg, const Vec<F>& t) const {
    Vec<F> acc = alg.zero_vec();
    Vec<F> power = alg.unit();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      acc = alg.add(acc, alg.scale(coeffs[i], power));
      if (i + 1 < coeffs.size()) power = alg.mul(t, power);
    }
    return acc;
  }
};

/// Least k with t^k dependent on earlier powers, plus the dependency read
/// off an echelon of rows [power | polynomial] that are reduced only on
/// the coordinate half. Row operations keep each poly half equal to the
/// combination that produced the coordinate half, so when the coordinate
/// half cancels the poly half is a monic annihilator.
template <FieldCtx F>
MinPoly<F> minimal_polynomial(const Algebra<F>& alg, const Vec<F>& t) {
  const F& f = alg.field();
  const int d = alg.dim();
  const int width = d + d + 2;  // power coords | poly coefficients
  std::vector<Vec<F>> rows;
  std::vector<int> pivots;
  Vec<F> power = alg.unit();
  for (int k = 0; k <= d; ++k) {
    Vec<F> ext(width, f.zero());
    for (int i = 0; i < d; ++i) ext[i] = power[i];
    ext[d + k] = f.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = ext[pivots[r]];
      if (!f.is_zero(c)) vec_submul(f, ext, c, rows[r]);
    }
    int lead = -1;
    for (int j = 0; j < d; ++j) {
      if (!f.is_zero(ext[j])) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      // reduction never scales the x^k entry, so the tail is monic
      MinPoly<F> p;
      p.coeffs.assign(ext.begin() + d, ext.begin() + d + k + 1);
      return p;
    }
    const auto scale = f.inv(ext[lead]);
    for (auto& x : ext) x = f.mul(scale, x);
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, lead);
    rows.insert(rows.begin() + idx, std::move(ext));
    power = alg.mul(t, power);
  }
  throw Error("minimal polynomial not found within dim+1 powers");
}

template <FieldCtx F>
MinPoly<F> minimal_polynomial(const Element<F>& t) {
  return minimal_polynomial(*t.algebra(), t.coords());
}

/// Largest minimal-polynomial degree over a set of elements, with a witness.
template <FieldCtx F>
struct MaxMinPolyDegree {
  int degree = 0;
  bool exact = false;  // true only for full enumeration
  Vec<F> witness;
  int generic_upper = 0;  // min(dim, matrix size when realized by matrices)
};

/// Exact m over a finite field by enumerating all q^dim elements in
/// odometer order. The witness is the first element attaining the maximum.
template <FieldCtx F>
MaxMinPolyDegree<F> m_by_enumeration(const Algebra<F>& alg,
                                     std::int64_t budget = std::int64_t{1} << 20,
                                     std::optional<int> matrix_size = {},
                                     int threads = worker_count()) {
  const std::int64_t count = alg.element_count(budget);
  struct Slot {
    int degree = 0;
    std::int64_t index = -1;
  };
  const int chunk_count = threads > 1 ? threads * 8 : 1;
  const std::int64_t chunk = (count + chunk_count - 1) / chunk_count;
  std::vector<Slot> slots(chunk_count);
  parallel_tasks(chunk_count, threads, [&](std::int64_t c) {
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    Slot local;
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      Vec<F> t = alg.element_from_index(idx);
      int deg = minimal_polynomial(alg, t).degree();
      if (deg > local.degree) local = {deg, idx};
    }
    slots[c] = local;
  });
  Slot best;
  for (const Slot& s : slots) {
    if (s.index >= 0 && (s.degree > best.degree ||
                         (s.degree == best.degree && best.index > s.index))) {
      best = s;
    }
  }
  MaxMinPolyDegree<F> r;
  r.degree = best.degree;
  r.exact = true;
  r.witness = alg.element_from_index(best.index);
  r.generic_upper = matrix_size ? std::min(alg.dim(), *matrix_size) : alg.dim();
  return r;
}

/// Lower bound for m from `trials` seeded random elements.
template <FieldCtx F>
MaxMinPolyDegree<F> m_by_sampling(const Algebra<F>& alg, std::int64_t trials,
                                  std::uint64_t seed,
                                  std::optional<int> matrix_size = {}) {
  const F& f = alg.field();
  MaxMinPolyDegree<F> r;
  r.exact = false;
  r.generic_upper = matrix_size ? std::min(alg.dim(), *matrix_size) : alg.dim();
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    Vec<F> v(alg.dim(), f.zero());
    for (auto& x : v) x = f.random(rng);
    int deg = minimal_polynomial(alg, v).degree();
    if (deg > r.degree) {
      r.degree = deg;
      r.witness = v;
    }
  }
  return r;
}

/// The unital matrix subalgebra generated by `gens`, with the concrete
/// matrices realizing each abstract basis element.
template <FieldCtx F>
struct MatrixRealization {
  Algebra<F> algebra;
  std::vector<Matrix<F>> basis;
  int matrix_size = 0;

  /// Coordinates of a matrix in the abstract basis; nullopt if outside.
  std::optional<Vec<F>> express(const Matrix<F>& m) const {
    Subspace<F> sp(algebra.field(), matrix_size * matrix_size);
    for (const auto& b : basis) sp.insert(b.flatten());
    return sp.coordinates(m.flatten());
  }
};

/// Closes span{E} under left/right multiplication by the generators, then
/// reads structure constants off the echelonized basis. Always terminates:
/// the span grows inside M_n(F), so dim <= n^2.
template <FieldCtx F>
MatrixRealization<F> algebra_from_matrix_generators(F field, int n,
                                                    const std::vector<Matrix<F>>& gens) {
  if (gens.empty()) throw Error("need at least one matrix generator");
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) {
      throw DimensionMismatch("generator is not n x n");
    }
    if (!(g.field().desc() == field.desc())) {
      throw FieldMismatch("generator over a different field");
    }
  }
  Subspace<F> sp(field, n * n);
  std::deque<Matrix<F>> queue;
  const Matrix<F> e = Matrix<F>::identity(field, n);
  sp.insert(e.flatten());
  queue.push_back(e);
  while (!queue.empty()) {
    Matrix<F> m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      for (Matrix<F> cand : {g.mul(m), m.mul(g)}) {
        if (sp.insert(cand.flatten())) queue.push_back(std::move(cand));
      }
    }
  }
  const int d = sp.dim();
  std::vector<Matrix<F>> basis;
  basis.reserve(d);
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    basis.push_back(Matrix<F>::from_flat(field, n, n, sp.basis()[i]));
    labels.push_back("m" + std::to_string(i));
  }
  std::vector<std::vector<Vec<F>>> table(d, std::vector<Vec<F>>());
  for (int i = 0; i < d; ++i) {
    table[i].reserve(d);
    for (int j = 0; j < d; ++j) {
      auto coords = sp.coordinates(basis[i].mul(basis[j]).flatten());
      if (!coords) throw Error("span not multiplicatively closed");
      table[i].push_back(std::move(*coords));
    }
  }
  auto unit = sp.coordinates(e.flatten());
  if (!unit) throw Error("identity escaped the span");
  MatrixRealization<F> r{
      Algebra<F>::from_structure_constants(field, std::move(labels),
                                           std::move(table), std::move(*unit)),
      std::move(basis), n};
  return r;
}

}  // namespace alglen
