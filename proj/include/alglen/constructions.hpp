#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alglen/algebra.hpp"
#include "alglen/errors.hpp"
#include "alglen/field.hpp"
#include "alglen/linalg.hpp"

namespace alglen {

/// Multiplication table of a finite group. Identity, inverses and
/// associativity are verified at construction.
struct GroupTable {
  int order = 0;
  std::vector<int> mul;  // order x order, row-major
  std::vector<int> inverse;
  int identity = 0;
  std::vector<std::string> labels;

  int times(int i, int j) const { return mul[static_cast<std::size_t>(i) * order + j]; }

  static GroupTable build(int order, std::vector<int> mul,
                          std::vector<std::string> labels) {
    GroupTable g;
    g.order = order;
    g.mul = std::move(mul);
    g.labels = std::move(labels);
    if (order < 1 || g.mul.size() != static_cast<std::size_t>(order) * order ||
        g.labels.size() != static_cast<std::size_t>(order)) {
      throw DimensionMismatch("group table shapes");
    }
    for (int v : g.mul) {
      if (v < 0 || v >= order) throw Error("group table entry out of range");
    }
    g.identity = -1;
    for (int e = 0; e < order; ++e) {
      bool ok = true;
      for (int x = 0; x < order && ok; ++x) {
        ok = g.times(e, x) == x && g.times(x, e) == x;
      }
      if (ok) {
        g.identity = e;
        break;
      }
    }
    if (g.identity < 0) throw Error("group table has no identity");
    g.inverse.assign(order, -1);
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        if (g.times(x, y) == g.identity && g.times(y, x) == g.identity) {
          g.inverse[x] = y;
          break;
        }
      }
      if (g.inverse[x] < 0) {
        throw Error("group element " + std::to_string(x) + " has no inverse");
      }
    }
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        for (int k = 0; k < order; ++k) {
          if (g.times(g.times(i, j), k) != g.times(i, g.times(j, k))) {
            throw NotAssociative("group table fails associativity at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
          }
        }
      }
    }
    return g;
  }
};

/// Dihedral group of order 2n with elements ordered
/// e, a, ..., a^(n-1), b, ba, ..., ba^(n-1) and relations
/// a^n = e, b^2 = e, ab = ba^(n-1).
inline GroupTable dihedral_group(int n) {
  if (n < 3) throw BadSize("dihedral group needs n >= 3");
  const int order = 2 * n;
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  auto rot = [n](int k) { return ((k % n) + n) % n; };
  auto at = [&](int i, int j) -> int& {
    return mul[static_cast<std::size_t>(i) * order + j];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      at(i, j) = rot(i + j);                 // a^i a^j
      at(i, n + j) = n + rot(j - i);         // a^i (b a^j) = b a^(j-i)
      at(n + i, j) = n + rot(i + j);         // (b a^i) a^j
      at(n + i, n + j) = rot(j - i);         // (b a^i)(b a^j) = a^(j-i)
    }
  }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (int k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "e" : k == 1 ? "a" : "a^" + std::to_string(k));
  }
  for (int k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "b" : k == 1 ? "ba" : "ba^" + std::to_string(k));
  }
  return GroupTable::build(order, std::move(mul), std::move(labels));
}

/// Group algebra FG: basis indexed by group elements, products given by the
/// table, unit at the identity element.
template <FieldCtx F>
Algebra<F> group_algebra(const GroupTable& g, F field) {
  const int d = g.order;
  std::vector<std::vector<Vec<F>>> table(d);
  for (int i = 0; i < d; ++i) {
    table[i].reserve(d);
    for (int j = 0; j < d; ++j) {
      Vec<F> v(d, field.zero());
      v[g.times(i, j)] = field.one();
      table[i].push_back(std::move(v));
    }
  }
  Vec<F> unit(d, field.zero());
  unit[g.identity] = field.one();
  return Algebra<F>::from_structure_constants(std::move(field), g.labels,
                                              std::move(table), std::move(unit));
}

/// The cyclic-shift circulant A_n and the reversal anti-circulant B_n:
/// A has ones at (i, i+1 mod n), B at (i, n-1-i).
template <FieldCtx F>
std::pair<Matrix<F>, Matrix<F>> bicirculant_generators(int n, F field) {
  if (n < 3) throw BadSize("bicirculant generators need n >= 3");
  Matrix<F> a(field, n, n);
  Matrix<F> b(field, n, n);
  for (int i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = field.one();
    b(i, n - 1 - i) = field.one();
  }
  return {std::move(a), std::move(b)};
}

/// Span of E, A, A^2, ..., A^(n-1): all circulant matrices, flattened.
template <FieldCtx F>
Subspace<F> circulant_span(int n, F field) {
  auto [a, b] = bicirculant_generators(n, field);
  Subspace<F> sp(field, n * n);
  Matrix<F> p = Matrix<F>::identity(field, n);
  for (int k = 0; k < n; ++k) {
    sp.insert(p.flatten());
    p = p.mul(a);
  }
  return sp;
}

/// Span of B, BA, ..., BA^(n-1): all anti-circulant matrices, flattened.
template <FieldCtx F>
Subspace<F> anticirculant_span(int n, F field) {
  auto [a, b] = bicirculant_generators(n, field);
  Subspace<F> sp(field, n * n);
  Matrix<F> p = b;
  for (int k = 0; k < n; ++k) {
    sp.insert(p.flatten());
    p = p.mul(a);
  }
  return sp;
}

/// The algebra of bicirculants: the unital subalgebra of M_n(F) generated
/// by A_n and B_n. dim = 2n-1 for odd n, 2n-2 for even n.
template <FieldCtx F>
MatrixRealization<F> bicirculant_algebra(int n, F field) {
  auto [a, b] = bicirculant_generators(n, field);
  return algebra_from_matrix_generators(field, n, {a, b});
}

/// Full matrix algebra M_k(F) over the matrix-unit basis, ordered row-major;
/// E_ij E_pq = delta_jp E_iq.
template <FieldCtx F>
MatrixRealization<F> full_matrix_algebra(int k, F field) {
  if (k < 1) throw BadSize("matrix algebra needs k >= 1");
  const int d = k * k;
  std::vector<std::string> labels;
  std::vector<Matrix<F>> basis;
  labels.reserve(d);
  basis.reserve(d);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      Matrix<F> m(field, k, k);
      m(i, j) = field.one();
      basis.push_back(std::move(m));
    }
  }
  std::vector<std::vector<Vec<F>>> table(d);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto& row = table[static_cast<std::size_t>(i) * k + j];
      row.reserve(d);
      for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
          Vec<F> v(d, field.zero());
          if (j == p) v[static_cast<std::size_t>(i) * k + q] = field.one();
          row.push_back(std::move(v));
        }
      }
    }
  }
  Vec<F> unit(d, field.zero());
  for (int i = 0; i < k; ++i) unit[static_cast<std::size_t>(i) * k + i] = field.one();
  MatrixRealization<F> r{
      Algebra<F>::from_structure_constants(field, std::move(labels),
                                           std::move(table), std::move(unit)),
      std::move(basis), k};
  return r;
}

/// An algebra homomorphism into M_n(F), given by the image matrix of each
/// domain basis element. Verified multiplicative and unital at construction.
template <FieldCtx F>
struct Representation {
  Algebra<F> domain;
  int matrix_size = 0;
  std::vector<Matrix<F>> images;

  /// The underlying linear map F^dim -> F^(n^2), columns = flattened images.
  LinearMap<F> linear_part() const {
    const F& f = domain.field();
    Matrix<F> m(f, matrix_size * matrix_size, domain.dim());
    for (int j = 0; j < domain.dim(); ++j) {
      Vec<F> col = images[j].flatten();
      for (int i = 0; i < matrix_size * matrix_size; ++i) m(i, j) = col[i];
    }
    return LinearMap<F>(std::move(m));
  }

  Matrix<F> apply(const Vec<F>& v) const {
    const F& f = domain.field();
    Matrix<F> acc(f, matrix_size, matrix_size);
    for (int j = 0; j < domain.dim(); ++j) {
      if (f.is_zero(v[j])) continue;
      for (int r = 0; r < matrix_size; ++r) {
        for (int c = 0; c < matrix_size; ++c) {
          acc(r, c) = f.add(acc(r, c), f.mul(v[j], images[j](r, c)));
        }
      }
    }
    return acc;
  }
};

template <FieldCtx F>
void validate_representation(const Representation<F>& rep) {
  const Algebra<F>& alg = rep.domain;
  if (static_cast<int>(rep.images.size()) != alg.dim()) {
    throw DimensionMismatch("one image matrix per basis element required");
  }
  if (!(rep.apply(alg.unit()) ==
        Matrix<F>::identity(alg.field(), rep.matrix_size))) {
    throw Error("representation does not send the unit to the identity");
  }
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      if (!(rep.images[i].mul(rep.images[j]) ==
            rep.apply(alg.basis_product(i, j)))) {
        throw Error("representation fails multiplicativity on basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

/// The bicirculant representation of the dihedral group algebra FD_n:
/// a maps to A_n and b maps to the reflection matrix fixing vertex
/// floor(n/2) (B_n for odd n, B_n A_n for even n), so b a^j maps to that
/// reflection times A_n^j. The image is the bicirculant algebra; the
/// kernel has dimension 1 for odd n and 2 for even n.
template <FieldCtx F>
Representation<F> bicirculant_representation(int n, F field) {
  if (n < 3) throw BadSize("bicirculant representation needs n >= 3");
  auto [a, b] = bicirculant_generators(n, field);
  const Matrix<F> reflection = n % 2 == 1 ? b : b.mul(a);
  Representation<F> rep{group_algebra(dihedral_group(n), field), n, {}};
  rep.images.reserve(2 * n);
  Matrix<F> power = Matrix<F>::identity(field, n);
  std::vector<Matrix<F>> rotation_powers;
  for (int j = 0; j < n; ++j) {
    rotation_powers.push_back(power);
    power = power.mul(a);
  }
  for (int j = 0; j < n; ++j) rep.images.push_back(rotation_powers[j]);
  for (int j = 0; j < n; ++j) {
    rep.images.push_back(reflection.mul(rotation_powers[j]));
  }
  validate_representation(rep);
  return rep;
}

/// Canonical basis of the kernel of the representation's linear part.
template <FieldCtx F>
Subspace<F> representation_kernel(const Representation<F>& rep) {
  return kernel_basis(rep.linear_part());
}

}  // namespace alglen
