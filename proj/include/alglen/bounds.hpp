#pragma once

#include <optional>
#include <string>

#include "alglen/errors.hpp"
#include "alglen/field.hpp"

namespace alglen {

/// Greatest integer satisfying l <= max(m - 1, dim/2).
inline int ldm_bound(int dim, int m) {
  if (dim < 1 || m < 1) throw Error("ldm_bound needs dim >= 1, m >= 1");
  return std::max(m - 1, dim / 2);
}

namespace detail {

/// k < f(d, m) where f(d,m) = m*sqrt(2d/(m-1) + 1/4) + m/2 - 2, decided
/// exactly: compare (k + 2 - m/2)^2 against m^2 (2d/(m-1) + 1/4) so that
/// integer-valued f does not flip the strict inequality.
inline bool below_pappacena(int k, int d, int m) {
  const BigRational lhs = BigRational(2 * k + 4 - m) / 2;
  if (lhs < 0) return true;
  const BigRational radicand =
      BigRational(2 * d) / (m - 1) + BigRational(1, 4);
  return lhs * lhs < BigRational(m) * m * radicand;
}

}  // namespace detail

/// Greatest integer strictly below f(dim, m); the length bound is strict.
inline int pappacena_bound(int dim, int m) {
  if (m < 2) throw BadM("pappacena_bound needs m >= 2");
  if (dim < 1) throw Error("pappacena_bound needs dim >= 1");
  int k = 0;
  while (detail::below_pappacena(k + 1, dim, m)) ++k;
  return k;
}

/// l <= m whenever dim <= m + 4 and m >= 3; absent outside that window.
inline std::optional<int> markova_bound(int dim, int m) {
  if (dim <= m + 4 && m >= 3) return m;
  return std::nullopt;
}

/// Along a surjection A -> B: l(A) <= l(B) + dim A - dim B.
inline int surjection_bound(int l_codomain, int dim_domain, int dim_codomain) {
  if (dim_codomain < 1 || dim_domain < dim_codomain || l_codomain < 0) {
    throw BadDims("surjection bound needs dim_domain >= dim_codomain >= 1");
  }
  return l_codomain + dim_domain - dim_codomain;
}

/// Upper bound for m(FD_n): n+1 for odd n, n+2 for even n.
inline int mdn_bound(int n) {
  if (n < 3) throw BadSize("mdn_bound needs n >= 3");
  return n % 2 == 1 ? n + 1 : n + 2;
}

struct BoundReport {
  int dim = 0;
  int m_value = 0;
  bool m_exact = true;  // false when m_value is only an upper bound
  int ldm = 0;
  int pappacena = 0;
  bool markova_applicable = false;
  std::optional<int> markova;
  std::optional<int> surjection;
  std::string tightest;
};

/// All applicable bounds for (dim, m) plus the winner. Both ldm and
/// pappacena are monotone in m, so an upper bound for m still yields
/// valid length bounds (flagged via m_exact).
inline BoundReport compare_bounds(int dim, int m, bool m_exact = true) {
  BoundReport r;
  r.dim = dim;
  r.m_value = m;
  r.m_exact = m_exact;
  r.ldm = ldm_bound(dim, m);
  r.pappacena = pappacena_bound(dim, m);
  r.markova = markova_bound(dim, m);
  r.markova_applicable = r.markova.has_value();
  r.tightest = "ldm";
  int best = r.ldm;
  if (r.markova && *r.markova < best) {
    best = *r.markova;
    r.tightest = "markova";
  }
  if (r.pappacena < best) {
    best = r.pappacena;
    r.tightest = "pappacena";
  }
  return r;
}

}  // namespace alglen
