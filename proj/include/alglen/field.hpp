#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "alglen/errors.hpp"

namespace alglen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  if (p % 3 == 0) return p == 3;
  for (std::int64_t d = 5; d * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Runtime descriptor of the coefficient field: either F_p for a small prime
/// p, or the rational numbers. Parses from "f<p>" / "q".
struct FieldDesc {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::int64_t p = 0;  // modulus for prime fields, 0 for Q

  // Moduli are capped at 2^31-1 so a product of two canonical residues fits
  // in a signed 64-bit integer before reduction.
  static constexpr std::int64_t max_prime = 2147483647;

  static FieldDesc prime(std::int64_t p) {
    if (p < 2 || p > max_prime || !detail::is_small_prime(p)) {
      throw ParseError("not a supported prime modulus: " + std::to_string(p));
    }
    return FieldDesc{Kind::prime, p};
  }

  static FieldDesc rationals() { return FieldDesc{Kind::rational, 0}; }

  static FieldDesc parse(std::string_view s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F') &&
        detail::all_digits(s.substr(1))) {
      if (s.size() > 10) throw ParseError("prime modulus out of range");
      std::int64_t v = 0;
      for (char c : s.substr(1)) v = v * 10 + (c - '0');
      return prime(v);
    }
    throw ParseError("bad field spec '" + std::string(s) +
                     "' (expected \"q\" or \"f<p>\")");
  }

  std::int64_t characteristic() const {
    return kind == Kind::prime ? p : 0;
  }

  std::string str() const {
    return kind == Kind::prime ? "f" + std::to_string(p) : std::string("q");
  }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// Arithmetic context for F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(FieldDesc::prime(p).p) {}
  explicit PrimeField(const FieldDesc& d) : PrimeField(d.p) {
    if (d.kind != FieldDesc::Kind::prime) {
      throw FieldMismatch("PrimeField constructed from a rational descriptor");
    }
  }

  FieldDesc desc() const { return FieldDesc{FieldDesc::Kind::prime, p_}; }
  std::int64_t characteristic() const { return p_; }
  std::int64_t modulus() const { return p_; }
  std::optional<std::int64_t> size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    Elem r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Elem sub(Elem a, Elem b) const {
    Elem r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
    // extended Euclid; p_ prime so gcd is 1
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return t < 0 ? t + p_ : t;
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem from_int(std::int64_t x) const {
    Elem r = x % p_;
    return r < 0 ? r + p_ : r;
  }

  /// Element with enumeration index i, 0 <= i < p.
  Elem from_index(std::int64_t i) const { return i; }

  /// Accepts a non-negative decimal residue (reduced mod p on input).
  Elem parse(std::string_view s) const {
    if (!detail::all_digits(s)) {
      throw ParseError("bad F_" + std::to_string(p_) + " scalar '" +
                       std::string(s) + "'");
    }
    Elem v = 0;
    for (char c : s) v = (v * 10 + (c - '0')) % p_;
    return v;
  }

  std::string str(Elem a) const { return std::to_string(a); }

  template <class Urbg>
  Elem random(Urbg& g) const {
    return std::uniform_int_distribution<std::int64_t>(0, p_ - 1)(g);
  }

 private:
  std::int64_t p_;
};

/// Arithmetic context for Q. Elements are arbitrary-precision fractions kept
/// fully reduced with positive denominator (cpp_rational maintains this).
class RationalField {
 public:
  using Elem = BigRational;

  RationalField() = default;
  explicit RationalField(const FieldDesc& d) {
    if (d.kind != FieldDesc::Kind::rational) {
      throw FieldMismatch("RationalField constructed from a prime descriptor");
    }
  }

  FieldDesc desc() const { return FieldDesc::rationals(); }
  std::int64_t characteristic() const { return 0; }
  std::optional<std::int64_t> size() const { return std::nullopt; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }

  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of 0 in Q");
    return Elem(1) / a;
  }

  Elem div(const Elem& a, const Elem& b) const {
    if (b.is_zero()) throw DivisionByZero("division by 0 in Q");
    return a / b;
  }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_int(std::int64_t x) const { return Elem(x); }

  Elem from_index(std::int64_t) const {
    throw InfiniteField("Q cannot be enumerated");
  }

  /// Accepts "n" or "n/d" with optional leading '-' on n; d positive.
  Elem parse(std::string_view s) const {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    bool negative = !num.empty() && num[0] == '-';
    if (negative) num.remove_prefix(1);
    if (!detail::all_digits(num)) {
      throw ParseError("bad rational scalar '" + std::string(s) + "'");
    }
    BigInt n{std::string(num)};
    if (negative) n = -n;
    if (slash == std::string_view::npos) return Elem(n);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(den)) {
      throw ParseError("bad rational scalar '" + std::string(s) + "'");
    }
    BigInt d{std::string(den)};
    if (d.is_zero()) {
      throw ParseError("zero denominator in '" + std::string(s) + "'");
    }
    return Elem(n) / Elem(d);  // division canonicalizes
  }

  std::string str(const Elem& a) const {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }

  template <class Urbg>
  Elem random(Urbg& g) const {
    // bounded coordinates keep row reduction sizes tame in sampled searches
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(-3, 3)(g);
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 3)(g);
    return Elem(n) / Elem(d);
  }
};

template <class F>
concept FieldCtx = requires(const F f, const typename F::Elem a,
                            const typename F::Elem b, std::string_view s) {
  requires std::regular<typename F::Elem>;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, b) } -> std::same_as<typename F::Elem>;
  { f.sub(a, b) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, b) } -> std::same_as<typename F::Elem>;
  { f.div(a, b) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.eq(a, b) } -> std::convertible_to<bool>;
  { f.desc() } -> std::same_as<FieldDesc>;
  { f.characteristic() } -> std::convertible_to<std::int64_t>;
  { f.size() } -> std::same_as<std::optional<std::int64_t>>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Elem>;
  { f.from_index(std::int64_t{}) } -> std::same_as<typename F::Elem>;
  { f.parse(s) } -> std::same_as<typename F::Elem>;
  { f.str(a) } -> std::same_as<std::string>;
};

static_assert(FieldCtx<PrimeField>);
static_assert(FieldCtx<RationalField>);

/// Calls fn with the arithmetic context matching a runtime descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDesc& d, Fn&& fn) {
  if (d.kind == FieldDesc::Kind::prime) return fn(PrimeField(d));
  return fn(RationalField{});
}

}  // namespace alglen
