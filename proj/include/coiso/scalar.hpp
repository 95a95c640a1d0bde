#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and prime fields F_p
// with a compile-time modulus.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "coiso/errors.hpp"

namespace coiso {

using Rational = mpq_class;

constexpr bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <std::uint32_t P>
class Fp {
  static_assert(is_prime(P), "Fp modulus must be prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long v)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return value_; }

  constexpr Fp& operator+=(Fp o) {
    value_ = (value_ + o.value_) % P;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    value_ = (value_ + P - o.value_) % P;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    value_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(value_) * o.value_) % P);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  constexpr Fp operator-() const { return Fp(0) - *this; }

  friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.value_ != b.value_; }

  Fp inverse() const {
    if (value_ == 0) throw Error("division by zero in F_" + std::to_string(P));
    Fp result(1), base = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1u) result *= base;
      base *= base;
    }
    return result;
  }

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value_; }

 private:
  std::uint32_t value_ = 0;
};

/// Uniform access to the two scalar backends.
template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static std::string name() { return "Q"; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_string(const Rational& x) { return x.get_str(); }

  /// Accepts "p/q" or "p"; result is in lowest terms.
  static Rational parse(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
      throw Error("not a rational literal: '" + text + "'");
    if (sgn(r.get_den()) == 0) throw Error("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }
};

template <std::uint32_t P>
struct field_traits<Fp<P>> {
  static constexpr std::uint32_t characteristic = P;
  static std::string name() { return "F" + std::to_string(P); }
  static bool is_zero(Fp<P> x) { return x.value() == 0; }
  static std::string to_string(Fp<P> x) { return std::to_string(x.value()); }
  static Fp<P> parse(const std::string& text) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size())
      throw Error("not an integer literal: '" + text + "'");
    return Fp<P>(v);
  }
};

template <class S>
concept ExactField = requires { field_traits<S>::characteristic; };

template <class S>
inline constexpr bool is_finite_field_v = field_traits<S>::characteristic != 0;

template <ExactField S>
bool is_zero(const S& x) {
  return field_traits<S>::is_zero(x);
}

template <ExactField S>
std::string to_string(const S& x) {
  return field_traits<S>::to_string(x);
}

}  // namespace coiso
