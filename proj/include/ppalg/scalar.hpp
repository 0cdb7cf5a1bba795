#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ppalg/errors.hpp"

namespace ppalg {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

/// Element of the prime field F_p. The modulus travels with the value so
/// that matrices over different primes can coexist in one process.
/// A default-constructed element has modulus 0 and acts as "zero of an
/// unspecified field" until combined with a real element.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const;
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }
  friend bool operator!=(Fp a, Fp b) { return a.value_ != b.value_; }

 private:
  static std::uint32_t common_modulus(Fp a, Fp b);

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Reduce a rational into F_p; throws InvalidArgument when p divides the
/// denominator.
Fp reduce_mod(const Rational& x, std::uint32_t p);

// Uniform helpers so that the dense kernels can be written once for both
// fields. `like` supplies the modulus for F_p.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Rational from_int_like(const Rational&, long v) { return Rational(v); }
inline Fp from_int_like(const Fp& x, long v) { return Fp(v, x.modulus()); }

}  // namespace ppalg
