#include "ppalg/scalar.hpp"

#include <string>

namespace ppalg {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational literal");
  Rational x;
  if (x.set_str(s, 10) != 0 || x.get_den() == 0) {
    throw InvalidArgument("malformed rational literal '" + s + "'");
  }
  x.canonicalize();
  return x;
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) {
    if (value != 0) throw InvalidArgument("nonzero F_p element without modulus");
    return;
  }
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Fp::common_modulus(Fp a, Fp b) {
  if (a.modulus_ == 0) return b.modulus_;
  if (b.modulus_ != 0 && b.modulus_ != a.modulus_) {
    throw InvalidArgument("mixing elements of different prime fields");
  }
  return a.modulus_;
}

Fp operator+(Fp a, Fp b) {
  Fp r;
  r.modulus_ = Fp::common_modulus(a, b);
  std::uint64_t s = std::uint64_t(a.value_) + b.value_;
  if (r.modulus_ != 0 && s >= r.modulus_) s -= r.modulus_;
  r.value_ = static_cast<std::uint32_t>(s);
  return r;
}

Fp operator-(Fp a, Fp b) {
  Fp r;
  r.modulus_ = Fp::common_modulus(a, b);
  std::uint64_t s = std::uint64_t(a.value_) + (b.value_ == 0 ? 0 : r.modulus_ - b.value_);
  if (r.modulus_ != 0 && s >= r.modulus_) s -= r.modulus_;
  r.value_ = static_cast<std::uint32_t>(s);
  return r;
}

Fp operator*(Fp a, Fp b) {
  Fp r;
  r.modulus_ = Fp::common_modulus(a, b);
  if (r.modulus_ == 0) return r;
  r.value_ = static_cast<std::uint32_t>((std::uint64_t(a.value_) * b.value_) % r.modulus_);
  return r;
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (value_ != 0) r.value_ = modulus_ - value_;
  return r;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw SingularMatrix();
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_, new_r = value_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return Fp(t, modulus_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp reduce_mod(const Rational& x, std::uint32_t p) {
  mpz_class num = x.get_num() % p;
  mpz_class den = x.get_den() % p;
  if (den == 0) {
    throw InvalidArgument("prime " + std::to_string(p) + " divides a denominator");
  }
  Fp n(num.get_si(), p);
  Fp d(den.get_si(), p);
  return n / d;
}

}  // namespace ppalg
