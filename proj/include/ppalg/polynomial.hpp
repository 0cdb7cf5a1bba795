#pragma once

// Sparse multivariate polynomials over Z and reduced quotients of them.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppalg {

using Exponents = std::vector<int>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}
  static Polynomial constant(std::size_t vars, const mpz_class& c);
  static Polynomial variable(std::size_t vars, std::size_t i);
  static Polynomial monomial(const Exponents& e, const mpz_class& c = 1);

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Highest power of x_v; -1 for the zero polynomial.
  int degree(std::size_t v) const;
  int total_degree() const;
  /// Integer gcd of the coefficients, with the sign of the leading term.
  mpz_class integer_content() const;
  const mpz_class& leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Exponents& e, const mpz_class& c);
  /// Coefficients of x_v^0, x_v^1, ... as polynomials free of x_v.
  std::vector<Polynomial> coefficients_in(std::size_t v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& c, std::size_t v);

  Polynomial pow(unsigned k) const;
  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpz_class& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  /// Substitutes integers for every variable.
  mpz_class evaluate(const std::vector<mpz_class>& point) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, mpz_class> terms_;
};

/// Exact quotient; throws InvalidArgument when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
/// p(values[0], values[1], ...); all values must share one variable count.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& values);
/// gcd with positive leading coefficient (recursive content / primitive part).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num / den with gcd(num, den) = 1 and den having positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);
  static RationalFunction variable(std::size_t vars, std::size_t i);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t vars() const { return num_.vars(); }
  /// Denominator is a monomial with coefficient 1.
  bool is_laurent() const;

  RationalFunction pow(unsigned k) const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ < b.num_ || (a.num_ == b.num_ && a.den_ < b.den_);
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ppalg
