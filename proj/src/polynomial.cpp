#include "ppalg/polynomial.hpp"

#include <sstream>

#include "ppalg/errors.hpp"

namespace ppalg {

Polynomial Polynomial::constant(std::size_t vars, const mpz_class& c) {
  Polynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t i) {
  Exponents e(vars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const mpz_class& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int Polynomial::degree(std::size_t v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

mpz_class Polynomial::integer_content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) g = ::gcd(g, c);
  if (!terms_.empty() && leading_coefficient() < 0) g = -g;
  return g;
}

void Polynomial::add_term(const Exponents& e, const mpz_class& c) {
  if (e.size() != vars_) throw DimensionMismatch("polynomial term with wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t v) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1), Polynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[v] = 0;
    out[static_cast<std::size_t>(e[v])].add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& c, std::size_t v) {
  Polynomial p(c.empty() ? 0 : c.front().vars());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& [e, x] : c[k].terms_) {
      Exponents f = e;
      f[v] += static_cast<int>(k);
      p.add_term(f, x);
    }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1), base = *this;
  for (; k; k >>= 1) {
    if (k & 1U) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial p = a;
  p.vars_ = std::max(a.vars_, b.vars_);
  for (const auto& [e, c] : b.terms_) p.add_term(e, c);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.vars_, b.vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial operator*(const mpz_class& s, const Polynomial& a) {
  Polynomial p(a.vars_);
  if (s == 0) return p;
  p.terms_ = a.terms_;
  for (auto& [e, c] : p.terms_) c *= s;
  return p;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& point) const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) os << mag;
    else if (mag == 1) os << mono;
    else os << mag << '*' << mono;
  }
  return os.str();
}

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = std::max(a.vars(), b.vars()); v-- > 0;)
    if ((v < a.vars() && a.degree(v) > 0) || (v < b.vars() && b.degree(v) > 0)) return static_cast<int>(v);
  return -1;
}

mpz_class constant_value(const Polynomial& p) { return p.is_zero() ? mpz_class(0) : p.terms().begin()->second; }

Polynomial normalized(Polynomial p) { return !p.is_zero() && p.leading_coefficient() < 0 ? -p : p; }

Polynomial content(const Polynomial& p, std::size_t v) {
  Polynomial g(p.vars());
  for (const auto& c : p.coefficients_in(v))
    if (!c.is_zero()) g = gcd(g, c);
  return g;
}

Polynomial primitive(const Polynomial& p, std::size_t v) { return exact_divide(p, content(p, v)); }

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const int db = b.degree(v);
  const Polynomial lcb = b.coefficients_in(v).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    const int d = r.degree(v) - db;
    Exponents shift(a.vars(), 0);
    shift[v] = d;
    r = lcb * r - r.coefficients_in(v).back() * Polynomial::monomial(shift) * b;
  }
  return r;
}

}  // namespace

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Polynomial q(std::max(a.vars(), b.vars()));
  if (a.is_zero()) return q;
  int v = -1;
  for (std::size_t i = b.vars(); i-- > 0;)
    if (b.degree(i) > 0) {
      v = static_cast<int>(i);
      break;
    }
  if (v < 0) {
    const mpz_class d = constant_value(b);
    for (const auto& [e, c] : a.terms()) {
      if (c % d != 0) throw InvalidArgument("polynomial division is not exact");
      q.add_term(e, c / d);
    }
    return q;
  }
  const auto vi = static_cast<std::size_t>(v);
  const int db = b.degree(vi);
  const Polynomial lcb = b.coefficients_in(vi).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree(vi) >= db) {
    Exponents shift(q.vars(), 0);
    shift[vi] = r.degree(vi) - db;
    const Polynomial t = exact_divide(r.coefficients_in(vi).back(), lcb) * Polynomial::monomial(shift);
    q = q + t;
    r = r - t * b;
  }
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const int mv = main_variable(a, b);
  const std::size_t vars = std::max(a.vars(), b.vars());
  if (mv < 0) return Polynomial::constant(vars, ::gcd(constant_value(a), constant_value(b)));
  const auto v = static_cast<std::size_t>(mv);
  if (a.degree(v) <= 0) return gcd(a, content(b, v));
  if (b.degree(v) <= 0) return gcd(content(a, v), b);
  const Polynomial ca = content(a, v), cb = content(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = exact_divide(a, ca), q = exact_divide(b, cb);
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive(r, v);
  }
  return normalized(c * primitive(p, v));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  reduce();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), 1)) {}

RationalFunction RationalFunction::variable(std::size_t vars, std::size_t i) {
  return RationalFunction(Polynomial::variable(vars, i));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(den_.vars(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!(g == Polynomial::constant(g.vars(), 1))) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_laurent() const { return den_.is_monomial() && den_.leading_coefficient() == 1; }

RationalFunction RationalFunction::pow(unsigned k) const { return RationalFunction(num_.pow(k), den_.pow(k)); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw InvalidArgument("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (den_ == Polynomial::constant(den_.vars(), 1)) return num_.to_string(names);
  const auto wrap = [&](const Polynomial& p) {
    const auto s = p.to_string(names);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& values) {
  if (values.size() != p.vars()) throw InvalidArgument("substitute: wrong number of values");
  const std::size_t vars = values.empty() ? 0 : values[0].vars();
  Polynomial out(vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * values[i].pow(static_cast<unsigned>(e[i]));
    out = out + term;
  }
  return out;
}

}  // namespace ppalg
