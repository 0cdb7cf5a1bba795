#include "ppalg/semicanonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ppalg {

namespace {

using Row = std::vector<std::uint32_t>;

struct Field {
  std::uint32_t p;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    for (; e; e >>= 1, base = base * base % p)
      if (e & 1) result = result * base % p;
    return static_cast<std::uint32_t>(result);
  }
};

// Reduced row echelon form of the span of `rows`; zero rows dropped.
std::vector<Row> rref(std::vector<Row> rows, const Field& f) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto k = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

struct ModRep {
  std::vector<int> dims;
  struct Arr {
    int source, target;
    std::vector<Row> matrix;  // target x source
  };
  std::vector<Arr> arrows;
};

ModRep reduce(const Representation& m, std::uint32_t p) {
  ModRep out{m.dims(), {}};
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    const auto& arr = m.quiver().arrows[a];
    const auto& f = m.map(a);
    std::vector<Row> mat(f.rows(), Row(f.cols()));
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) mat[i][j] = reduce_mod(f(i, j), p).value();
    out.arrows.push_back({arr.source, arr.target, std::move(mat)});
  }
  return out;
}

class FlagCounter {
 public:
  FlagCounter(const ModRep& m, const CompositionType& blocks, std::uint32_t p)
      : m_(m), blocks_(blocks), f_{p}, memo_(blocks.size()) {}

  std::uint64_t run() {
    std::vector<int> content(m_.dims.size(), 0);
    for (const auto& [v, a] : blocks_) {
      if (v < 0 || v >= static_cast<int>(content.size()) || a < 0) throw InvalidArgument("bad composition type");
      content[v] += a;
    }
    if (content != m_.dims) return 0;
    State s;
    for (int d : m_.dims) {
      std::vector<Row> basis;
      for (int i = 0; i < d; ++i) {
        Row e(d, 0);
        e[i] = 1;
        basis.push_back(e);
      }
      s.push_back(basis);
    }
    return count(s, 0);
  }

 private:
  using State = std::vector<std::vector<Row>>;  // per vertex, RREF basis in ambient coordinates

  static std::string key(const State& s) {
    std::string k;
    for (const auto& rows : s) {
      k.push_back('|');
      for (const auto& r : rows)
        for (auto x : r) k.append(reinterpret_cast<const char*>(&x), sizeof x);
    }
    return k;
  }

  Row apply(const std::vector<Row>& mat, const Row& v) const {
    Row out(mat.size(), 0);
    for (std::size_t i = 0; i < mat.size(); ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) acc += std::uint64_t{mat[i][j]} * v[j] % f_.p;
      out[i] = static_cast<std::uint32_t>(acc % f_.p);
    }
    return out;
  }

  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t c;
    if (__builtin_add_overflow(a, b, &c)) throw SizeLimit("flag count overflows 64 bits");
    return c;
  }

  std::uint64_t count(const State& s, std::size_t step) {
    if (step == blocks_.size()) return 1;
    const auto k = key(s);
    if (auto it = memo_[step].find(k); it != memo_[step].end()) return it->second;

    const auto [v, a] = blocks_[step];
    std::uint64_t total = 0;
    if (a == 0) {
      total = count(s, step + 1);
      memo_[step].emplace(k, total);
      return total;
    }
    // images of the arrows ending at v
    std::vector<Row> images;
    for (const auto& arr : m_.arrows)
      if (arr.target == v)
        for (const auto& b : s[arr.source]) images.push_back(apply(arr.matrix, b));
    const auto u = rref(images, f_);
    // extend u to a basis of s[v]
    std::vector<Row> complement;
    auto span = u;
    for (const auto& b : s[v]) {
      auto trial = span;
      trial.push_back(b);
      trial = rref(trial, f_);
      if (trial.size() > span.size()) {
        span = std::move(trial);
        complement.push_back(b);
      }
    }
    const auto d = static_cast<int>(complement.size());
    const int keep = d - a;
    if (keep >= 0) {
      for_each_subspace(static_cast<std::size_t>(d), static_cast<std::size_t>(keep), [&](const std::vector<Row>& sub) {
        auto rows = u;
        for (const auto& coeffs : sub) {
          Row w(s[v].empty() ? 0 : s[v].front().size(), 0);
          for (std::size_t c = 0; c < coeffs.size(); ++c)
            if (coeffs[c])
              for (std::size_t j = 0; j < w.size(); ++j) w[j] = f_.add(w[j], f_.mul(coeffs[c], complement[c][j]));
          rows.push_back(w);
        }
        State next = s;
        next[v] = rref(rows, f_);
        total = checked_add(total, count(next, step + 1));
      });
    }
    memo_[step].emplace(k, total);
    return total;
  }

  // Every k-dimensional subspace of F_p^n, as an RREF basis.
  template <class Fn>
  void for_each_subspace(std::size_t n, std::size_t k, Fn&& fn) const {
    std::vector<std::size_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        std::vector<Row> rows(k, Row(n, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = digits[t];
        fn(rows);
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == f_.p) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      // next pivot combination
      if (k == 0) break;
      std::size_t i = k;
      while (i-- > 0 && pivots[i] == n - k + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++pivots[i];
      for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }

  const ModRep& m_;
  const CompositionType& blocks_;
  Field f_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> memo_;
};

bool usable_prime(const Representation& m, std::uint32_t p) {
  for (const auto& f : m.maps())
    for (const auto& x : f.data())
      if (x.get_den() % p == 0) return false;
  return true;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::uint64_t count_flags_fq(const Representation& m, const CompositionType& blocks, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("flag counting needs a prime field");
  if (!usable_prime(m, p)) throw InvalidArgument("prime divides a denominator of the module");
  const auto reduced = reduce(m, p);
  return FlagCounter(reduced, blocks, p).run();
}

std::uint64_t count_flags_fq(const Representation& m, const std::vector<int>& word, std::uint32_t p) {
  CompositionType blocks;
  for (int v : word) blocks.emplace_back(v, 1);
  return count_flags_fq(m, blocks, p);
}

Rational CountPolynomial::at_one() const {
  Rational s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

CountPolynomial count_polynomial(const Representation& m, const CompositionType& blocks, int degree_bound,
                                 Exec exec) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; static_cast<int>(primes.size()) < degree_bound + 2; ++p)
    if (is_prime(p) && usable_prime(m, p)) primes.push_back(p);

  CountPolynomial out;
  out.samples.resize(primes.size());
  const auto n = static_cast<std::int64_t>(primes.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) out.samples[i] = {primes[i], count_flags_fq(m, blocks, primes[i])};
  } else {
    for (std::int64_t i = 0; i < n; ++i) out.samples[i] = {primes[i], count_flags_fq(m, blocks, primes[i])};
  }

  std::vector<std::pair<Rational, Rational>> points;
  for (std::size_t i = 0; i + 1 < out.samples.size(); ++i)
    points.emplace_back(Rational(out.samples[i].first), Rational(mpz_class(std::to_string(out.samples[i].second))));
  out.coefficients = interpolate_polynomial(points);
  const auto& [pl, cl] = out.samples.back();
  if (evaluate_polynomial(out.coefficients, Rational(pl)) != Rational(mpz_class(std::to_string(cl))))
    throw NonPolynomialCount("point count is not a polynomial of degree <= " + std::to_string(degree_bound) +
                             " (check at p = " + std::to_string(pl) + ")");
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

namespace {

// dim of the product over vertices of the partial flag varieties the
// composition series maps into.
int flag_dimension_bound(const Representation& m, const CompositionType& blocks) {
  int bound = 0;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const int b = m.dim(static_cast<int>(v));
    int parts = 0;
    for (const auto& [u, a] : blocks)
      if (u == static_cast<int>(v)) parts += a * a;
    bound += (b * b - parts) / 2;
  }
  return std::max(bound, 0);
}

Integer to_integer(const Rational& x) {
  if (x.get_den() != 1) throw NonPolynomialCount("Euler characteristic is not an integer: " + x.get_str());
  return x.get_num();
}

}  // namespace

Integer block_euler_characteristic(const Representation& m, const CompositionType& blocks, Exec exec) {
  std::vector<int> content(m.vertex_count(), 0);
  for (const auto& [v, a] : blocks)
    if (v >= 0 && v < static_cast<int>(content.size())) content[v] += a;
  if (content != m.dims()) return 0;
  return to_integer(count_polynomial(m, blocks, flag_dimension_bound(m, blocks), exec).at_one());
}

Integer euler_characteristic(const Representation& m, const std::vector<int>& word) {
  CompositionType blocks;
  for (int v : word) blocks.emplace_back(v, 1);
  return block_euler_characteristic(m, blocks);
}

std::vector<int> longest_word(const DynkinType& type) {
  if (type.family() != DynkinFamily::A) throw UnsupportedType("longest word only fixed for type A");
  // s1 (s2 s1) (s3 s2 s1) ...
  std::vector<int> w;
  for (int k = 0; k < type.rank(); ++k)
    for (int j = k; j >= 0; --j) w.push_back(j);
  return w;
}

Polynomial PhiPolynomial::polynomial() const {
  Polynomial p(pattern.size());
  for (const auto& [a, c] : coefficients) p.add_term(a, c);
  return p;
}

Integer PhiPolynomial::chi(const std::vector<int>& a) const {
  const auto it = coefficients.find(a);
  if (it == coefficients.end()) return 0;
  Integer r = it->second;
  for (int x : a) r *= factorial(x);
  return r;
}

std::string PhiPolynomial::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pattern.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  return polynomial().to_string(names);
}

nlohmann::json PhiPolynomial::to_json() const {
  std::vector<int> word;
  for (int v : pattern) word.push_back(v + 1);
  auto terms = nlohmann::json::array();
  for (const auto& [a, c] : coefficients)
    terms.push_back({{"a", a}, {"coefficient", c.get_str()}, {"chi", chi(a).get_str()}});
  return {{"word", word}, {"polynomial", to_string()}, {"terms", terms}};
}

PhiPolynomial phi_evaluate(const Representation& m, const std::vector<int>& pattern, int max_dim, Exec exec) {
  if (m.total_dim() > max_dim)
    throw SizeLimit("phi: module of dimension " + std::to_string(m.total_dim()) + " exceeds the limit " +
                    std::to_string(max_dim));
  for (int v : pattern)
    if (v < 0 || v >= static_cast<int>(m.vertex_count())) throw InvalidArgument("phi: word letter out of range");
  PhiPolynomial out{pattern, {}};
  // all a with sum_j a_j e_{i_j} = dim M
  std::vector<int> a(pattern.size(), 0), left = m.dims();
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == pattern.size()) {
      if (std::any_of(left.begin(), left.end(), [](int x) { return x != 0; })) return;
      CompositionType blocks;
      for (std::size_t t = 0; t < pattern.size(); ++t)
        if (a[t]) blocks.emplace_back(pattern[t], a[t]);
      const auto chi = block_euler_characteristic(m, blocks, exec);
      if (chi != 0) out.coefficients.emplace(a, chi);
      return;
    }
    const int v = pattern[j];
    for (int x = 0; x <= left[v]; ++x) {
      a[j] = x;
      left[v] -= x;
      self(self, j + 1);
      left[v] += x;
    }
    a[j] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace ppalg
