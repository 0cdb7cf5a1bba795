#include <random>

#include "doctest.h"
#include "ppalg/matrix.hpp"

using namespace ppalg;

TEST_CASE("rational parsing and normal form") {
  Rational x = parse_rational("6/-4");
  CHECK(to_string(x) == "-3/2");
  CHECK(x.get_den() > 0);
  CHECK(to_string(parse_rational("  7 ")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
}

TEST_CASE("prime field arithmetic") {
  Fp a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((a * b).value() == 6);
  CHECK(((a / b) * b) == a);
  CHECK(Fp(-1, 7).value() == 6);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), SingularMatrix);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK(reduce_mod(Rational(1, 2), 7).value() == 4);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 7), 7), InvalidArgument);
}

TEST_CASE("solve_linear") {
  SUBCASE("identity") {
    auto s = solve_linear(QMatrix::identity(2), QMatrix{{3}, {4}});
    REQUIRE(s.particular);
    CHECK(*s.particular == QMatrix{{3}, {4}});
    CHECK(s.kernel_basis.empty());
  }
  SUBCASE("zero row") {
    auto s = solve_linear(QMatrix(1, 2), QMatrix{{0}});
    REQUIRE(s.particular);
    CHECK(*s.particular == QMatrix{{0}, {0}});
    CHECK(s.kernel_basis.size() == 2);
  }
  SUBCASE("inconsistent") {
    auto s = solve_linear(QMatrix{{1, 1}, {2, 2}}, QMatrix{{1}, {3}});
    CHECK_FALSE(s.particular);
    CHECK(s.kernel_basis.size() == 1);
  }
  CHECK_THROWS_AS(solve_linear(QMatrix(2, 2), QMatrix(3, 1)), DimensionMismatch);
}

TEST_CASE("rank_and_kernel") {
  auto r = rank_and_kernel(QMatrix::identity(3));
  CHECK(r.rank == 3);
  CHECK(r.kernel_basis.empty());
  r = rank_and_kernel(QMatrix(2, 2));
  CHECK(r.rank == 0);
  CHECK(r.kernel_basis.size() == 2);
  const QMatrix a{{1, 2}, {2, 4}};
  r = rank_and_kernel(a);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel_basis.size() == 1);
  CHECK((a * r.kernel_basis[0]).is_zero());
}

TEST_CASE("invert") {
  CHECK(invert(QMatrix::identity(4)) == QMatrix::identity(4));
  const QMatrix c{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  const QMatrix inv = invert(c);
  CHECK(c * inv == QMatrix::identity(3));
  // inverse transpose of this Cartan matrix is the A2 Ringel matrix
  CHECK(inv.transpose() == QMatrix{{0, 1, -1}, {-1, 1, 0}, {1, -1, 1}});
  CHECK_THROWS_AS(invert(QMatrix{{1, 1}, {1, 1}}), SingularMatrix);
}

TEST_CASE("interpolate_polynomial") {
  using P = std::pair<Rational, Rational>;
  auto c = interpolate_polynomial<Rational>({P{0, 1}, P{1, 1}});
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  c = interpolate_polynomial<Rational>({P{2, 3}, P{3, 4}, P{5, 6}});
  CHECK(c == std::vector<Rational>{1, 1, 0});
  CHECK_THROWS_AS(interpolate_polynomial<Rational>({P{0, 0}, P{0, 1}}), DuplicateNode);
  const std::vector<Rational> cubic{3, -2, 0, 5};
  std::vector<P> pts;
  for (int x = -1; x <= 2; ++x) pts.emplace_back(x, evaluate_polynomial(cubic, Rational(x)));
  CHECK(interpolate_polynomial(pts) == cubic);
}

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("random exact inverses and rank symmetry") {
  std::mt19937 rng(17);
  int inverted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    QMatrix a = random_matrix(rng, n, n);
    if (trial % 7 == 0 && n > 1) a.set_block(0, 0, a.block(1, 0, 1, n));  // force a repeated row
    CHECK(rank(a) == rank(a.transpose()));
    if (rank(a) == n) {
      CHECK(invert(a) * a == QMatrix::identity(n));
      CHECK(!is_zero(determinant(a)));
      ++inverted;
    } else {
      CHECK_THROWS_AS(invert(a), SingularMatrix);
      CHECK(is_zero(determinant(a)));
    }
    const QMatrix b = random_matrix(rng, n, n + 2);
    const auto k = kernel(b);
    CHECK(k.basis.cols() + rank(b) == n + 2);
    CHECK((b * k.basis).is_zero());
  }
  CHECK(inverted > 30);
}

TEST_CASE("reduction mod p commutes with elimination") {
  std::mt19937 rng(5);
  const std::uint32_t p = 32003;
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a = random_matrix(rng, 4, 5);
    auto rq = rref(a);
    auto rp = rref(reduce_mod(a, p));
    // generic position: a small prime could drop rank, 32003 does not here
    CHECK(rq.pivots == rp.pivots);
    CHECK(reduce_mod(rq.reduced, p) == rp.reduced);
    QMatrix s = random_matrix(rng, 4, 4);
    if (rank(s) == 4) CHECK(reduce_mod(invert(s), p) == invert(reduce_mod(s, p)));
  }
}
