#include "doctest.h"
#include "ppalg/approximation.hpp"
#include "ppalg/cluster.hpp"

#include <random>
#include <set>

using namespace ppalg;

namespace {
const DynkinType A2 = DynkinType::parse("A2");
const DynkinType A3 = DynkinType::parse("A3");

IntMatrix random_skew(std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<int> d(-2, 2);
  IntMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      b(i, j) = d(rng);
      b(j, i) = -b(i, j);
    }
  return b;
}
}  // namespace

TEST_CASE("matrix mutation") {
  const IntMatrix b{{0}, {-1}, {1}};
  CHECK(matrix_mutate(b, 0) == IntMatrix{{0}, {1}, {-1}});
  CHECK_THROWS_AS(matrix_mutate(b, 1), InvalidArgument);

  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto full = random_skew(rng, 5);
    const auto part = full.leading_columns(3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(matrix_mutate(matrix_mutate(part, k), k) == part);
      const auto mu = matrix_mutate(full, k);
      CHECK(mu.is_skew_symmetric());
      const auto s = s_matrix(full, k);
      CHECK(mu == s.transpose() * full * s);
      CHECK(matrix_mutate(part, k) == mu.leading_columns(3));
    }
  }
}

TEST_CASE("A2 seeds") {
  const auto s = Seed::initial(IntMatrix{{0}, {-1}, {1}});
  const auto t = seed_mutate(s, 0);
  const auto x = [](std::size_t i) { return Polynomial::variable(3, i); };
  CHECK(t.x[0] == RationalFunction(x(1) + x(2), x(0)));
  CHECK(t.x[0].to_string() == "(x2 + x3) / x1");
  CHECK(seed_mutate(t, 0) == s);
  CHECK_THROWS_AS(seed_mutate(s, 1), InvalidArgument);
}

TEST_CASE("exchange graphs") {
  for (const auto& [type, expected] : {std::pair{A2, 2U}, std::pair{A3, 14U}}) {
    const auto& c = catalog(type);
    const auto init = builtin_initial(c);
    GraphOptions opt;
    opt.exchange_data = true;
    opt.seeds = true;
    const auto g = exchange_graph(init, c, opt);
    REQUIRE(g.vertex_count() == expected);
    const std::size_t m = init.size() - static_cast<std::size_t>(type.rank());
    for (auto d : g.degrees()) CHECK(d == m);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.seeds[v].b == g.data[v].b_principal);
      for (const auto& x : g.seeds[v].x) CHECK(x.is_laurent());
    }
    // the serial path produces an identical graph
    opt.exec = Exec::serial;
    const auto h = exchange_graph(init, c, opt);
    CHECK(h.orders == g.orders);
    CHECK(h.seeds == g.seeds);
    CHECK(h.edges.size() == g.edges.size());
    // every catalog module appears in some cluster
    CHECK(g.variables.size() == c.size());
    CHECK(g.to_json(c)["vertices"].size() == expected);
    CHECK(g.to_dot(c).find(" -- ") != std::string::npos);
  }
  const auto& c3 = catalog(A3);
  GraphOptions capped;
  capped.max_vertices = 5;
  const auto g = exchange_graph(builtin_initial(c3), c3, capped);
  CHECK(g.vertex_count() == 5);
  CHECK_FALSE(g.complete);
  CHECK_THROWS_AS(exchange_graph({0, 7, 11, 10}, c3), NotCompleteRigid);
}

TEST_CASE("A2 exchange relation and monomials") {
  const auto& c = catalog(A2);
  GraphOptions opt;
  opt.seeds = true;
  const auto g = exchange_graph(builtin_initial(c), c, opt);
  const auto x = [](std::size_t i) { return Polynomial::variable(3, i); };
  CHECK(g.variables.at(1) == RationalFunction(x(1) + x(2), x(0)));
  CHECK(cluster_monomials(g, 0).size() == 1);
  const auto deg1 = cluster_monomials(g, 1);
  CHECK(deg1.size() == 5);  // 1 and four variables
  for (const auto& p : cluster_monomials(g, 3)) CHECK(p.is_laurent());
}

TEST_CASE("greedy and builtin starts") {
  for (const auto& t : {A2, A3, DynkinType::parse("A4")}) {
    const auto& c = catalog(t);
    const auto g = greedy_maximal_rigid(c);
    CHECK(static_cast<int>(g.size()) == positive_root_count(t));
    CHECK(is_maximal_rigid(ModuleSum::from_ids(g), c));
  }
  CHECK(builtin_initial(catalog(A3)) == std::vector<int>{0, 3, 4, 7, 11, 10});
  CHECK(builtin_initial(catalog(A2)) == std::vector<int>{0, 2, 3});
}
