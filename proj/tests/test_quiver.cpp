#include <random>

#include "doctest.h"
#include "ppalg/errors.hpp"
#include "ppalg/quiver.hpp"

using namespace ppalg;

TEST_CASE("Dynkin types") {
  CHECK(DynkinType::parse("A3").name() == "A3");
  CHECK(DynkinType::parse("e8").rank() == 8);
  CHECK_THROWS_AS(DynkinType::parse("A1"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("D3"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("E9"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("B3"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("A"), InvalidType);
}

TEST_CASE("quivers and double quivers") {
  const auto a2 = build_quiver(DynkinType::parse("A2"));
  CHECK(a2.arrows.size() == 1);
  const auto d = double_quiver(a2);
  REQUIRE(d.arrows.size() == 2);
  CHECK(d.arrows[1].id == "a1*");
  CHECK(d.arrows[1].source == d.arrows[0].target);
  CHECK(d.arrows[1].target == d.arrows[0].source);
  for (const char* t : {"A5", "D6", "E6", "E7", "E8"}) {
    const auto type = DynkinType::parse(t);
    const auto q = build_quiver(type);
    CHECK(q.arrows.size() == static_cast<std::size_t>(type.rank() - 1));
    CHECK(double_quiver(q).arrows.size() == 2 * q.arrows.size());
    std::vector<int> degree(type.rank(), 0);
    for (const auto& a : q.arrows) {
      ++degree[a.source];
      ++degree[a.target];
    }
    // a tree with exactly one branch vertex of degree 3 for D and E
    int branch = 0;
    for (int v : degree) branch += v == 3;
    CHECK(branch == (type.family() == DynkinFamily::A ? 0 : 1));
  }
}

TEST_CASE("positive roots") {
  CHECK(positive_root_count(DynkinType::parse("A2")) == 3);
  CHECK(positive_root_count(DynkinType::parse("A3")) == 6);
  CHECK(positive_root_count(DynkinType::parse("D4")) == 12);
  CHECK(positive_root_count(DynkinType::parse("E6")) == 36);
  CHECK(positive_root_count(DynkinType::parse("E8")) == 120);
}

TEST_CASE("bilinear form") {
  const auto a2 = DynkinType::parse("A2"), a3 = DynkinType::parse("A3");
  CHECK(bilinear_form(a2, {1, 0}, {1, 0}) == 2);
  CHECK(bilinear_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(bilinear_form(a3, {1, 1, 1}, {1, 1, 1}) == 2);
  CHECK_THROWS_AS(bilinear_form(a2, {1}, {1, 0}), DimensionMismatch);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(0, 4);
  const auto d5 = DynkinType::parse("D5");
  Quiver flipped = build_quiver(d5);
  for (std::size_t k = 0; k < flipped.arrows.size(); k += 2) std::swap(flipped.arrows[k].source, flipped.arrows[k].target);
  for (int trial = 0; trial < 50; ++trial) {
    DimensionVector x(5), y(5);
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    CHECK(bilinear_form(d5, x, y) == bilinear_form(d5, y, x));
    CHECK(bilinear_form(d5, x, y) == bilinear_form(flipped, x, y));
    // positive definite on Dynkin diagrams
    if (x != DimensionVector(5, 0)) CHECK(bilinear_form(d5, x, x) > 0);
  }
}

TEST_CASE("quiver json round trip") {
  const auto q = double_quiver(build_quiver(DynkinType::parse("D4")));
  const auto j = to_json(q);
  CHECK(j["vertices"] == 4);
  CHECK(j["arrows"][0]["src"] == 1);
  CHECK(j["arrows"][0]["tgt"] == 3);
  const auto back = quiver_from_json(j);
  REQUIRE(back.arrows.size() == q.arrows.size());
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    CHECK(back.arrows[i].id == q.arrows[i].id);
    CHECK(back.arrows[i].source == q.arrows[i].source);
    CHECK(back.arrows[i].target == q.arrows[i].target);
  }
  auto bad = j;
  bad["arrows"][0]["src"] = 9;
  CHECK_THROWS_AS(quiver_from_json(bad), InvalidArgument);
}
