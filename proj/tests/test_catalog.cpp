#include "doctest.h"
#include "fixtures.hpp"
#include "ppalg/catalog.hpp"

using namespace ppalg;

namespace {
const DynkinType A2 = DynkinType::parse("A2");
const DynkinType A3 = DynkinType::parse("A3");
const DynkinType A4 = DynkinType::parse("A4");
}  // namespace

TEST_CASE("catalog sizes and flags") {
  const std::vector<std::pair<DynkinType, std::size_t>> expected{{A2, 4}, {A3, 12}, {A4, 40}};
  for (const auto& [t, count] : expected) {
    const auto& c = catalog(t);
    REQUIRE(c.size() == count);
    int projectives = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& e = c.entry(static_cast<int>(i));
      CHECK(e.id == static_cast<int>(i));
      CHECK(check_relations(e.module).ok);
      CHECK(e.rigid);
      CHECK(e.rigid == (ext1_dim(e.module, e.module) == 0));
      CHECK(e.profile == socle_layers(e.module));
      CHECK(top_dim_of_endomorphisms(e.module) == 1);
      projectives += e.projective();
      CHECK(c.ext(e.id, e.id) == 0);
    }
    CHECK(projectives == t.rank());
    for (int v = 0; v < t.rank(); ++v) {
      CHECK(c.entry(c.projective_id(v)).projective_vertex == v);
      CHECK(is_isomorphic(c.entry(c.projective_id(v)).module, Representation::projective(t, v)));
    }
    // pairwise non-isomorphic: an isomorphism would give Hom in both directions
    // containing an invertible map, so compare through the Hom table first
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c.entry(i).dims() == c.entry(j).dims()) CHECK_FALSE(is_isomorphic(c.entry(i).module, c.entry(j).module));
  }
}

TEST_CASE("closure reproduces the hand-written fixtures") {
  for (const auto& [t, fx] : {std::pair{A2, fixtures::a2()}, std::pair{A3, fixtures::a3()}}) {
    const auto& c = catalog(t);
    REQUIRE(fx.size() == c.size());
    for (std::size_t i = 0; i < fx.size(); ++i) {
      const auto& [display, m] = fx[i];
      REQUIRE(check_relations(m).ok);
      CHECK(socle_display(m) == display);
      CHECK(c.identify(m) == static_cast<int>(i));
      CHECK(c.entry(static_cast<int>(i)).display == display);
    }
  }
  CHECK(catalog(A3).projective_ids() == std::vector<int>{7, 11, 10});
  CHECK(catalog(A2).projective_ids() == std::vector<int>{2, 3});
}

TEST_CASE("identify") {
  const auto& c = catalog(A2);
  CHECK(c.identify(Representation::simple(A2, 0)) == 0);
  const auto p1 = conjugate(Representation::projective(A2, 0), {QMatrix{{7}}, QMatrix{{-2}}});
  CHECK(c.identify(p1) == 2);
  CHECK_THROWS_AS(c.identify(direct_sum(Representation::simple(A2, 0), Representation::simple(A2, 1))), NotInCatalog);
  CHECK_THROWS_AS(c.identify(Representation::simple(A3, 0)), DimensionMismatch);
  const auto& c3 = catalog(A3);
  CHECK(c3.find_display("2 / 1 3") == std::vector<int>{9});
  CHECK(c3.lookup("S2") == 1);
  CHECK(c3.lookup("P2") == 11);
  CHECK(c3.lookup("#5") == 5);
  CHECK(c3.lookup("3 / 2 / 1") == 10);
  CHECK_THROWS_AS(c3.lookup("P9"), NotInCatalog);
  CHECK_THROWS_AS(c3.lookup("4 / 4"), NotInCatalog);
}

TEST_CASE("canonical sums") {
  const auto& c2 = catalog(A2);
  CHECK(c2.canonical_sum(c2.realize(std::vector<int>{3, 0, 2})) == ModuleSum::from_ids({0, 2, 3}));
  const auto s1 = Representation::simple(A2, 0);
  CHECK(c2.canonical_sum(direct_sum(s1, s1)).terms == std::vector<std::pair<int, int>>{{0, 2}});

  const auto& c3 = catalog(A3);
  const std::vector<int> t{0, 3, 4, 7, 11, 10};
  const auto plain = c3.realize(t);
  std::vector<QMatrix> g;
  for (int d : plain.dims()) {
    QMatrix u = QMatrix::identity(d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) u(i, j) = Rational(i + 2 * j - 1);
    g.push_back(u.transpose() * u);
  }
  const auto m = conjugate(plain, g);
  const auto sum = c3.canonical_sum(m);
  CHECK(sum.is_basic());
  CHECK(sum == ModuleSum::from_ids(t));
  CHECK(is_isomorphic(c3.realize(sum), m));
  CHECK(c3.is_rigid(sum));
}

TEST_CASE("Hom and Ext tables") {
  for (const auto& t : {A2, A3}) {
    const auto& c = catalog(t);
    std::vector<Representation> mods;
    for (const auto& e : c.entries()) mods.push_back(e.module);
    CHECK(hom_table(mods, Exec::serial) == c.hom_matrix());
    CHECK(hom_table(mods, Exec::parallel) == c.hom_matrix());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        CHECK(c.ext(i, j) == c.ext(j, i));
        CHECK(c.ext(i, j) == ext1_dim_oracle(mods[i], mods[j]));
      }
  }
  CHECK(catalog(A2).ext(0, 1) == 1);
  CHECK(catalog(A2).ext(0, 2) == 0);
}

TEST_CASE("rigid sums never exceed r summands") {
  // exhaustive over basic sums of A3 indecomposables
  const auto& c = catalog(A3);
  const int r = positive_root_count(A3);
  const auto n = static_cast<int>(c.size());
  int largest = 0, maximal_with_projectives = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) ids.push_back(i);
    bool rigid = true;
    for (int i : ids)
      for (int j : ids) rigid = rigid && c.ext(i, j) == 0;
    if (!rigid) continue;
    largest = std::max(largest, static_cast<int>(ids.size()));
    if (static_cast<int>(ids.size()) == r) ++maximal_with_projectives;
  }
  CHECK(largest == r);
  CHECK(maximal_with_projectives == 14);
}

TEST_CASE("unsupported types and json") {
  CHECK_THROWS_AS(enumerate_indecomposables(DynkinType::parse("A5")), UnsupportedType);
  CHECK_THROWS_AS(enumerate_indecomposables(DynkinType::parse("D4")), UnsupportedType);
  const auto j = catalog(A2).to_json();
  REQUIRE(j.size() == 4);
  CHECK(j[2]["display"] == "1 / 2");
  CHECK(j[2]["projective_vertex"] == 1);
  CHECK(j[0]["projective_vertex"].is_null());
  CHECK(representation_from_json(j[3]["module"]) == catalog(A2).entry(3).module);
}

TEST_CASE("hom dimensions agree over Q and F_p") {
  // every catalog module has 0/1 integral structure maps, so reduction is defined
  for (const auto* name : {"A2", "A3"}) {
    const auto& cat = catalog(DynkinType::parse(name));
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        for (std::uint32_t p : {2u, 3u, 32003u})
          CHECK(hom_dim_mod(cat.entry(i).module, cat.entry(j).module, p) == cat.hom(i, j));
  }
}
