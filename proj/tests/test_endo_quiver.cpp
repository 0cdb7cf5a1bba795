#include "doctest.h"
#include "ppalg/approximation.hpp"
#include "ppalg/endo_quiver.hpp"

using namespace ppalg;

namespace {
const DynkinType A2 = DynkinType::parse("A2");
const DynkinType A3 = DynkinType::parse("A3");

const std::vector<int> a2_t{0, 2, 3};
// 1, 1/2, 2/1, 1/2/3, 2/13/2, 3/2/1
const std::vector<int> a3_t{0, 3, 4, 7, 11, 10};

std::vector<Rational> flatten(const Morphism& f) {
  std::vector<Rational> out;
  for (const auto& c : f.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

std::size_t span_dim(const std::vector<std::vector<Rational>>& v) {
  if (v.empty() || v[0].empty()) return 0;
  QMatrix m(v[0].size(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < v[j].size(); ++i) m(i, j) = v[j][i];
  return rank(m);
}

// rad(T_i, T_j) / rad^2 computed directly from Hom spaces, without the
// algebra machinery: rad End(T_i) is the radical of the trace form.
IntMatrix irreducible_maps(const std::vector<int>& order, const Catalog& cat) {
  const std::size_t r = order.size();
  std::vector<std::vector<std::vector<Morphism>>> rad(r, std::vector<std::vector<Morphism>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto h = hom_space(cat.entry(order[i]).module, cat.entry(order[j]).module);
      if (i != j) {
        rad[i][j] = h.basis;
        continue;
      }
      QMatrix form(h.dim(), h.dim());
      for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b) {
          Rational t = 0;
          for (const auto& c : compose(h.basis[a], h.basis[b]).components)
            for (std::size_t d = 0; d < c.rows(); ++d) t += c(d, d);
          form(a, b) = t;
        }
      const auto k = kernel(form).basis;
      for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Rational> coeffs;
        for (std::size_t a = 0; a < k.rows(); ++a) coeffs.push_back(k(a, c));
        rad[i][j].push_back(h.combination(coeffs));
      }
    }
  IntMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::vector<Rational>> sq;
      for (std::size_t k = 0; k < r; ++k)
        for (const auto& f : rad[i][k])
          for (const auto& g : rad[k][j]) sq.push_back(flatten(compose(g, f)));
      out(i, j) = static_cast<std::int64_t>(rad[i][j].size() - span_dim(sq));
    }
  return out;
}
}  // namespace

TEST_CASE("A2 golden matrices") {
  const auto& c = catalog(A2);
  const auto d = exchange_data(a2_t, c);
  CHECK(d.cartan == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(d.ringel == IntMatrix{{0, 1, -1}, {-1, 1, 0}, {1, -1, 1}});
  CHECK(s_matrix(d.ringel, 0) == IntMatrix{{-1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  CHECK(d.b_principal == IntMatrix{{0}, {-1}, {1}});
  // 3-cycle T3 -> T1 -> T4 -> T3
  CHECK(d.arrows == IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});

  const auto star = exchange_data(mutate(a2_t, 0, c).order, c);
  CHECK(star.cartan == IntMatrix{{1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
  CHECK(star.ringel == IntMatrix{{0, -1, 1}, {1, 1, -1}, {-1, 0, 1}});
  CHECK(star.b_principal == IntMatrix{{0}, {1}, {-1}});
  CHECK(gamma_dot(a2_t, d.arrows, c).find("T2 -> T1;") != std::string::npos);
}

TEST_CASE("A3 golden matrices") {
  const auto& c = catalog(A3);
  const auto d = exchange_data(a3_t, c);
  CHECK(d.cartan == IntMatrix{{1, 1, 0, 1, 0, 0},
                              {0, 1, 1, 1, 1, 0},
                              {1, 1, 1, 1, 1, 0},
                              {0, 0, 0, 1, 1, 1},
                              {0, 1, 1, 1, 2, 1},
                              {1, 1, 1, 1, 1, 1}});
  CHECK(d.ringel == IntMatrix{{0, 1, -1, 0, 0, 0},
                              {-1, 0, 1, 1, -1, 0},
                              {1, -1, 0, 0, 1, -1},
                              {0, -1, 0, 1, 0, 0},
                              {0, 1, -1, -1, 1, 0},
                              {0, 0, 1, 0, -1, 1}});
  auto s = IntMatrix::identity(6);
  const std::int64_t row[] = {1, -1, 0, 0, 1, 0};
  for (std::size_t j = 0; j < 6; ++j) s(1, j) = row[j];
  CHECK(s_matrix(d.ringel, 1) == s);

  const auto star = exchange_data(mutate(a3_t, 1, c).order, c);
  CHECK(star.order[1] == c.lookup("2 / 1 3"));
  CHECK(star.cartan == IntMatrix{{1, 0, 0, 1, 0, 0},
                                 {1, 1, 0, 1, 1, 1},
                                 {1, 1, 1, 1, 1, 0},
                                 {0, 1, 0, 1, 1, 1},
                                 {0, 1, 1, 1, 2, 1},
                                 {1, 1, 1, 1, 1, 1}});
  CHECK(star.ringel == IntMatrix{{0, -1, 0, 1, 0, 0},
                                 {1, 0, -1, -1, 1, 0},
                                 {0, 1, 0, 0, 0, -1},
                                 {-1, 1, 0, 1, -1, 0},
                                 {0, -1, 0, 0, 1, 0},
                                 {0, 0, 1, 0, -1, 1}});
  // nine arrows, two of them leaving T5
  std::int64_t total = 0, from5 = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      total += d.arrows(i, j);
      if (i == 4) from5 += d.arrows(i, j);
    }
  CHECK(total == 9);
  CHECK(from5 == 2);
  CHECK(star.arrows(3, 0) == 1);  // T4 -> T1 in Gamma_{T*}
}

TEST_CASE("Gabriel quiver agrees with irreducible maps") {
  for (const auto& [t, order] : {std::pair{A2, a2_t}, std::pair{A3, a3_t}}) {
    const auto& c = catalog(t);
    CHECK(gamma_quiver(order, c) == irreducible_maps(order, c));
    const auto star = mutate(order, 0, c).order;
    CHECK(gamma_quiver(star, c) == irreducible_maps(star, c));
  }
}

TEST_CASE("exchange data invariants") {
  const auto& c = catalog(A3);
  const auto d = exchange_data(a3_t, c);
  CHECK(d.ringel.transpose() * d.cartan == IntMatrix::identity(6));
  CHECK(d.ringel.leading_columns(3) == d.b_principal);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto s = s_matrix(d.b, k);
    CHECK(s * s == IntMatrix::identity(6));
  }
  const auto e = endomorphism_algebra(a3_t, c);
  CHECK(e.algebra->is_associative());
  CHECK(e.algebra->cartan_matrix() == d.cartan);
  CHECK_THROWS_AS(exchange_data({0, 7, 11, 10}, c), NotCompleteRigid);
  CHECK_THROWS_AS(exchange_data({7, 0, 3, 4, 11, 10}, c), InvalidArgument);
  CHECK_THROWS_AS(s_matrix(d.b, 6), InvalidArgument);
  const auto j = d.to_json();
  CHECK(j["B0"].size() == 6);
  CHECK(j["C"][4][4] == 2);
}

TEST_CASE("F_T images in A2") {
  const auto& c = catalog(A2);
  const auto e = endomorphism_algebra(a2_t, c);
  // vertices: a = T1 (position 0), c = T3 (position 1), b = T4 (position 2)
  CHECK(modules_isomorphic(ft_module(c.entry(0).module, e), projective_module(e.algebra, 0)));
  CHECK(modules_isomorphic(ft_module(c.entry(1).module, e), simple_module(e.algebra, 1)));
  CHECK(modules_isomorphic(ft_module(c.entry(2).module, e), projective_module(e.algebra, 1)));
  const auto fb = ft_module(c.entry(3).module, e);
  CHECK(modules_isomorphic(fb, projective_module(e.algebra, 2)));
  CHECK(fb.dimension_vector() == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("F_T has projective dimension at most one and reflects isomorphism") {
  for (const auto& [t, order] : {std::pair{A2, a2_t}, std::pair{A3, a3_t}}) {
    const auto& c = catalog(t);
    const auto e = endomorphism_algebra(order, c);
    std::vector<AlgebraModule> images;
    for (const auto& entry : c.entries()) {
      images.push_back(ft_module(entry.module, e));
      const auto pd = projective_dimension(images.back(), 4);
      CHECK_FALSE(pd.at_least);
      CHECK(pd.value <= 1);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        CHECK_FALSE(modules_isomorphic(images[i], images[j]));
  }
}

TEST_CASE("homological shape of End(T)") {
  for (const auto& [t, order] : {std::pair{A2, a2_t}, std::pair{A3, a3_t}}) {
    const auto& c = catalog(t);
    const auto e = endomorphism_algebra(order, c);
    CHECK(global_dimension(e.algebra, 6) == CappedDimension{3, false});
    CHECK(dominant_dimension(e.algebra, 6) == CappedDimension{3, false});
    const auto ext = ext_table(e.algebra, 3);
    const std::size_t r = order.size();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(ext[1](i, i) == 0);
      CHECK(ext[2](i, i) == 0);
    }
    for (std::size_t x = 0; x < r; ++x) {
      if (c.entry(order[x]).projective()) continue;
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t k = 0; k <= 3; ++k) CHECK(ext[3 - k](x, s) == ext[k](s, x));
    }
  }
}
