#include "doctest.h"
#include "ppalg/algebra.hpp"

using namespace ppalg;

namespace {

AlgebraPtr semisimple(std::size_t n) {
  std::vector<SparseVector> prods(n * n);
  std::vector<Vector> idem;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    prods[i * n + i] = {{static_cast<std::uint32_t>(i), Rational(1)}};
    Vector e(n);
    e[i] = 1;
    idem.push_back(e);
    labels.push_back("e" + std::to_string(i + 1));
  }
  return std::make_shared<const FinDimAlgebra>(labels, prods, idem);
}

// Path algebra of the linear quiver 1 -> 2 -> ... -> n; basis = paths (i, j), i <= j.
AlgebraPtr linear_path_algebra(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> paths;
  for (std::size_t i = 0; i < n; ++i) paths.emplace_back(i, i);
  for (std::size_t len = 1; len < n; ++len)
    for (std::size_t i = 0; i + len < n; ++i) paths.emplace_back(i, i + len);
  const std::size_t d = paths.size();
  std::vector<SparseVector> prods(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (paths[x].first == paths[y].second) {
        for (std::size_t z = 0; z < d; ++z)
          if (paths[z] == std::make_pair(paths[y].first, paths[x].second)) prods[x * d + y] = {{static_cast<std::uint32_t>(z), Rational(1)}};
      }
  std::vector<Vector> idem;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(std::to_string(paths[i].first) + ">" + std::to_string(paths[i].second));
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(d);
    e[i] = 1;
    idem.push_back(e);
  }
  return std::make_shared<const FinDimAlgebra>(labels, prods, idem);
}

int coxeter_number(const DynkinType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case DynkinFamily::A: return n + 1;
    case DynkinFamily::D: return 2 * n - 2;
    case DynkinFamily::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
  return 0;
}

}  // namespace

TEST_CASE("preprojective algebra of A2") {
  const auto& pa = preprojective(DynkinType::parse("A2"));
  const auto& a = pa.algebra;
  CHECK(a->dim() == 4);
  CHECK(a->is_associative());
  CHECK(a->radical().cols() == 2);
  CHECK(a->vertex_count() == 2);
  // both projectives have dimension vector (1,1) and Loewy length 2
  for (std::size_t i = 0; i < 2; ++i) {
    const auto p = projective_module(a, i);
    CHECK(p.dimension_vector() == std::vector<std::size_t>{1, 1});
    CHECK(radical_of_module(p).cols() == 1);
    CHECK(radical_of_module(submodule(p, radical_of_module(p))).cols() == 0);
  }
  CHECK(global_dimension(a, 4) == CappedDimension{4, true});
  CHECK(projective_injective_vertices(a).size() == 2);
}

TEST_CASE("preprojective dimensions follow n h (h+1) / 6") {
  for (const char* name : {"A2", "A3", "A4", "A5", "D4", "D5"}) {
    const auto t = DynkinType::parse(name);
    const auto& pa = preprojective(t);
    const int h = coxeter_number(t);
    CAPTURE(name);
    CHECK(pa.algebra->dim() == static_cast<std::size_t>(t.rank() * h * (h + 1) / 6));
    CHECK(pa.algebra->radical().cols() == pa.algebra->dim() - t.rank());
    // top degree of the path grading is h - 2
    CHECK(*std::max_element(pa.degree.begin(), pa.degree.end()) == h - 2);
    std::size_t total = 0;
    for (int i = 0; i < t.rank(); ++i) total += projective_module(pa.algebra, i).dim;
    CHECK(total == pa.algebra->dim());
    const auto c = pa.algebra->cartan_matrix();
    CHECK(c == c.transpose());
  }
}

TEST_CASE("preprojective algebra of A3 is associative and selfinjective") {
  const auto& pa = preprojective(DynkinType::parse("A3"));
  CHECK(pa.algebra->is_associative());
  CHECK(projective_module(pa.algebra, 1).dimension_vector() == std::vector<std::size_t>{1, 2, 1});
  CHECK(projective_injective_vertices(pa.algebra).size() == 3);
  // the quiver of the algebra is the double quiver
  const auto& q = pa.algebra->gabriel_quiver();
  CHECK(q.arrow_counts == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(dominant_dimension(pa.algebra, 4).at_least);
}

TEST_CASE("semisimple algebra") {
  const auto a = semisimple(2);
  CHECK(a->radical().cols() == 0);
  CHECK(global_dimension(a, 3) == CappedDimension{0, false});
  CHECK(ext_dim(a, 0, 0, 0) == 1);
  CHECK(ext_dim(a, 0, 1, 0) == 0);
  CHECK(projective_dimension(projective_module(a, 1), 3) == CappedDimension{0, false});
}

TEST_CASE("path algebra of a linear quiver") {
  const auto a = linear_path_algebra(3);
  CHECK(a->dim() == 6);
  CHECK(a->is_associative());
  CHECK(a->radical().cols() == 3);
  CHECK(a->radical_squared().cols() == 1);
  CHECK(a->gabriel_quiver().arrow_counts == IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(global_dimension(a, 4) == CappedDimension{1, false});
  // Ext^1(S_i, S_j) counts arrows j -> i for left modules over paths written right to left
  const auto ext = ext_table(a, 2);
  CHECK(ext[0] == IntMatrix::identity(3));
  CHECK(ext[2] == IntMatrix(3, 3));
  CHECK(ext[1](0, 1) + ext[1](1, 0) == 1);
  // hereditary linear A3: the injective-projectives are exactly one
  CHECK(projective_injective_vertices(a).size() == 1);
  CHECK(dominant_dimension(a, 4) == CappedDimension{1, false});
  const auto r = ringel_form(a, 4);
  CHECK(r == IntMatrix::from_rational(invert(a->cartan_matrix().to_rational())).transpose());
}

TEST_CASE("module operations") {
  const auto a = preprojective(DynkinType::parse("A3")).algebra;
  const auto p = projective_module(a, 1);
  CHECK(module_hom(p, p).size() == a->peirce(1, 1).cols());
  CHECK(modules_isomorphic(p, p));
  CHECK_FALSE(modules_isomorphic(projective_module(a, 0), projective_module(a, 2)));
  const auto s = simple_module(a, 1);
  CHECK(s.dim == 1);
  CHECK(module_hom(p, s).size() == 1);
  CHECK(module_hom(s, p).size() == 1);  // socle of P_2 is S_2
  const auto sum = direct_sum(p, s);
  CHECK(top_multiplicities(sum) == std::vector<int>{0, 2, 0});
  const auto injective = injective_module(a, 0);
  CHECK(modules_isomorphic(injective, projective_module(a, 2)));
  const auto res = minimal_projective_resolution(s, 5);
  CHECK_FALSE(res.complete);
  CHECK(res.terms[0] == std::vector<int>{0, 1, 0});
  CHECK(res.terms[1] == std::vector<int>{1, 0, 1});
}

TEST_CASE("structure constants json") {
  const auto a = preprojective(DynkinType::parse("A2")).algebra;
  const auto j = a->to_json();
  CHECK(j["dim"] == 4);
  CHECK(j["labels"][0] == "e1");
  CHECK(j["idempotents"].size() == 2);
}
