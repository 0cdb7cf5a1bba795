#include "ppalg/endo_quiver.hpp"

#include <cstdlib>
#include <sstream>

#include "ppalg/approximation.hpp"

namespace ppalg {

EndomorphismAlgebra endomorphism_algebra(const std::vector<int>& order, const Catalog& cat) {
  const std::size_t r = order.size();
  EndomorphismAlgebra e;
  e.order = order;
  for (int id : order) e.summands.push_back(cat.entry(id).module);
  e.hom.assign(r, {});
  e.offset.assign(r, std::vector<std::size_t>(r, 0));
  std::size_t dim = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> where;  // (i, j, index in hom[i][j])
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      e.hom[i].push_back(hom_space(cat.entry(order[i]).module, cat.entry(order[j]).module));
      e.offset[i][j] = dim;
      for (std::size_t p = 0; p < e.hom[i][j].dim(); ++p) where.emplace_back(i, j, p);
      dim += e.hom[i][j].dim();
    }
  }

  std::vector<std::string> labels;
  for (const auto& [i, j, p] : where)
    labels.push_back("h" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(p));

  std::vector<SparseVector> products(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto& [j2, k, px] = where[x];
    for (std::size_t y = 0; y < dim; ++y) {
      const auto& [i, j, py] = where[y];
      if (j != j2) continue;
      const auto composite = compose(e.hom[j][k].basis[px], e.hom[i][j].basis[py]);
      const auto coords = e.hom[i][k].coordinates(composite);
      for (std::size_t q = 0; q < coords.size(); ++q)
        if (!is_zero(coords[q])) products[x * dim + y].emplace_back(static_cast<std::uint32_t>(e.offset[i][k] + q), coords[q]);
    }
  }

  std::vector<Vector> idempotents;
  for (std::size_t i = 0; i < r; ++i) {
    Vector v(dim, Rational(0));
    const auto coords = e.hom[i][i].coordinates(Morphism::identity(cat.entry(order[i]).module));
    for (std::size_t q = 0; q < coords.size(); ++q) v[e.offset[i][i] + q] = coords[q];
    idempotents.push_back(std::move(v));
  }
  e.algebra = std::make_shared<const FinDimAlgebra>(std::move(labels), std::move(products), std::move(idempotents));
  return e;
}

IntMatrix gamma_quiver(const std::vector<int>& order, const Catalog& cat) {
  return endomorphism_algebra(order, cat).algebra->gabriel_quiver().arrow_counts;
}

IntMatrix b_matrix(const IntMatrix& arrows) {
  IntMatrix b(arrows.rows(), arrows.cols());
  for (std::size_t i = 0; i < arrows.rows(); ++i)
    for (std::size_t j = 0; j < arrows.cols(); ++j) b(i, j) = arrows(j, i) - arrows(i, j);
  return b;
}

IntMatrix cartan_of(const std::vector<int>& order, const Catalog& cat) {
  const std::size_t r = order.size();
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = cat.hom(order[j], order[i]);
  return c;
}

IntMatrix ringel_of(const IntMatrix& cartan) {
  return IntMatrix::from_rational(invert(cartan.to_rational()).transpose());
}

IntMatrix s_matrix(const IntMatrix& b, std::size_t k) {
  if (k >= b.rows()) throw InvalidArgument("s_matrix: direction out of range");
  IntMatrix s = IntMatrix::identity(b.rows());
  for (std::size_t j = 0; j < b.rows(); ++j) {
    const std::int64_t bkj = j < b.cols() ? b(k, j) : 0;
    s(k, j) = (j == k ? -1 : 0) + (std::llabs(bkj) - bkj) / 2;
  }
  return s;
}

ExchangeData exchange_data(const std::vector<int>& order, const Catalog& cat) {
  const auto sum = ModuleSum::from_ids(order);
  const auto r = static_cast<std::size_t>(positive_root_count(cat.type()));
  const auto n = static_cast<std::size_t>(cat.type().rank());
  if (order.size() != r || !sum.is_basic() || !cat.is_rigid(sum))
    throw NotCompleteRigid("not a basic complete rigid module: " + sum.to_string());
  for (std::size_t i = 0; i < r; ++i)
    if (cat.entry(order[i]).projective() != (i >= r - n))
      throw InvalidArgument("summand order must list the exchangeable summands first");

  ExchangeData d;
  d.order = order;
  d.exchangeable = r - n;
  d.arrows = gamma_quiver(order, cat);
  d.b = b_matrix(d.arrows);
  d.b_principal = d.b.leading_columns(d.exchangeable);
  d.cartan = cartan_of(order, cat);
  d.ringel = ringel_of(d.cartan);
  return d;
}

namespace {
nlohmann::json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}
}  // namespace

nlohmann::json ExchangeData::to_json() const {
  return {{"order", order},       {"exchangeable", exchangeable},      {"arrows", matrix_json(arrows)},
          {"B", matrix_json(b)},  {"B0", matrix_json(b_principal)},   {"C", matrix_json(cartan)},
          {"R", matrix_json(ringel)}};
}

std::string gamma_dot(const std::vector<int>& order, const IntMatrix& arrows, const Catalog& cat) {
  std::ostringstream os;
  os << "digraph Gamma {\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& e = cat.entry(order[i]);
    os << "  T" << i + 1 << " [label=\"T" << i + 1 << ": " << e.display << "\"" << (e.projective() ? ", shape=box" : "")
       << "];\n";
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      for (std::int64_t a = 0; a < arrows(i, j); ++a) os << "  T" << i + 1 << " -> T" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

AlgebraModule ft_module(const Representation& x, const EndomorphismAlgebra& e) {
  const std::size_t r = e.order.size();
  std::vector<HomSpace> spaces;
  std::vector<std::size_t> start;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < r; ++i) {
    spaces.push_back(hom_space(x, e.summands[i]));
    start.push_back(dim);
    dim += spaces.back().dim();
  }
  AlgebraModule m{e.algebra, dim, std::vector<QMatrix>(e.algebra->dim(), QMatrix(dim, dim))};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t p = 0; p < e.hom[i][j].dim(); ++p) {
        auto& act = m.action[e.offset[i][j] + p];
        for (std::size_t q = 0; q < spaces[i].dim(); ++q) {
          const auto coords = spaces[j].coordinates(compose(e.hom[i][j].basis[p], spaces[i].basis[q]));
          for (std::size_t s = 0; s < coords.size(); ++s) act(start[j] + s, start[i] + q) = coords[s];
        }
      }
  return m;
}

}  // namespace ppalg
