#include "ppalg/algebra.hpp"

#include <algorithm>

#include <map>
#include <random>
#include <set>

#include "ppalg/errors.hpp"

namespace ppalg {

namespace {

QMatrix column_vector(const Vector& v) {
  QMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector to_vector(const QMatrix& column) {
  Vector v(column.rows());
  for (std::size_t i = 0; i < column.rows(); ++i) v[i] = column(i, 0);
  return v;
}

QMatrix block_diagonal(const std::vector<const QMatrix*>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto* b : blocks) {
    r += b->rows();
    c += b->cols();
  }
  QMatrix out(r, c);
  r = c = 0;
  for (const auto* b : blocks) {
    out.set_block(r, c, *b);
    r += b->rows();
    c += b->cols();
  }
  return out;
}

// Concatenate column blocks; tolerates an empty list by returning rows x 0.
QMatrix hstack_all(std::size_t rows, const std::vector<QMatrix>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  QMatrix out(rows, cols);
  cols = 0;
  for (const auto& b : blocks) {
    out.set_block(0, cols, b);
    cols += b.cols();
  }
  return out;
}

}  // namespace

SubspaceCoordinates::SubspaceCoordinates(QMatrix basis) : basis_(std::move(basis)) {
  auto e = rref(basis_.transpose());
  if (e.rank() != basis_.cols()) throw InvalidArgument("subspace basis is not linearly independent");
  rows_ = e.pivots;
  left_inverse_ = invert(basis_.rows_subset(rows_));
}

QMatrix SubspaceCoordinates::coordinates(const QMatrix& vectors) const {
  if (vectors.rows() != basis_.rows()) throw DimensionMismatch("coordinates: ambient dimension mismatch");
  return left_inverse_ * vectors.rows_subset(rows_);
}

// ---------------------------------------------------------------------------

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                             std::vector<Vector> idempotents)
    : labels_(std::move(labels)),
      products_(std::move(products)),
      idempotents_(std::move(idempotents)),
      derived_(std::make_shared<Derived>()) {
  const std::size_t d = labels_.size();
  if (products_.size() != d * d) throw DimensionMismatch("structure constant table has wrong size");
  for (const auto& e : idempotents_) {
    if (e.size() != d) throw DimensionMismatch("idempotent has wrong length");
  }
  for (const auto& p : products_) {
    for (const auto& [k, c] : p) {
      if (k >= d) throw DimensionMismatch("structure constant index out of range");
    }
  }
}

Vector FinDimAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector FinDimAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

Vector FinDimAlgebra::unit() const {
  Vector u(dim());
  for (const auto& e : idempotents_)
    for (std::size_t k = 0; k < dim(); ++k) u[k] += e[k];
  return u;
}

QMatrix FinDimAlgebra::left_multiplication(std::size_t i) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [k, c] : product(i, j)) m(k, j) += c;
  return m;
}

QMatrix FinDimAlgebra::left_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

QMatrix FinDimAlgebra::right_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(x[j])) continue;
      for (const auto& [k, c] : product(i, j)) m(k, i) += x[j] * c;
    }
  return m;
}

bool FinDimAlgebra::is_associative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector ij(d);
      for (const auto& [k, c] : product(i, j)) ij[k] += c;
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs(d), rhs(d);
        for (std::size_t m = 0; m < d; ++m) {
          if (is_zero(ij[m])) continue;
          for (const auto& [t, c] : product(m, k)) lhs[t] += ij[m] * c;
        }
        for (const auto& [m, c1] : product(j, k))
          for (const auto& [t, c2] : product(i, m)) rhs[t] += c1 * c2;
        if (lhs != rhs) return false;
      }
    }
  return true;
}

FinDimAlgebra FinDimAlgebra::opposite() const {
  const std::size_t d = dim();
  std::vector<SparseVector> op(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) op[i * d + j] = product(j, i);
  return FinDimAlgebra(labels_, std::move(op), idempotents_);
}

const QMatrix& FinDimAlgebra::radical() const {
  std::call_once(derived_->radical_once, [this] {
    const std::size_t d = dim();
    // t_k = tr(L_{b_k}); the trace form is then tr(L_{b_a b_b}) = sum_k c^k_ab t_k.
    Vector trace(d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t m = 0; m < d; ++m)
        for (const auto& [t, c] : product(k, m))
          if (t == m) trace[k] += c;
    QMatrix gram(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (const auto& [k, c] : product(a, b)) gram(a, b) += c * trace[k];
    derived_->radical = kernel(gram).basis;

    const QMatrix& j = derived_->radical;
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < j.cols(); ++a) cols.push_back(to_vector(j.column(a)));
    // most products vanish for path-like bases; only the rest enter the span
    std::vector<QMatrix> prods;
    for (const auto& x : cols)
      for (const auto& y : cols) {
        Vector xy = multiply(x, y);
        if (std::any_of(xy.begin(), xy.end(), [](const Rational& v) { return !is_zero(v); }))
          prods.push_back(column_vector(xy));
      }
    derived_->radical_squared = prods.empty() ? QMatrix(d, 0) : column_space(hstack_all(d, prods));
  });
  return derived_->radical;
}

const QMatrix& FinDimAlgebra::radical_squared() const {
  radical();
  return derived_->radical_squared;
}

QMatrix FinDimAlgebra::peirce(std::size_t i, std::size_t j) const {
  return column_space(left_multiplication(idempotent(i)) * right_multiplication(idempotent(j)));
}

const AlgebraQuiver& FinDimAlgebra::gabriel_quiver() const {
  std::call_once(derived_->quiver_once, [this] {
    const std::size_t m = vertex_count();
    AlgebraQuiver q;
    q.arrow_counts = IntMatrix(m, m);
    const QMatrix& j1 = radical();
    const QMatrix& j2 = radical_squared();
    const std::size_t d = dim();
    // Peirce block of each basis vector, when the basis is adapted (both the
    // path basis of Lambda and the Hom basis of End(T) are). Then projecting
    // onto e_to A e_from is just restricting coordinates.
    auto acts = [&](const Vector& e, std::size_t k, bool left) {
      Vector out(d);
      for (std::size_t a = 0; a < d; ++a) {
        if (is_zero(e[a])) continue;
        for (const auto& [idx, c] : left ? product(a, k) : product(k, a)) out[idx] += e[a] * c;
      }
      return out;
    };
    std::vector<std::pair<std::size_t, std::size_t>> block(d, {m, m});
    bool adapted = true;
    for (std::size_t k = 0; k < d && adapted; ++k) {
      const Vector b = basis_vector(k);
      for (std::size_t i = 0; i < m; ++i) {
        if (acts(idempotent(i), k, true) == b) block[k].first = i;
        if (acts(idempotent(i), k, false) == b) block[k].second = i;
      }
      adapted = block[k].first < m && block[k].second < m;
    }
    // e_to X e_from column by column; sparse products beat dense projections
    auto project = [&](const QMatrix& x, std::size_t to, std::size_t from) {
      std::vector<QMatrix> cols;
      for (std::size_t c = 0; c < x.cols(); ++c) {
        Vector v = multiply(multiply(idempotent(to), to_vector(x.column(c))), idempotent(from));
        if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return !is_zero(r); }))
          cols.push_back(column_vector(v));
      }
      return cols.empty() ? QMatrix(d, 0) : column_space(hstack_all(d, cols));
    };
    for (std::size_t from = 0; from < m; ++from) {
      for (std::size_t to = 0; to < m; ++to) {
        std::vector<std::size_t> rows;
        QMatrix j1_part, j2_part;
        if (adapted) {
          for (std::size_t k = 0; k < d; ++k)
            if (block[k] == std::pair{to, from}) rows.push_back(k);
          if (rows.empty()) continue;
          j1_part = column_space(j1.rows_subset(rows));
          j2_part = column_space(j2.rows_subset(rows));
        } else {
          j1_part = project(j1, to, from);
          j2_part = project(j2, to, from);
        }
        if (j1_part.cols() == j2_part.cols()) continue;
        auto e = rref(hstack(j2_part, j1_part));
        for (auto p : e.pivots) {
          if (p < j2_part.cols()) continue;
          Vector lift = to_vector(j1_part.column(p - j2_part.cols()));
          if (adapted) {
            Vector full(d);
            for (std::size_t i = 0; i < rows.size(); ++i) full[rows[i]] = lift[i];
            lift = std::move(full);
          }
          q.arrows.push_back({from, to, std::move(lift)});
          ++q.arrow_counts(from, to);
        }
      }
    }
    derived_->quiver = std::move(q);
  });
  return derived_->quiver;
}

IntMatrix FinDimAlgebra::cartan_matrix() const {
  const std::size_t m = vertex_count();
  IntMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = static_cast<std::int64_t>(peirce(i, j).cols());
  return c;
}

nlohmann::json FinDimAlgebra::to_json() const {
  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : p) terms.push_back({k, to_string(c)});
      products.push_back({i, j, terms});
    }
  nlohmann::json idem = nlohmann::json::array();
  for (const auto& e : idempotents_) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : e) v.push_back(to_string(x));
    idem.push_back(v);
  }
  return {{"dim", dim()}, {"labels", labels_}, {"idempotents", idem}, {"products", products}};
}

// ---------------------------------------------------------------------------

QMatrix AlgebraModule::act(const Vector& x) const {
  QMatrix m(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    m = m + x[i] * action[i];
  }
  return m;
}

std::vector<std::size_t> AlgebraModule::dimension_vector() const {
  std::vector<std::size_t> dv;
  for (std::size_t i = 0; i < algebra->vertex_count(); ++i) dv.push_back(rank(act(algebra->idempotent(i))));
  return dv;
}

AlgebraModule zero_module(const AlgebraPtr& a) {
  return {a, 0, std::vector<QMatrix>(a->dim(), QMatrix(0, 0))};
}

AlgebraModule submodule(const AlgebraModule& m, const QMatrix& basis) {
  SubspaceCoordinates coords(basis);
  AlgebraModule out{m.algebra, basis.cols(), {}};
  out.action.reserve(m.action.size());
  for (const auto& act : m.action) out.action.push_back(coords.coordinates(act * basis));
  return out;
}

AlgebraModule quotient_module(const AlgebraModule& m, const QMatrix& sub_basis) {
  const std::size_t n = m.dim, k = sub_basis.cols();
  auto e = rref(hstack(sub_basis, QMatrix::identity(n)));
  std::vector<std::size_t> complement;
  for (auto p : e.pivots)
    if (p >= k) complement.push_back(p - k);
  const QMatrix comp = QMatrix::identity(n).columns(complement);
  const QMatrix change = invert(hstack(sub_basis, comp));
  const QMatrix project = change.block(k, 0, n - k, n);
  AlgebraModule out{m.algebra, n - k, {}};
  for (const auto& act : m.action) out.action.push_back(project * act * comp);
  return out;
}

AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b) {
  AlgebraModule out{a.algebra, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) out.action.push_back(block_diagonal({&a.action[i], &b.action[i]}));
  return out;
}

QMatrix radical_of_module(const AlgebraModule& m) {
  const QMatrix& j = m.algebra->radical();
  std::vector<QMatrix> images;
  for (std::size_t c = 0; c < j.cols(); ++c) images.push_back(m.act(to_vector(j.column(c))));
  return column_space(hstack_all(m.dim, images));
}

AlgebraModule regular_module(const AlgebraPtr& a) {
  AlgebraModule out{a, a->dim(), {}};
  for (std::size_t b = 0; b < a->dim(); ++b) out.action.push_back(a->left_multiplication(b));
  return out;
}

AlgebraModule projective_module(const AlgebraPtr& a, std::size_t vertex) {
  const QMatrix basis = column_space(a->right_multiplication(a->idempotent(vertex)));
  return submodule(regular_module(a), basis);
}

AlgebraModule injective_module(const AlgebraPtr& a, std::size_t vertex) {
  const QMatrix basis = column_space(a->left_multiplication(a->idempotent(vertex)));
  SubspaceCoordinates coords(basis);
  AlgebraModule out{a, basis.cols(), {}};
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const QMatrix c = coords.coordinates(a->right_multiplication(a->basis_vector(b)) * basis);
    out.action.push_back(c.transpose());
  }
  return out;
}

AlgebraModule simple_module(const AlgebraPtr& a, std::size_t vertex) {
  const AlgebraModule p = projective_module(a, vertex);
  return quotient_module(p, radical_of_module(p));
}

AlgebraModule dual_regular_module(const AlgebraPtr& a, const AlgebraPtr& op) {
  AlgebraModule out{op, a->dim(), {}};
  for (std::size_t b = 0; b < a->dim(); ++b) out.action.push_back(a->left_multiplication(b).transpose());
  return out;
}

std::vector<std::pair<std::size_t, QMatrix>> top_vectors(const AlgebraModule& m) {
  std::vector<std::pair<std::size_t, QMatrix>> out;
  if (m.dim == 0) return out;
  const QMatrix jm = radical_of_module(m);
  for (std::size_t i = 0; i < m.algebra->vertex_count(); ++i) {
    const QMatrix part = column_space(m.act(m.algebra->idempotent(i)));
    auto e = rref(hstack(jm, part));
    for (auto p : e.pivots)
      if (p >= jm.cols()) out.emplace_back(i, part.column(p - jm.cols()));
  }
  return out;
}

std::vector<int> top_multiplicities(const AlgebraModule& m) {
  std::vector<int> mult(m.algebra->vertex_count(), 0);
  for (const auto& [i, v] : top_vectors(m)) ++mult[i];
  return mult;
}

int ProjectiveResolution::length() const { return static_cast<int>(terms.size()) - 1; }

namespace {

struct ProjectiveData {
  QMatrix elements;  // basis of A e_i inside A
  AlgebraModule module;
};

std::vector<ProjectiveData> projectives_of(const AlgebraPtr& a) {
  std::vector<ProjectiveData> out;
  const AlgebraModule reg = regular_module(a);
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    QMatrix basis = column_space(a->right_multiplication(a->idempotent(i)));
    out.push_back({basis, submodule(reg, basis)});
  }
  return out;
}

}  // namespace

ProjectiveResolution minimal_projective_resolution(const AlgebraModule& m, std::size_t max_length) {
  const AlgebraPtr& a = m.algebra;
  const auto projectives = projectives_of(a);
  ProjectiveResolution res;
  AlgebraModule current = m;
  for (std::size_t k = 0;; ++k) {
    if (current.dim == 0) {
      res.complete = true;
      break;
    }
    if (k > max_length) {
      res.complete = false;
      break;
    }
    const auto tops = top_vectors(current);
    std::vector<int> mult(a->vertex_count(), 0);
    std::vector<QMatrix> cover_blocks;
    std::size_t cover_dim = 0;
    for (const auto& [i, v] : tops) {
      ++mult[i];
      // Column b of `images` is b_b * v; composing with the basis of A e_i
      // gives the map A e_i -> M, x -> x v.
      QMatrix images(current.dim, a->dim());
      for (std::size_t b = 0; b < a->dim(); ++b) images.set_block(0, b, current.action[b] * v);
      cover_blocks.push_back(images * projectives[i].elements);
      cover_dim += projectives[i].module.dim;
    }
    const QMatrix cover = hstack_all(current.dim, cover_blocks);
    AlgebraModule p{a, cover_dim, {}};
    for (std::size_t b = 0; b < a->dim(); ++b) {
      std::vector<const QMatrix*> blocks;
      for (const auto& [i, v] : tops) blocks.push_back(&projectives[i].module.action[b]);
      p.action.push_back(block_diagonal(blocks));
    }
    res.terms.push_back(std::move(mult));
    current = submodule(p, kernel(cover).basis);
  }
  return res;
}

CappedDimension projective_dimension(const AlgebraModule& m, std::size_t cap) {
  const auto res = minimal_projective_resolution(m, cap);
  if (!res.complete) return {static_cast<int>(cap), true};
  return {std::max(res.length(), 0), false};
}

CappedDimension global_dimension(const AlgebraPtr& a, std::size_t cap) {
  CappedDimension out;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    const auto pd = projective_dimension(simple_module(a, i), cap);
    if (pd.at_least) return pd;
    out.value = std::max(out.value, pd.value);
  }
  return out;
}

std::vector<std::size_t> projective_injective_vertices(const AlgebraPtr& a) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> proj_dims;
  for (std::size_t j = 0; j < a->vertex_count(); ++j)
    proj_dims.push_back(rank(a->right_multiplication(a->idempotent(j))));
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    const AlgebraModule inj = injective_module(a, i);
    const auto top = top_multiplicities(inj);
    int total = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < top.size(); ++j) {
      total += top[j];
      if (top[j]) where = j;
    }
    // A module with simple top S_j is a quotient of P_j; equal dimension forces P_j.
    if (total == 1 && inj.dim == proj_dims[where]) out.push_back(i);
  }
  return out;
}

CappedDimension dominant_dimension(const AlgebraPtr& a, std::size_t cap) {
  const auto op = std::make_shared<const FinDimAlgebra>(a->opposite());
  const auto pi = projective_injective_vertices(a);
  const std::set<std::size_t> pi_set(pi.begin(), pi.end());
  const auto res = minimal_projective_resolution(dual_regular_module(a, op), cap);
  for (std::size_t k = 0; k < res.terms.size(); ++k) {
    for (std::size_t i = 0; i < res.terms[k].size(); ++i) {
      if (res.terms[k][i] > 0 && !pi_set.count(i)) return {static_cast<int>(k), false};
    }
  }
  return {static_cast<int>(cap), true};
}

int ext_dim(const AlgebraPtr& a, std::size_t from, std::size_t to, std::size_t degree) {
  const auto res = minimal_projective_resolution(simple_module(a, from), degree);
  if (degree >= res.terms.size()) return 0;
  return res.terms[degree].at(to);
}

std::vector<IntMatrix> ext_table(const AlgebraPtr& a, std::size_t max_degree) {
  const std::size_t m = a->vertex_count();
  std::vector<IntMatrix> out(max_degree + 1, IntMatrix(m, m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto res = minimal_projective_resolution(simple_module(a, i), max_degree);
    for (std::size_t k = 0; k < res.terms.size() && k <= max_degree; ++k)
      for (std::size_t j = 0; j < m; ++j) out[k](i, j) = res.terms[k][j];
  }
  return out;
}

IntMatrix ringel_form(const AlgebraPtr& a, std::size_t cap) {
  const std::size_t m = a->vertex_count();
  IntMatrix r(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto res = minimal_projective_resolution(simple_module(a, i), cap);
    if (!res.complete) throw Error("Ringel form needs finite global dimension within the cap");
    for (std::size_t k = 0; k < res.terms.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) r(i, j) += (k % 2 == 0 ? 1 : -1) * res.terms[k][j];
  }
  return r;
}

namespace {

// Basis adapted to the idempotent decomposition M = (+)_i e_i M.
struct AdaptedModule {
  std::vector<std::size_t> offset;  // start of e_i M, plus total at the end
  QMatrix change;                   // columns: adapted basis in original coordinates
  QMatrix change_inverse;
  std::vector<QMatrix> arrow_blocks;  // per gabriel arrow: e_to M <- e_from M
};

AdaptedModule adapt(const AlgebraModule& m) {
  const auto& a = *m.algebra;
  AdaptedModule out;
  std::vector<QMatrix> parts;
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    out.offset.push_back(total);
    parts.push_back(column_space(m.act(a.idempotent(i))));
    total += parts.back().cols();
  }
  out.offset.push_back(total);
  if (total != m.dim) throw Error("idempotents do not decompose the module");
  out.change = hstack_all(m.dim, parts);
  out.change_inverse = invert(out.change);
  for (const auto& arrow : a.gabriel_quiver().arrows) {
    const QMatrix full = out.change_inverse * m.act(arrow.element) * out.change;
    const std::size_t r0 = out.offset[arrow.to], c0 = out.offset[arrow.from];
    out.arrow_blocks.push_back(full.block(r0, c0, out.offset[arrow.to + 1] - r0, out.offset[arrow.from + 1] - c0));
  }
  return out;
}

}  // namespace

std::vector<QMatrix> module_hom(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.algebra->dim() != n.algebra->dim()) throw DimensionMismatch("modules over different algebras");
  const auto& a = *m.algebra;
  const std::size_t verts = a.vertex_count();
  const AdaptedModule am = adapt(m), an = adapt(n);
  auto dm = [&](std::size_t i) { return am.offset[i + 1] - am.offset[i]; };
  auto dn = [&](std::size_t i) { return an.offset[i + 1] - an.offset[i]; };
  // Unknown Phi_i(r, c) lives at var[i] + r * dm(i) + c.
  std::vector<std::size_t> var(verts + 1, 0);
  for (std::size_t i = 0; i < verts; ++i) var[i + 1] = var[i] + dn(i) * dm(i);
  const std::size_t unknowns = var[verts];

  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  const auto& arrows = a.gabriel_quiver().arrows;
  for (std::size_t t = 0; t < arrows.size(); ++t) {
    const std::size_t i = arrows[t].from, j = arrows[t].to;
    const QMatrix& xm = am.arrow_blocks[t];  // dm(j) x dm(i)
    const QMatrix& xn = an.arrow_blocks[t];  // dn(j) x dn(i)
    // Phi_j X^M - X^N Phi_i = 0
    for (std::size_t r = 0; r < dn(j); ++r)
      for (std::size_t c = 0; c < dm(i); ++c) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t s = 0; s < dm(j); ++s)
          if (!is_zero(xm(s, c))) row.emplace_back(var[j] + r * dm(j) + s, xm(s, c));
        for (std::size_t s = 0; s < dn(i); ++s)
          if (!is_zero(xn(r, s))) row.emplace_back(var[i] + s * dm(i) + c, -xn(r, s));
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  QMatrix eqs(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) eqs(r, c) += v;
  const QMatrix sol = kernel(eqs).basis;

  std::vector<QMatrix> out;
  for (std::size_t t = 0; t < sol.cols(); ++t) {
    QMatrix phi(n.dim, m.dim);
    for (std::size_t i = 0; i < verts; ++i)
      for (std::size_t r = 0; r < dn(i); ++r)
        for (std::size_t c = 0; c < dm(i); ++c) phi(an.offset[i] + r, am.offset[i] + c) = sol(var[i] + r * dm(i) + c, t);
    out.push_back(an.change * phi * am.change_inverse);
  }
  return out;
}

bool modules_isomorphic(const AlgebraModule& m, const AlgebraModule& n, std::uint64_t seed) {
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  if (m.dimension_vector() != n.dimension_vector()) return false;
  const auto hom = module_hom(m, n);
  if (hom.empty()) return false;
  // A generic combination of a Hom basis is invertible exactly when an
  // isomorphism exists; with coefficients from a range of 2001 values the
  // chance of a false negative per trial is at most dim/2001.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int trial = 0; trial < 8; ++trial) {
    QMatrix f(n.dim, m.dim);
    for (const auto& h : hom) f = f + Rational(coeff(rng)) * h;
    if (!is_zero(determinant(f))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

PreprojectiveAlgebra build_preprojective(const DynkinType& type) {
  PreprojectiveAlgebra pa{type, shared_double_quiver(type), nullptr, {}, {}, {}, {}, {}};
  const Quiver& dq = *pa.quiver;
  const std::size_t n = static_cast<std::size_t>(dq.vertex_count);
  const std::size_t arrows = dq.arrows.size();
  pa.arrow_action.assign(arrows, {});

  auto add_basis = [&](std::vector<std::size_t> word, int s, int t, int deg) {
    pa.words.push_back(std::move(word));
    pa.source.push_back(s);
    pa.target.push_back(t);
    pa.degree.push_back(deg);
    return static_cast<std::uint32_t>(pa.words.size() - 1);
  };

  for (std::size_t i = 0; i < n; ++i) add_basis({}, static_cast<int>(i), static_cast<int>(i), 0);
  std::vector<std::size_t> level_begin{0, n};
  for (std::size_t a = 0; a < arrows; ++a) add_basis({a}, dq.arrows[a].source, dq.arrows[a].target, 1);
  level_begin.push_back(pa.words.size());
  for (std::size_t a = 0; a < arrows; ++a) {
    pa.arrow_action[a].resize(pa.words.size());
    pa.arrow_action[a][static_cast<std::size_t>(dq.arrows[a].source)] = {{static_cast<std::uint32_t>(n + a), Rational(1)}};
  }

  for (std::size_t level = 1;; ++level) {
    const std::size_t lo = level_begin[level], hi = level_begin[level + 1];
    const std::size_t prev_lo = level_begin[level - 1];
    // Candidates a * y for y of degree `level`.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cand_index;
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t y = lo; y < hi; ++y)
      for (std::size_t a = 0; a < arrows; ++a)
        if (dq.arrows[a].source == pa.target[y]) {
          cand_index[{a, y}] = cands.size();
          cands.emplace_back(a, y);
        }
    if (cands.empty()) break;

    // rho_i * c for c of degree level-1 ending at i.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rel_rows;
    for (std::size_t c = prev_lo; c < lo; ++c) {
      const int i = pa.target[c];
      std::map<std::size_t, Rational> row;
      for (std::size_t al = 0; al < arrows; al += 2) {
        const Arrow& arr = dq.arrows[al];
        if (arr.source == i) {
          for (const auto& [y, coef] : pa.arrow_action[al][c]) row[cand_index.at({star(al), y})] += coef;
        }
        if (arr.target == i) {
          for (const auto& [y, coef] : pa.arrow_action[star(al)][c]) row[cand_index.at({al, y})] -= coef;
        }
      }
      std::vector<std::pair<std::size_t, Rational>> sparse;
      for (auto& [k, v] : row)
        if (!is_zero(v)) sparse.emplace_back(k, v);
      if (!sparse.empty()) rel_rows.push_back(std::move(sparse));
    }
    QMatrix rel(rel_rows.size(), cands.size());
    for (std::size_t r = 0; r < rel_rows.size(); ++r)
      for (const auto& [k, v] : rel_rows[r]) rel(r, k) = v;
    const auto ech = rref(rel);

    std::vector<long> pivot_row(cands.size(), -1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<long>(r);
    std::vector<std::uint32_t> new_index(cands.size(), 0);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (pivot_row[k] >= 0) continue;
      const auto [a, y] = cands[k];
      std::vector<std::size_t> word{a};
      word.insert(word.end(), pa.words[y].begin(), pa.words[y].end());
      new_index[k] = add_basis(std::move(word), pa.source[y], dq.arrows[a].target, static_cast<int>(level + 1));
    }
    level_begin.push_back(pa.words.size());
    for (auto& table : pa.arrow_action) table.resize(pa.words.size());
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const auto [a, y] = cands[k];
      SparseVector value;
      if (pivot_row[k] < 0) {
        value.emplace_back(new_index[k], Rational(1));
      } else {
        const auto r = static_cast<std::size_t>(pivot_row[k]);
        for (std::size_t f = 0; f < cands.size(); ++f) {
          if (pivot_row[f] >= 0 || is_zero(ech.reduced(r, f))) continue;
          value.emplace_back(new_index[f], -ech.reduced(r, f));
        }
      }
      pa.arrow_action[a][y] = std::move(value);
    }
    if (level_begin[level + 2] == level_begin[level + 1]) break;
  }

  const std::size_t d = pa.words.size();
  for (auto& table : pa.arrow_action) table.resize(d);
  std::vector<SparseVector> products(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (pa.source[x] != pa.target[y]) continue;
      std::map<std::uint32_t, Rational> v{{static_cast<std::uint32_t>(y), Rational(1)}};
      for (auto it = pa.words[x].rbegin(); it != pa.words[x].rend() && !v.empty(); ++it) {
        std::map<std::uint32_t, Rational> next;
        for (const auto& [k, c] : v)
          for (const auto& [t, c2] : pa.arrow_action[*it][k]) next[t] += c * c2;
        std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
        v = std::move(next);
      }
      products[x * d + y].assign(v.begin(), v.end());
    }

  std::vector<std::string> labels;
  for (std::size_t b = 0; b < d; ++b) {
    if (pa.words[b].empty()) {
      labels.push_back("e" + std::to_string(pa.source[b] + 1));
      continue;
    }
    std::string s;
    for (auto a : pa.words[b]) s += (s.empty() ? "" : " ") + dq.arrows[a].id;
    labels.push_back(s);
  }
  std::vector<Vector> idem;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(d);
    e[i] = 1;
    idem.push_back(std::move(e));
  }
  pa.algebra = std::make_shared<const FinDimAlgebra>(std::move(labels), std::move(products), std::move(idem));
  return pa;
}

const PreprojectiveAlgebra& preprojective(const DynkinType& type) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<PreprojectiveAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[type.name()];
  if (!slot) slot = std::make_unique<PreprojectiveAlgebra>(build_preprojective(type));
  return *slot;
}

}  // namespace ppalg
