#include "ppalg/representation.hpp"

#include <algorithm>
#include <random>

#include "ppalg/errors.hpp"

namespace ppalg {

namespace {

QMatrix identity_columns(std::size_t n, const std::vector<std::size_t>& cols) {
  return QMatrix::identity(n).columns(cols);
}

// Vertex positions of the basis elements of Lambda e_i, grouped by target.
struct ProjectiveLayout {
  std::vector<std::vector<std::size_t>> elements;  // per target vertex
  std::vector<std::size_t> position;               // basis index -> position in its vertex
};

ProjectiveLayout projective_layout(const PreprojectiveAlgebra& pa, int vertex) {
  const std::size_t n = pa.quiver->vertex_count;
  ProjectiveLayout out;
  out.elements.assign(n, {});
  out.position.assign(pa.words.size(), 0);
  for (std::size_t b = 0; b < pa.words.size(); ++b) {
    if (pa.source[b] != vertex) continue;
    auto& list = out.elements[pa.target[b]];
    out.position[b] = list.size();
    list.push_back(b);
  }
  return out;
}

// w * y where w = w[0] w[1] ... w[k-1] acts right to left.
QMatrix apply_word(const Representation& m, const std::vector<std::size_t>& word, QMatrix y) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = m.map(*it) * y;
  return y;
}

// The map Lambda e_i -> M sending e_i to y (a column in M_i).
Morphism generator_map(const Representation& m, int vertex, const QMatrix& y) {
  const auto& pa = preprojective(m.type());
  const auto layout = projective_layout(pa, vertex);
  Morphism f;
  for (std::size_t j = 0; j < m.vertex_count(); ++j) {
    QMatrix c(static_cast<std::size_t>(m.dim(static_cast<int>(j))), layout.elements[j].size());
    for (std::size_t p = 0; p < layout.elements[j].size(); ++p)
      c.set_block(0, p, apply_word(m, pa.words[layout.elements[j][p]], y));
    f.components.push_back(std::move(c));
  }
  return f;
}

QMatrix power_by_squaring(QMatrix a, std::size_t at_least) {
  std::size_t e = 1;
  while (e < at_least) {
    a = a * a;
    e *= 2;
  }
  return a;
}

Rational trace_of_product(const QMatrix& a, const QMatrix& b) {
  Rational t = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(a(r, c)) && !is_zero(b(c, r))) t += a(r, c) * b(c, r);
  return t;
}

std::vector<QMatrix> socle_bases(const Representation& m) {
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    QMatrix stacked(0, static_cast<std::size_t>(m.dim(static_cast<int>(i))));
    for (std::size_t a = 0; a < m.arrow_count(); ++a)
      if (m.quiver().arrows[a].source == static_cast<int>(i)) stacked = vstack(stacked, m.map(a));
    out.push_back(kernel(stacked).basis);
  }
  return out;
}

}  // namespace

Representation::Representation(DynkinType type, DimensionVector dims)
    : type_(type), quiver_(shared_double_quiver(type)), dims_(std::move(dims)) {
  if (dims_.size() != static_cast<std::size_t>(quiver_->vertex_count)) {
    throw DimensionMismatch("dimension vector length does not match " + type_.name());
  }
  for (int d : dims_)
    if (d < 0) throw DimensionMismatch("negative dimension");
  for (const auto& a : quiver_->arrows) maps_.emplace_back(dims_[a.target], dims_[a.source]);
}

Representation::Representation(DynkinType type, DimensionVector dims, std::vector<QMatrix> maps)
    : Representation(type, std::move(dims)) {
  if (maps.size() != maps_.size()) throw DimensionMismatch("wrong number of arrow matrices");
  maps_ = std::move(maps);
  check_shapes();
}

void Representation::check_shapes() const {
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = quiver_->arrows[a];
    if (maps_[a].rows() != static_cast<std::size_t>(dims_[arr.target]) ||
        maps_[a].cols() != static_cast<std::size_t>(dims_[arr.source])) {
      throw DimensionMismatch("matrix for arrow " + arr.id + " has the wrong shape");
    }
  }
}

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Representation Representation::simple(const DynkinType& type, int vertex) {
  DimensionVector d(static_cast<std::size_t>(type.rank()), 0);
  d.at(static_cast<std::size_t>(vertex)) = 1;
  return Representation(type, d);
}

Representation Representation::projective(const DynkinType& type, int vertex) {
  const auto& pa = preprojective(type);
  const auto layout = projective_layout(pa, vertex);
  DimensionVector d;
  for (const auto& list : layout.elements) d.push_back(static_cast<int>(list.size()));
  Representation p(type, d);
  for (std::size_t a = 0; a < p.arrow_count(); ++a) {
    const auto& arr = p.quiver().arrows[a];
    for (std::size_t y : layout.elements[arr.source])
      for (const auto& [k, c] : pa.arrow_action[a][y]) p.map(a)(layout.position[k], layout.position[y]) = c;
  }
  return p;
}

// ---------------------------------------------------------------------------

Morphism Morphism::zero(const Representation& from, const Representation& to) {
  Morphism f;
  for (std::size_t i = 0; i < from.vertex_count(); ++i)
    f.components.emplace_back(to.dim(static_cast<int>(i)), from.dim(static_cast<int>(i)));
  return f;
}

Morphism Morphism::identity(const Representation& m) {
  Morphism f;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) f.components.push_back(QMatrix::identity(m.dim(static_cast<int>(i))));
  return f;
}

bool Morphism::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const QMatrix& c) { return c.is_zero(); });
}

bool Morphism::is_isomorphism() const {
  for (const auto& c : components) {
    if (c.rows() != c.cols()) return false;
    if (c.rows() > 0 && ppalg::is_zero(determinant(c))) return false;
  }
  return true;
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += ppalg::rank(c);
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.components.size() != f.components.size()) throw DimensionMismatch("compose: vertex count mismatch");
  Morphism h;
  for (std::size_t i = 0; i < f.components.size(); ++i) h.components.push_back(g.components[i] * f.components[i]);
  return h;
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  Morphism h;
  for (std::size_t i = 0; i < a.components.size(); ++i) h.components.push_back(a.components[i] + b.components[i]);
  return h;
}

Morphism operator*(const Rational& s, const Morphism& a) {
  Morphism h;
  for (const auto& c : a.components) h.components.push_back(s * c);
  return h;
}

bool is_homomorphism(const Morphism& f, const Representation& from, const Representation& to) {
  for (std::size_t a = 0; a < from.arrow_count(); ++a) {
    const auto& arr = from.quiver().arrows[a];
    if (f.components[arr.target] * from.map(a) != to.map(a) * f.components[arr.source]) return false;
  }
  return true;
}

RelationReport check_relations(const Representation& m) {
  RelationReport report;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    const auto d = static_cast<std::size_t>(m.dim(static_cast<int>(i)));
    QMatrix defect(d, d);
    for (std::size_t a = 0; a < m.arrow_count(); a += 2) {
      const auto& arr = m.quiver().arrows[a];
      if (arr.source == static_cast<int>(i)) defect = defect + m.map(star(a)) * m.map(a);
      if (arr.target == static_cast<int>(i)) defect = defect - m.map(a) * m.map(star(a));
    }
    if (!defect.is_zero()) {
      report.ok = false;
      report.failing_vertices.push_back(static_cast<int>(i));
    }
    report.defects.push_back(std::move(defect));
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Rational> HomSpace::coordinates(const Morphism& f) const {
  std::vector<Rational> flat;
  for (const auto& c : f.components) flat.insert(flat.end(), c.data().begin(), c.data().end());
  std::vector<Rational> out;
  for (auto p : free) out.push_back(flat.at(p));
  return out;
}

Morphism HomSpace::combination(const std::vector<Rational>& coeffs) const {
  if (basis.empty()) throw InvalidArgument("combination in a zero Hom space");
  Morphism f = Rational(0) * basis[0];
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (!is_zero(coeffs.at(t))) f = f + coeffs[t] * basis[t];
  return f;
}

namespace {

// Unknowns: one block g_i (dim y_i x dim x_i) per vertex, row-major.
QMatrix hom_equations(const Representation& x, const Representation& y, std::vector<std::size_t>& offsets) {
  if (!(x.type() == y.type())) throw DimensionMismatch("hom_space: modules of different types");
  const std::size_t n = x.vertex_count();
  offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    offsets[i + 1] = offsets[i] + static_cast<std::size_t>(y.dim(static_cast<int>(i)) * x.dim(static_cast<int>(i)));
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) {
    return offsets[i] + r * static_cast<std::size_t>(x.dim(static_cast<int>(i))) + c;
  };
  std::size_t rows = 0;
  for (const auto& arr : x.quiver().arrows) rows += static_cast<std::size_t>(y.dim(arr.target) * x.dim(arr.source));
  QMatrix eqs(rows, offsets[n]);
  std::size_t row = 0;
  // g_t f^X_a - f^Y_a g_s = 0
  for (std::size_t a = 0; a < x.arrow_count(); ++a) {
    const auto& arr = x.quiver().arrows[a];
    const auto s = static_cast<std::size_t>(arr.source), t = static_cast<std::size_t>(arr.target);
    const QMatrix& fx = x.map(a);
    const QMatrix& fy = y.map(a);
    for (std::size_t r = 0; r < static_cast<std::size_t>(y.dim(arr.target)); ++r)
      for (std::size_t c = 0; c < static_cast<std::size_t>(x.dim(arr.source)); ++c, ++row) {
        for (std::size_t k = 0; k < fx.rows(); ++k)
          if (!is_zero(fx(k, c))) eqs(row, var(t, r, k)) += fx(k, c);
        for (std::size_t k = 0; k < fy.cols(); ++k)
          if (!is_zero(fy(r, k))) eqs(row, var(s, k, c)) -= fy(r, k);
      }
  }
  return eqs;
}

}  // namespace

HomSpace hom_space(const Representation& x, const Representation& y) {
  const std::size_t n = x.vertex_count();
  HomSpace h;
  const QMatrix eqs = hom_equations(x, y, h.offsets);
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) {
    return h.offsets[i] + r * static_cast<std::size_t>(x.dim(static_cast<int>(i))) + c;
  };
  const auto ker = kernel(eqs);
  h.free = ker.free;
  for (std::size_t t = 0; t < ker.basis.cols(); ++t) {
    Morphism f;
    for (std::size_t i = 0; i < n; ++i) {
      const auto yr = static_cast<std::size_t>(y.dim(static_cast<int>(i)));
      const auto xc = static_cast<std::size_t>(x.dim(static_cast<int>(i)));
      QMatrix c(yr, xc);
      for (std::size_t r = 0; r < yr; ++r)
        for (std::size_t k = 0; k < xc; ++k) c(r, k) = ker.basis(var(i, r, k), t);
      f.components.push_back(std::move(c));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

int hom_dim(const Representation& x, const Representation& y) { return static_cast<int>(hom_space(x, y).dim()); }

int hom_dim_mod(const Representation& x, const Representation& y, std::uint32_t p) {
  std::vector<std::size_t> offsets;
  const QMatrix eqs = hom_equations(x, y, offsets);
  return static_cast<int>(eqs.cols() - rank(reduce_mod(eqs, p)));
}

int ext1_dim(const Representation& x, const Representation& y) {
  return hom_dim(x, y) + hom_dim(y, x) - bilinear_form(x.type(), x.dims(), y.dims());
}

int ext1_dim_oracle(const Representation& x, const Representation& y) {
  const auto cover = projective_cover(x);
  const auto omega_bases = kernel_bases(cover.map);
  const Representation omega = subrepresentation(cover.projective, omega_bases);
  Morphism inclusion{omega_bases};
  const HomSpace target = hom_space(omega, y);
  if (target.dim() == 0) return 0;

  // Hom(P, Y) = (+)_c Y_{i_c}: one generator map per basis vector of Y_{i_c}.
  const auto& pa = preprojective(x.type());
  std::vector<std::size_t> block_offset(x.vertex_count(), 0);
  std::vector<std::vector<Rational>> images;
  for (std::size_t c = 0; c < cover.vertices.size(); ++c) {
    const int i = cover.vertices[c];
    const auto layout = projective_layout(pa, i);
    for (int v = 0; v < y.dim(i); ++v) {
      QMatrix yv(static_cast<std::size_t>(y.dim(i)), 1);
      yv(static_cast<std::size_t>(v), 0) = 1;
      const Morphism g = generator_map(y, i, yv);
      // extend by zero on the other summands of P
      Morphism full = Morphism::zero(cover.projective, y);
      for (std::size_t j = 0; j < x.vertex_count(); ++j)
        full.components[j].set_block(0, block_offset[j], g.components[j]);
      images.push_back(target.coordinates(compose(full, inclusion)));
    }
    for (std::size_t j = 0; j < x.vertex_count(); ++j) block_offset[j] += layout.elements[j].size();
  }
  QMatrix coords(images.size(), target.dim());
  for (std::size_t r = 0; r < images.size(); ++r)
    for (std::size_t c = 0; c < target.dim(); ++c) coords(r, c) = images[r][c];
  return static_cast<int>(target.dim() - rank(coords));
}

ExtensionSpace extension_space(const Representation& x, const Representation& y) {
  const Quiver& q = x.quiver();
  const std::size_t n = x.vertex_count(), arrows = x.arrow_count();
  auto xd = [&](int i) { return static_cast<std::size_t>(x.dim(i)); };
  auto yd = [&](int i) { return static_cast<std::size_t>(y.dim(i)); };
  // Unknowns: c_a (Y_t x X_s) for every arrow.
  std::vector<std::size_t> off(arrows + 1, 0);
  for (std::size_t a = 0; a < arrows; ++a) off[a + 1] = off[a] + yd(q.arrows[a].target) * xd(q.arrows[a].source);
  const std::size_t unknowns = off[arrows];

  // Cocycle condition: the off-diagonal block of each vertex relation vanishes.
  // For a product f_b f_a the block is f^Y_b c_a + c_b f^X_a.
  std::size_t rows = 0;
  for (std::size_t i = 0; i < n; ++i) rows += yd(static_cast<int>(i)) * xd(static_cast<int>(i));
  QMatrix z(rows, unknowns);
  std::size_t row0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t yr = yd(static_cast<int>(i)), xc = xd(static_cast<int>(i));
    auto add_product = [&](std::size_t b, std::size_t a, int sign) {
      // f_b f_a with s(a) = i = t(b)
      const QMatrix& fyb = y.map(b);
      const QMatrix& fxa = x.map(a);
      const std::size_t mid_y = yd(q.arrows[a].target), mid_x = xd(q.arrows[b].source);
      for (std::size_t r = 0; r < yr; ++r)
        for (std::size_t c = 0; c < xc; ++c) {
          const std::size_t row = row0 + r * xc + c;
          for (std::size_t k = 0; k < mid_y; ++k)
            if (!is_zero(fyb(r, k))) z(row, off[a] + k * xc + c) += sign * fyb(r, k);
          for (std::size_t k = 0; k < mid_x; ++k)
            if (!is_zero(fxa(k, c))) z(row, off[b] + r * mid_x + k) += sign * fxa(k, c);
        }
    };
    for (std::size_t a = 0; a < arrows; a += 2) {
      const auto& arr = q.arrows[a];
      if (arr.source == static_cast<int>(i)) add_product(star(a), a, 1);
      if (arr.target == static_cast<int>(i)) add_product(a, star(a), -1);
    }
    row0 += yr * xc;
  }
  const QMatrix cocycles = kernel(z).basis;

  // Coboundaries c_a = f^Y_a h_s - h_t f^X_a for h in (+)_i Hom_K(X_i, Y_i).
  std::vector<std::size_t> hoff(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) hoff[i + 1] = hoff[i] + yd(static_cast<int>(i)) * xd(static_cast<int>(i));
  QMatrix bound(unknowns, hoff[n]);
  for (std::size_t a = 0; a < arrows; ++a) {
    const auto s = q.arrows[a].source, t = q.arrows[a].target;
    const QMatrix& fy = y.map(a);
    const QMatrix& fx = x.map(a);
    for (std::size_t r = 0; r < yd(t); ++r)
      for (std::size_t c = 0; c < xd(s); ++c) {
        const std::size_t row = off[a] + r * xd(s) + c;
        for (std::size_t k = 0; k < yd(s); ++k)
          if (!is_zero(fy(r, k))) bound(row, hoff[s] + k * xd(s) + c) += fy(r, k);
        for (std::size_t k = 0; k < xd(t); ++k)
          if (!is_zero(fx(k, c))) bound(row, hoff[t] + r * xd(t) + k) -= fx(k, c);
      }
  }
  const QMatrix coboundaries = column_space(bound);
  auto e = rref(hstack(coboundaries, cocycles));
  ExtensionSpace out;
  for (auto p : e.pivots) {
    if (p < coboundaries.cols()) continue;
    const QMatrix col = cocycles.column(p - coboundaries.cols());
    std::vector<QMatrix> c;
    for (std::size_t a = 0; a < arrows; ++a) {
      const std::size_t r = yd(q.arrows[a].target), cc = xd(q.arrows[a].source);
      QMatrix m(r, cc);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cc; ++j) m(i, j) = col(off[a] + i * cc + j, 0);
      c.push_back(std::move(m));
    }
    out.classes.push_back(std::move(c));
  }
  return out;
}

Representation extension_middle(const Representation& x, const Representation& y, const std::vector<QMatrix>& cocycle) {
  DimensionVector d(x.vertex_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = y.dims()[i] + x.dims()[i];
  Representation e(x.type(), d);
  for (std::size_t a = 0; a < x.arrow_count(); ++a) {
    const auto& arr = x.quiver().arrows[a];
    QMatrix m(static_cast<std::size_t>(d[arr.target]), static_cast<std::size_t>(d[arr.source]));
    m.set_block(0, 0, y.map(a));
    m.set_block(0, static_cast<std::size_t>(y.dim(arr.source)), cocycle.at(a));
    m.set_block(static_cast<std::size_t>(y.dim(arr.target)), static_cast<std::size_t>(y.dim(arr.source)), x.map(a));
    e.map(a) = std::move(m);
  }
  return e;
}

// ---------------------------------------------------------------------------

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.type() == b.type())) throw DimensionMismatch("direct_sum: modules of different types");
  DimensionVector d(a.vertex_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.dims()[i] + b.dims()[i];
  Representation s(a.type(), d);
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const auto& arr = a.quiver().arrows[k];
    QMatrix m(static_cast<std::size_t>(d[arr.target]), static_cast<std::size_t>(d[arr.source]));
    m.set_block(0, 0, a.map(k));
    m.set_block(static_cast<std::size_t>(a.dim(arr.target)), static_cast<std::size_t>(a.dim(arr.source)), b.map(k));
    s.map(k) = std::move(m);
  }
  return s;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InvalidArgument("direct_sum of an empty list");
  Representation s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s = direct_sum(s, parts[i]);
  return s;
}

Representation conjugate(const Representation& m, const std::vector<QMatrix>& g) {
  std::vector<QMatrix> inv;
  for (const auto& gi : g) inv.push_back(invert(gi));
  Representation out = m;
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    const auto& arr = m.quiver().arrows[a];
    out.map(a) = g[arr.target] * m.map(a) * inv[arr.source];
  }
  return out;
}

Representation dual(const Representation& m) {
  Representation d(m.type(), m.dims());
  for (std::size_t a = 0; a < m.arrow_count(); ++a) d.map(a) = m.map(star(a)).transpose();
  return d;
}

Representation subrepresentation(const Representation& m, const std::vector<QMatrix>& bases) {
  DimensionVector d;
  std::vector<SubspaceCoordinates> coords;
  for (const auto& b : bases) {
    d.push_back(static_cast<int>(b.cols()));
    coords.emplace_back(b);
  }
  Representation s(m.type(), d);
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    const auto& arr = m.quiver().arrows[a];
    s.map(a) = coords[arr.target].coordinates(m.map(a) * bases[arr.source]);
  }
  return s;
}

Quotient quotient(const Representation& m, const std::vector<QMatrix>& sub_bases) {
  DimensionVector d;
  std::vector<QMatrix> complement, project;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    const auto n = static_cast<std::size_t>(m.dim(static_cast<int>(i)));
    const QMatrix& b = sub_bases[i];
    auto e = rref(hstack(b, QMatrix::identity(n)));
    std::vector<std::size_t> cols;
    for (auto p : e.pivots)
      if (p >= b.cols()) cols.push_back(p - b.cols());
    complement.push_back(identity_columns(n, cols));
    const QMatrix change_inv = invert(hstack(b, complement.back()));
    project.push_back(change_inv.block(b.cols(), 0, n - b.cols(), n));
    d.push_back(static_cast<int>(n - b.cols()));
  }
  Representation q(m.type(), d);
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    const auto& arr = m.quiver().arrows[a];
    q.map(a) = project[arr.target] * m.map(a) * complement[arr.source];
  }
  return {std::move(q), Morphism{std::move(project)}};
}

Representation radical_of(const Representation& m) {
  std::vector<QMatrix> bases;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    QMatrix images(static_cast<std::size_t>(m.dim(static_cast<int>(i))), 0);
    for (std::size_t a = 0; a < m.arrow_count(); ++a)
      if (m.quiver().arrows[a].target == static_cast<int>(i)) images = hstack(images, m.map(a));
    bases.push_back(column_space(images));
  }
  return subrepresentation(m, bases);
}

Representation socle_quotient(const Representation& m) { return quotient(m, socle_bases(m)).module; }

std::vector<QMatrix> kernel_bases(const Morphism& f) {
  std::vector<QMatrix> out;
  for (const auto& c : f.components) out.push_back(kernel(c).basis);
  return out;
}

std::vector<QMatrix> image_bases(const Morphism& f) {
  std::vector<QMatrix> out;
  for (const auto& c : f.components) out.push_back(column_space(c));
  return out;
}

Representation kernel_of(const Morphism& f, const Representation& from) {
  return subrepresentation(from, kernel_bases(f));
}

Quotient cokernel_of(const Morphism& f, const Representation& to) { return quotient(to, image_bases(f)); }

std::vector<std::pair<int, QMatrix>> top_vectors(const Representation& m) {
  std::vector<std::pair<int, QMatrix>> out;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    const auto n = static_cast<std::size_t>(m.dim(static_cast<int>(i)));
    QMatrix incoming(n, 0);
    for (std::size_t a = 0; a < m.arrow_count(); ++a)
      if (m.quiver().arrows[a].target == static_cast<int>(i)) incoming = hstack(incoming, m.map(a));
    const QMatrix im = column_space(incoming);
    auto e = rref(hstack(im, QMatrix::identity(n)));
    for (auto p : e.pivots)
      if (p >= im.cols()) out.emplace_back(static_cast<int>(i), QMatrix::identity(n).column(p - im.cols()));
  }
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  const auto tops = top_vectors(m);
  ProjectiveCover cover{Representation(m.type(), DimensionVector(m.vertex_count(), 0)), {}, {}};
  std::vector<Representation> parts;
  std::vector<Morphism> maps;
  for (const auto& [i, v] : tops) {
    parts.push_back(Representation::projective(m.type(), i));
    maps.push_back(generator_map(m, i, v));
    cover.vertices.push_back(i);
  }
  if (!parts.empty()) cover.projective = direct_sum(parts);
  cover.map = Morphism::zero(cover.projective, m);
  std::vector<std::size_t> offset(m.vertex_count(), 0);
  for (const auto& g : maps)
    for (std::size_t j = 0; j < m.vertex_count(); ++j) {
      cover.map.components[j].set_block(0, offset[j], g.components[j]);
      offset[j] += g.components[j].cols();
    }
  return cover;
}

Representation syzygy(const Representation& m) {
  const auto cover = projective_cover(m);
  return kernel_of(cover.map, cover.projective);
}

namespace {

// Over a selfinjective algebra, M has a projective summand exactly when the
// projective cover does not kill the socle of its domain.
bool has_projective_summand(const Representation& m) {
  const auto cover = projective_cover(m);
  const auto soc = socle_bases(cover.projective);
  for (std::size_t i = 0; i < soc.size(); ++i)
    if (!(cover.map.components[i] * soc[i]).is_zero()) return true;
  return false;
}

}  // namespace

Representation cosyzygy(const Representation& m) {
  if (has_projective_summand(m)) throw InvalidArgument("cosyzygy: module has a projective direct summand");
  return dual(syzygy(dual(m)));
}

bool is_projective(const Representation& m) {
  const auto cover = projective_cover(m);
  return cover.projective.total_dim() == m.total_dim();
}

std::vector<std::vector<int>> socle_layers(const Representation& m) {
  const std::size_t n = m.vertex_count();
  std::vector<QMatrix> current;
  for (std::size_t i = 0; i < n; ++i) current.emplace_back(static_cast<std::size_t>(m.dim(static_cast<int>(i))), 0);
  std::vector<std::vector<int>> layers;
  int covered = 0;
  while (covered < m.total_dim()) {
    // annihilator rows of the current filtration step at each vertex
    std::vector<QMatrix> ann;
    for (const auto& u : current) ann.push_back(kernel(u.transpose()).basis.transpose());
    std::vector<QMatrix> next;
    std::vector<int> layer(n, 0);
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      QMatrix cond(0, static_cast<std::size_t>(m.dim(static_cast<int>(i))));
      for (std::size_t a = 0; a < m.arrow_count(); ++a) {
        const auto& arr = m.quiver().arrows[a];
        if (arr.source == static_cast<int>(i)) cond = vstack(cond, ann[arr.target] * m.map(a));
      }
      next.push_back(kernel(cond).basis);
      layer[i] = static_cast<int>(next.back().cols() - current[i].cols());
      total += static_cast<int>(next.back().cols());
    }
    if (total == covered) throw Error("socle series does not terminate (module not nilpotent)");
    covered = total;
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

std::string socle_display(const Representation& m) {
  const auto layers = socle_layers(m);
  if (layers.empty()) return "0";
  std::string out;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    if (!out.empty()) out += " / ";
    std::string layer;
    for (std::size_t i = 0; i < it->size(); ++i)
      for (int k = 0; k < (*it)[i]; ++k) layer += (layer.empty() ? "" : " ") + std::to_string(i + 1);
    out += layer;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y, std::uint64_t seed) {
  if (!(x.type() == y.type()) || x.dims() != y.dims()) return std::nullopt;
  if (x.total_dim() == 0) return Morphism::identity(x);
  const HomSpace h = hom_space(x, y);
  if (h.dim() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rational> c(h.dim());
    for (auto& v : c) v = coeff(rng);
    Morphism f = h.combination(c);
    if (f.is_isomorphism()) return f;
  }
  // deterministic sweep over single elements and small pairwise combinations
  for (std::size_t a = 0; a < h.dim(); ++a) {
    if (h.basis[a].is_isomorphism()) return h.basis[a];
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      for (long k : {1L, 2L, -1L}) {
        Morphism f = h.basis[a] + Rational(k) * h.basis[b];
        if (f.is_isomorphism()) return f;
      }
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& x, const Representation& y, std::uint64_t seed) {
  return find_isomorphism(x, y, seed).has_value();
}

namespace {

std::size_t trace_form_rank(const std::vector<Morphism>& basis) {
  const std::size_t k = basis.size();
  QMatrix g(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rational t = 0;
      for (std::size_t i = 0; i < basis[a].components.size(); ++i)
        t += trace_of_product(basis[a].components[i], basis[b].components[i]);
      g(a, b) = t;
      g(b, a) = t;
    }
  return rank(g);
}

// Fitting splitting: returns true and fills the two summands when psi^N has
// rank strictly between 0 and dim M.
bool try_split(const Representation& m, const Morphism& psi, std::vector<Representation>& parts) {
  const auto total = static_cast<std::size_t>(m.total_dim());
  Morphism p;
  std::size_t r = 0;
  for (const auto& c : psi.components) {
    p.components.push_back(power_by_squaring(c, total));
    r += rank(p.components.back());
  }
  if (r == 0 || r == total) return false;
  parts.push_back(subrepresentation(m, kernel_bases(p)));
  parts.push_back(subrepresentation(m, image_bases(p)));
  return true;
}

void split_recursive(const Representation& m, std::mt19937_64& rng, std::vector<Representation>& leaves) {
  if (m.total_dim() == 0) return;
  const HomSpace end = hom_space(m, m);
  if (trace_form_rank(end.basis) == 1) {
    leaves.push_back(m);
    return;
  }
  const Morphism id = Morphism::identity(m);
  std::vector<Representation> parts;
  auto attempt = [&](const Morphism& psi) {
    for (long lambda : {0L, 1L, -1L, 2L, -2L})
      if (try_split(m, psi + Rational(-lambda) * id, parts)) return true;
    return false;
  };
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<Rational> c(end.dim());
  for (auto& v : c) v = coeff(rng);
  bool done = attempt(end.combination(c));
  for (std::size_t a = 0; !done && a < end.dim(); ++a) done = attempt(end.basis[a]);
  for (std::size_t a = 0; !done && a < end.dim(); ++a)
    for (std::size_t b = a + 1; !done && b < end.dim(); ++b) {
      done = attempt(end.basis[a] + end.basis[b]) || attempt(end.basis[a] + Rational(-1) * end.basis[b]);
    }
  if (!done) throw NonSplitField("no splitting endomorphism found; End/rad is not split over Q");
  for (const auto& p : parts) split_recursive(p, rng, leaves);
}

}  // namespace

std::size_t top_dim_of_endomorphisms(const Representation& m) {
  if (m.total_dim() == 0) return 0;
  return trace_form_rank(hom_space(m, m).basis);
}

std::vector<std::pair<Representation, int>> decompose(const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Representation> leaves;
  split_recursive(m, rng, leaves);
  std::vector<std::pair<Representation, int>> out;
  for (auto& leaf : leaves) {
    bool found = false;
    for (auto& [rep, mult] : out) {
      if (is_isomorphic(rep, leaf, seed)) {
        ++mult;
        found = true;
        break;
      }
    }
    if (!found) out.emplace_back(std::move(leaf), 1);
  }
  return out;
}

int orbit_codim(const Representation& m) {
  const auto& d = m.dims();
  int variety = 0, group = 0;
  for (std::size_t a = 0; a < m.arrow_count(); a += 2) {
    const auto& arr = m.quiver().arrows[a];
    variety += d[arr.source] * d[arr.target];
  }
  for (int x : d) group += x * x;
  return variety - (group - hom_dim(m, m));
}

AlgebraModule to_algebra_module(const Representation& m) {
  const auto& pa = preprojective(m.type());
  std::vector<std::size_t> off(m.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < m.vertex_count(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(m.dim(static_cast<int>(i)));
  const std::size_t total = off.back();
  AlgebraModule out{pa.algebra, total, {}};
  for (std::size_t b = 0; b < pa.words.size(); ++b) {
    const auto s = static_cast<std::size_t>(pa.source[b]), t = static_cast<std::size_t>(pa.target[b]);
    QMatrix block = QMatrix::identity(off[s + 1] - off[s]);
    for (auto it = pa.words[b].rbegin(); it != pa.words[b].rend(); ++it) block = m.map(*it) * block;
    QMatrix act(total, total);
    act.set_block(off[t], off[s], block);
    out.action.push_back(std::move(act));
  }
  return out;
}

nlohmann::json to_json(const Representation& m) {
  nlohmann::json mats = nlohmann::json::object();
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    nlohmann::json rows = nlohmann::json::array();
    const QMatrix& f = m.map(a);
    for (std::size_t r = 0; r < f.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(to_string(f(r, c)));
      rows.push_back(row);
    }
    mats[m.quiver().arrows[a].id] = rows;
  }
  return {{"type", m.type().name()}, {"dim", m.dims()}, {"mats", mats}};
}

Representation representation_from_json(const nlohmann::json& j) {
  const DynkinType type = DynkinType::parse(j.at("type").get<std::string>());
  Representation m(type, j.at("dim").get<DimensionVector>());
  const auto& mats = j.at("mats");
  for (std::size_t a = 0; a < m.arrow_count(); ++a) {
    const auto& arr = m.quiver().arrows[a];
    if (!mats.contains(arr.id)) continue;  // missing arrows act by zero
    const auto& rows = mats.at(arr.id);
    const auto r = static_cast<std::size_t>(m.dim(arr.target)), c = static_cast<std::size_t>(m.dim(arr.source));
    if (rows.size() != r) throw DimensionMismatch("matrix for arrow " + arr.id + " has the wrong row count");
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("matrix for arrow " + arr.id + " has the wrong column count");
      for (std::size_t k = 0; k < c; ++k) {
        const auto& v = rows[i][k];
        m.map(a)(i, k) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
      }
    }
  }
  return m;
}

}  // namespace ppalg
