#include "ppalg/approximation.hpp"

#include <algorithm>
#include <set>

namespace ppalg {

namespace {

std::vector<Rational> flatten(const Morphism& f) {
  std::vector<Rational> out;
  for (const auto& c : f.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

std::size_t span_dim(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty() || vectors.front().empty()) return 0;
  QMatrix m(vectors.front().size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < vectors[j].size(); ++i) m(i, j) = vectors[j][i];
  return rank(m);
}

// A map X -> (+) T_{ids[c]} split into its components, or the transpose
// situation (+) T_{ids[c]} -> X.
struct Blocks {
  std::vector<int> ids;
  std::vector<Morphism> parts;
};

Morphism stack_into(const Blocks& b, const Representation& x) {
  Morphism f;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    QMatrix col(0, static_cast<std::size_t>(x.dim(static_cast<int>(v))));
    for (const auto& p : b.parts) col = vstack(col, p.components[v]);
    f.components.push_back(col);
  }
  return f;
}

Morphism stack_from(const Blocks& b, const Representation& x) {
  Morphism g;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    QMatrix row(static_cast<std::size_t>(x.dim(static_cast<int>(v))), 0);
    for (const auto& p : b.parts) row = hstack(row, p.components[v]);
    g.components.push_back(row);
  }
  return g;
}

// Approximation property for every summand of t; hom bases between catalog
// entries are cached per call.
// needed[j] = dim Hom(X, T_j) (left) or dim Hom(T_j, X) (right), per t.ids().
std::vector<std::size_t> target_dims(const Representation& x, const ModuleSum& t, const Catalog& cat, bool left) {
  std::vector<std::size_t> out;
  for (int j : t.ids()) {
    const auto& tj = cat.entry(j).module;
    out.push_back(static_cast<std::size_t>(left ? hom_dim(x, tj) : hom_dim(tj, x)));
  }
  return out;
}

bool factors(const Blocks& b, const ModuleSum& t, const Catalog& cat, bool left,
             const std::vector<std::size_t>& needed) {
  const auto ids = t.ids();
  for (std::size_t jj = 0; jj < ids.size(); ++jj) {
    const int j = ids[jj];
    std::vector<std::vector<Rational>> images;
    for (std::size_t c = 0; c < b.parts.size(); ++c) {
      if (left) {
        for (const auto& h : cat.hom_space(b.ids[c], j).basis) images.push_back(flatten(compose(h, b.parts[c])));
      } else {
        for (const auto& h : cat.hom_space(j, b.ids[c]).basis) images.push_back(flatten(compose(b.parts[c], h)));
      }
    }
    if (span_dim(images) != needed[jj]) return false;
  }
  return true;
}

Approximation minimal_approximation(const Representation& x, const ModuleSum& t, const Catalog& cat, bool left) {
  Blocks b;
  for (int i : t.ids()) {
    const auto& ti = cat.entry(i).module;
    for (const auto& f : (left ? hom_space(x, ti) : hom_space(ti, x)).basis) {
      b.ids.push_back(i);
      b.parts.push_back(f);
    }
  }
  const auto needed = target_dims(x, t, cat, left);
  // strip copies: ascending id, last copy first
  for (int i : t.ids()) {
    for (std::size_t c = b.ids.size(); c-- > 0;) {
      if (b.ids[c] != i) continue;
      Blocks trial = b;
      trial.ids.erase(trial.ids.begin() + static_cast<std::ptrdiff_t>(c));
      trial.parts.erase(trial.parts.begin() + static_cast<std::ptrdiff_t>(c));
      if (factors(trial, t, cat, left, needed)) b = std::move(trial);
    }
  }
  auto middle = cat.realize(b.ids);
  if (left) {
    auto f = stack_into(b, x);
    auto coker = cokernel_of(f, middle).module;
    return {true, b.ids, std::move(middle), std::move(f), std::move(coker)};
  }
  auto g = stack_from(b, x);
  auto ker = kernel_of(g, middle);
  return {false, b.ids, std::move(middle), std::move(g), std::move(ker)};
}

}  // namespace

Approximation minimal_left_approximation(const Representation& x, const ModuleSum& t, const Catalog& cat) {
  return minimal_approximation(x, t, cat, true);
}

Approximation minimal_right_approximation(const Representation& x, const ModuleSum& t, const Catalog& cat) {
  return minimal_approximation(x, t, cat, false);
}

bool has_approximation_property(const Representation& x, const Approximation& a, const ModuleSum& t,
                                const Catalog& cat) {
  // split the map back into blocks along the summands of the middle term
  Blocks b;
  b.ids = a.summands;
  std::vector<std::size_t> offset(x.vertex_count(), 0);
  for (int id : a.summands) {
    const auto& m = cat.entry(id).module;
    Morphism part;
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
      const auto d = static_cast<std::size_t>(m.dim(static_cast<int>(v)));
      const auto xd = static_cast<std::size_t>(x.dim(static_cast<int>(v)));
      part.components.push_back(a.left ? a.map.components[v].block(offset[v], 0, d, xd)
                                       : a.map.components[v].block(0, offset[v], xd, d));
      offset[v] += d;
    }
    b.parts.push_back(std::move(part));
  }
  return factors(b, t, cat, a.left, target_dims(x, t, cat, a.left));
}

std::vector<int> standard_order(const ModuleSum& t, const Catalog& cat) {
  std::vector<int> out;
  for (int id : t.ids())
    if (!cat.entry(id).projective()) out.push_back(id);
  for (int v = 0; v < cat.type().rank(); ++v)
    if (t.multiplicity(cat.projective_id(v)) > 0) out.push_back(cat.projective_id(v));
  return out;
}

void require_basic_rigid_with_projectives(const ModuleSum& t, const Catalog& cat) {
  if (!t.is_basic()) throw InvalidArgument("module is not basic: " + t.to_string());
  if (!cat.is_rigid(t)) throw NotRigid("not rigid: " + t.to_string());
  for (int id : cat.projective_ids())
    if (t.multiplicity(id) == 0) throw InvalidArgument("module does not contain every projective: " + t.to_string());
}

Mutation mutate(const std::vector<int>& order, std::size_t k, const Catalog& cat) {
  if (k >= order.size()) throw InvalidArgument("mutation position out of range");
  const auto t = ModuleSum::from_ids(order);
  require_basic_rigid_with_projectives(t, cat);
  const int xk = order[k];
  if (cat.entry(xk).projective())
    throw ProjectiveDirection("projective direction: position " + std::to_string(k + 1) + " is " +
                              cat.entry(xk).display);
  std::vector<int> rest = order;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  const auto rest_sum = ModuleSum::from_ids(rest);
  const auto& x = cat.entry(xk).module;

  const auto left = minimal_left_approximation(x, rest_sum, cat);
  const int y = cat.identify(left.complement);
  const auto right = minimal_right_approximation(x, rest_sum, cat);
  const int y2 = cat.identify(right.complement);
  if (y != y2 || y == xk) throw Error("mutation: inconsistent complements for " + cat.entry(xk).display);

  auto order_out = order;
  order_out[k] = y;

  const auto coker = cokernel_of(left.map, left.middle);
  // transport the projection onto the catalog representative
  const auto iso = find_isomorphism(coker.module, cat.entry(y).module);
  const auto iso2 = find_isomorphism(cat.entry(y).module, right.complement);
  if (!iso || !iso2) throw Error("mutation: complement not isomorphic to its catalog entry");
  const Morphism inclusion{kernel_bases(right.map)};
  return {order_out,
          {xk, ModuleSum::from_ids(left.summands), y, left.map, compose(*iso, coker.projection), left.middle},
          {y, ModuleSum::from_ids(right.summands), xk, compose(inclusion, *iso2), right.map, right.middle}};
}

std::vector<int> rigid_complements(const ModuleSum& almost, const Catalog& cat) {
  std::vector<int> out;
  for (const auto& e : cat.entries()) {
    if (almost.multiplicity(e.id) > 0 || !e.rigid) continue;
    if (cat.ext(ModuleSum::from_ids({e.id}), almost) == 0) out.push_back(e.id);
  }
  return out;
}

bool is_maximal_rigid(const ModuleSum& t, const Catalog& cat) {
  if (!cat.is_rigid(t)) throw NotRigid("not rigid: " + t.to_string());
  return rigid_complements(t, cat).empty();
}

std::string render_sequence(const ExchangeSequence& s, const Catalog& cat) {
  auto paren = [&](int id) { return "(" + cat.entry(id).display + ")"; };
  std::string middle;
  for (const auto& [id, mult] : s.middle.terms)
    for (int c = 0; c < mult; ++c) middle += (middle.empty() ? "" : " + ") + paren(id);
  return "0 -> " + paren(s.x) + " -> " + middle + " -> " + paren(s.y) + " -> 0";
}

}  // namespace ppalg
