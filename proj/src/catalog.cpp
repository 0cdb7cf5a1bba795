#include "ppalg/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include <omp.h>

namespace ppalg {

ModuleSum ModuleSum::from_ids(const std::vector<int>& ids) {
  std::map<int, int> counts;
  for (int id : ids) ++counts[id];
  ModuleSum s;
  for (const auto& [id, k] : counts) s.terms.emplace_back(id, k);
  return s;
}

std::vector<int> ModuleSum::ids() const {
  std::vector<int> out;
  for (const auto& [id, k] : terms) out.push_back(id);
  return out;
}

int ModuleSum::multiplicity(int id) const {
  for (const auto& [i, k] : terms)
    if (i == id) return k;
  return 0;
}

bool ModuleSum::is_basic() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second == 1; });
}

std::string ModuleSum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? ", " : "") << terms[i].first << ':' << terms[i].second;
  os << '}';
  return os.str();
}

std::vector<HomSpace> hom_spaces(const std::vector<Representation>& modules, Exec exec) {
  const std::size_t n = modules.size();
  std::vector<HomSpace> out(n * n);
  const auto total = static_cast<std::int64_t>(n * n);
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < total; ++k) out[k] = hom_space(modules[k / n], modules[k % n]);
    return out;
  }
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t k = 0; k < total; ++k) out[k] = hom_space(modules[k / n], modules[k % n]);
  return out;
}

IntMatrix hom_table(const std::vector<Representation>& modules, Exec exec) {
  const auto spaces = hom_spaces(modules, exec);
  const std::size_t n = modules.size();
  IntMatrix out(n, n);
  for (std::size_t k = 0; k < n * n; ++k) out(k / n, k % n) = static_cast<std::int64_t>(spaces[k].dim());
  return out;
}

Catalog::Catalog(DynkinType type, std::vector<CatalogEntry> entries)
    : type_(std::move(type)), entries_(std::move(entries)), projective_ids_(type_.rank(), -1) {
  std::vector<Representation> mods;
  for (const auto& e : entries_) {
    mods.push_back(e.module);
    if (e.projective()) projective_ids_[e.projective_vertex] = e.id;
  }
  spaces_ = hom_spaces(mods);
  const std::size_t n = entries_.size();
  hom_ = IntMatrix(n, n);
  for (std::size_t k = 0; k < n * n; ++k) hom_(k / n, k % n) = static_cast<std::int64_t>(spaces_[k].dim());
  ext_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ext_(i, j) = hom_(i, j) + hom_(j, i) - bilinear_form(type_, mods[i].dims(), mods[j].dims());
}

std::vector<int> Catalog::find_display(const std::string& display) const {
  std::vector<int> out;
  for (const auto& e : entries_)
    if (e.display == display) out.push_back(e.id);
  return out;
}

int Catalog::lookup(const std::string& name) const {
  auto number = [&](std::size_t from) {
    try {
      std::size_t used = 0;
      int v = std::stoi(name.substr(from), &used);
      if (used + from == name.size()) return v;
    } catch (const std::exception&) {
    }
    return -1;
  };
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'P')) {
    int v = number(1);
    if (v >= 1 && v <= type_.rank()) {
      const auto m = name[0] == 'S' ? Representation::simple(type_, v - 1) : Representation::projective(type_, v - 1);
      return identify(m);
    }
  }
  if (name.size() >= 2 && name[0] == '#') {
    int id = number(1);
    if (id >= 0 && id < static_cast<int>(size())) return id;
  }
  const auto hits = find_display(name);
  if (hits.size() == 1) return hits[0];
  if (hits.empty()) throw NotInCatalog("no catalog entry named '" + name + "'");
  throw InvalidArgument("ambiguous module name '" + name + "'; use #id");
}

int Catalog::identify(const Representation& m) const {
  if (!(m.type() == type_)) throw DimensionMismatch("identify: module of a different type");
  for (const auto& e : entries_)
    if (e.dims() == m.dims() && is_isomorphic(e.module, m)) return e.id;
  throw NotInCatalog("not in catalog: " + socle_display(m));
}

ModuleSum Catalog::canonical_sum(const Representation& m) const {
  std::vector<int> ids;
  for (const auto& [leaf, k] : decompose(m)) {
    const int id = identify(leaf);
    for (int c = 0; c < k; ++c) ids.push_back(id);
  }
  return ModuleSum::from_ids(ids);
}

Representation Catalog::realize(const ModuleSum& s) const {
  std::vector<int> ids;
  for (const auto& [id, k] : s.terms)
    for (int c = 0; c < k; ++c) ids.push_back(id);
  return realize(ids);
}

Representation Catalog::realize(const std::vector<int>& ids) const {
  std::vector<Representation> parts;
  for (int id : ids) parts.push_back(entry(id).module);
  if (parts.empty()) return Representation(type_, DimensionVector(type_.rank(), 0));
  return direct_sum(parts);
}

int Catalog::ext(const ModuleSum& a, const ModuleSum& b) const {
  int total = 0;
  for (const auto& [i, p] : a.terms)
    for (const auto& [j, q] : b.terms) total += p * q * ext(i, j);
  return total;
}

nlohmann::json Catalog::to_json() const {
  auto list = nlohmann::json::array();
  for (const auto& e : entries_) {
    list.push_back({{"id", e.id},
                    {"display", e.display},
                    {"dims", e.dims()},
                    {"profile", e.profile},
                    {"projective", e.projective()},
                    {"projective_vertex", e.projective() ? nlohmann::json(e.projective_vertex + 1) : nlohmann::json()},
                    {"rigid", e.rigid},
                    {"origin", e.origin},
                    {"module", ppalg::to_json(e.module)}});
  }
  return list;
}

std::vector<CatalogEntry> enumerate_indecomposables(const DynkinType& type) {
  if (type.family() != DynkinFamily::A || type.rank() < 2 || type.rank() > 4)
    throw UnsupportedType("enumeration is implemented for A2, A3, A4 only, not " + type.name());
  const int n = type.rank();

  struct Found {
    Representation module;
    std::string origin;
  };
  std::vector<Found> found;
  std::deque<std::size_t> queue;

  auto offer = [&](const Representation& candidate, const std::string& origin) {
    if (candidate.total_dim() == 0) return;
    for (const auto& [leaf, k] : decompose(candidate)) {
      const bool known = std::any_of(found.begin(), found.end(), [&](const Found& f) {
        return f.module.dims() == leaf.dims() && is_isomorphic(f.module, leaf);
      });
      if (known) continue;
      found.push_back({leaf, origin});
      queue.push_back(found.size() - 1);
    }
  };

  for (int v = 0; v < n; ++v) offer(Representation::simple(type, v), "simple");
  for (int v = 0; v < n; ++v) offer(Representation::projective(type, v), "projective");

  std::vector<std::size_t> processed;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const Representation x = found[i].module;
    if (!is_projective(x)) {
      offer(syzygy(x), "syzygy");
      offer(cosyzygy(x), "cosyzygy");
    }
    offer(radical_of(x), "radical");
    offer(socle_quotient(x), "socle quotient");
    processed.push_back(i);
    for (std::size_t j : processed) {
      const Representation y = found[j].module;
      if (ext1_dim(x, y) == 0) continue;
      for (const auto& c : extension_space(x, y).classes) offer(extension_middle(x, y, c), "extension");
      if (j == i) continue;
      for (const auto& c : extension_space(y, x).classes) offer(extension_middle(y, x, c), "extension");
    }
  }

  std::vector<CatalogEntry> entries;
  for (auto& f : found) {
    CatalogEntry e{.id = 0,
                   .module = f.module,
                   .profile = socle_layers(f.module),
                   .display = socle_display(f.module),
                   .projective_vertex = -1,
                   .rigid = ext1_dim(f.module, f.module) == 0,
                   .origin = f.origin};
    for (int v = 0; v < n && is_projective(f.module); ++v)
      if (is_isomorphic(f.module, Representation::projective(type, v))) e.projective_vertex = v;
    entries.push_back(std::move(e));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    const int da = a.module.total_dim(), db = b.module.total_dim();
    if (da != db) return da < db;
    if (a.dims() != b.dims()) return a.dims() > b.dims();
    return a.display < b.display;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].id = static_cast<int>(i);
  return entries;
}

const Catalog& catalog(const DynkinType& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Catalog>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[type.name()];
  if (!slot) slot = std::make_unique<Catalog>(type, enumerate_indecomposables(type));
  return *slot;
}

}  // namespace ppalg
