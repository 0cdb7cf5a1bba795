#pragma once

// The finite list of indecomposable Lambda-modules for A2, A3, A4, built by
// closing the simples and projectives under syzygies, cosyzygies, radicals,
// socle quotients and middle terms of extensions.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ppalg/int_matrix.hpp"
#include "ppalg/parallel.hpp"
#include "ppalg/representation.hpp"

namespace ppalg {

struct CatalogEntry {
  int id = 0;
  Representation module;
  std::vector<std::vector<int>> profile;  // socle layers, socle first
  std::string display;                    // "2 / 1 3", top first
  int projective_vertex = -1;             // i when the entry is P_i
  bool rigid = false;
  std::string origin;                     // how the enumerator found it

  bool projective() const { return projective_vertex >= 0; }
  const DimensionVector& dims() const { return module.dims(); }
};

/// A direct sum of catalog entries: (id, multiplicity) sorted by id.
struct ModuleSum {
  std::vector<std::pair<int, int>> terms;

  static ModuleSum from_ids(const std::vector<int>& ids);
  std::vector<int> ids() const;  // each id once
  int multiplicity(int id) const;
  int summand_count() const { return static_cast<int>(terms.size()); }
  bool is_basic() const;
  std::string to_string() const;  // "{0:1, 3:2}"

  friend bool operator==(const ModuleSum&, const ModuleSum&) = default;
  friend auto operator<=>(const ModuleSum&, const ModuleSum&) = default;
};

/// Hom(x_i, x_j) for all pairs, row-major.
std::vector<HomSpace> hom_spaces(const std::vector<Representation>& modules, Exec exec = Exec::parallel);
/// dim Hom(x_i, x_j) for all pairs.
IntMatrix hom_table(const std::vector<Representation>& modules, Exec exec = Exec::parallel);

class Catalog {
 public:
  Catalog(DynkinType type, std::vector<CatalogEntry> entries);

  const DynkinType& type() const { return type_; }
  std::size_t size() const { return entries_.size(); }
  const CatalogEntry& entry(int id) const { return entries_.at(static_cast<std::size_t>(id)); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// dim Hom(entry i, entry j) and dim Ext^1(entry i, entry j).
  int hom(int i, int j) const { return static_cast<int>(hom_(i, j)); }
  int ext(int i, int j) const { return static_cast<int>(ext_(i, j)); }
  const IntMatrix& hom_matrix() const { return hom_; }
  /// Cached basis of Hom(entry i, entry j).
  const HomSpace& hom_space(int i, int j) const {
    return spaces_[static_cast<std::size_t>(i) * entries_.size() + static_cast<std::size_t>(j)];
  }
  const IntMatrix& ext_matrix() const { return ext_; }

  int projective_id(int vertex) const { return projective_ids_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<int>& projective_ids() const { return projective_ids_; }
  /// Ids whose socle display equals `display` (several only in larger types).
  std::vector<int> find_display(const std::string& display) const;
  /// Accepts "S1", "P2", "#7" or a socle display such as "2 / 1 3".
  int lookup(const std::string& name) const;

  /// Catalog id of an indecomposable module; throws NotInCatalog.
  int identify(const Representation& m) const;
  ModuleSum canonical_sum(const Representation& m) const;
  Representation realize(const ModuleSum& s) const;
  Representation realize(const std::vector<int>& ids) const;

  /// dim Ext^1 between two sums, from the table.
  int ext(const ModuleSum& a, const ModuleSum& b) const;
  bool is_rigid(const ModuleSum& s) const { return ext(s, s) == 0; }

  nlohmann::json to_json() const;

 private:
  DynkinType type_;
  std::vector<CatalogEntry> entries_;
  std::vector<HomSpace> spaces_;
  IntMatrix hom_;
  IntMatrix ext_;
  std::vector<int> projective_ids_;
};

/// Ids are assigned after sorting by (total dimension, dimension vector
/// descending, socle display), so they do not depend on discovery order.
std::vector<CatalogEntry> enumerate_indecomposables(const DynkinType& type);
/// Shared instance per type (A2, A3, A4).
const Catalog& catalog(const DynkinType& type);

}  // namespace ppalg
