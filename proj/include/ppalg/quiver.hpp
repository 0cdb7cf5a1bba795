#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ppalg {

enum class DynkinFamily { A, D, E };

/// A simply laced Dynkin diagram. Valid ranks: A_n (n >= 2), D_n (n >= 4),
/// E_6, E_7, E_8.
class DynkinType {
 public:
  DynkinType(DynkinFamily family, int rank);
  /// Parses "A3", "D4", "E6" (case-insensitive family letter).
  static DynkinType parse(std::string_view text);

  DynkinFamily family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  DynkinFamily family_;
  int rank_;
};

struct Arrow {
  std::string id;
  int source = 0;  // 0-based vertex
  int target = 0;
};

/// A finite quiver. Vertices are 0-based internally and printed 1-based.
struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
};

using DimensionVector = std::vector<int>;

/// Fixed orientations:
///   A_n: a_k : k -> k+1                       (k = 1..n-1)
///   D_n: a_1 : 1 -> 3, a_2 : 2 -> 3, a_k : k -> k+1 (k = 3..n-1)
///   E_n: a_k : k -> k+1 along the chain 1..n-1 (k = 1..n-2), a_{n-1} : n -> 3
Quiver build_quiver(const DynkinType& type);

/// The double quiver: arrow 2k is the original a_{k+1}, arrow 2k+1 its
/// reverse a_{k+1}* with swapped endpoints.
Quiver double_quiver(const Quiver& q);

inline std::size_t star(std::size_t double_arrow) { return double_arrow ^ 1U; }
inline bool is_star(std::size_t double_arrow) { return (double_arrow & 1U) != 0; }

/// Shared immutable double quiver of a Dynkin type (cached per type).
std::shared_ptr<const Quiver> shared_double_quiver(const DynkinType& type);

/// Number of positive roots: A_n n(n+1)/2, D_n n^2-n, E_6/7/8 36/63/120.
int positive_root_count(const DynkinType& type);

/// (d,e) = 2 sum d_i e_i - sum_alpha (d_s e_t + e_s d_t) over the arrows of q.
int bilinear_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e);
int bilinear_form(const DynkinType& type, const DimensionVector& d, const DimensionVector& e);

nlohmann::json to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

}  // namespace ppalg
