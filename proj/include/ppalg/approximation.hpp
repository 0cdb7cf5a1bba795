#pragma once

// Minimal add(T)-approximations, exchange sequences and mutation of basic
// rigid modules containing all projectives.

#include <string>
#include <vector>

#include "ppalg/catalog.hpp"
#include "ppalg/representation.hpp"

namespace ppalg {

/// Left: f : X -> M with M in add(T) and every map X -> T factoring through
/// f. Right: g : M -> X with every map T -> X factoring through g.
/// `summands` lists the catalog ids of M with repetition, in block order.
struct Approximation {
  bool left = true;
  std::vector<int> summands;
  Representation middle;
  Morphism map;
  /// Cokernel of f (left) or kernel of g (right).
  Representation complement;
};

Approximation minimal_left_approximation(const Representation& x, const ModuleSum& t, const Catalog& cat);
Approximation minimal_right_approximation(const Representation& x, const ModuleSum& t, const Catalog& cat);

/// Does every map X -> T_j (left) or T_j -> X (right) factor through the map?
bool has_approximation_property(const Representation& x, const Approximation& a, const ModuleSum& t,
                                const Catalog& cat);

/// 0 -> X -> middle -> Y -> 0 with X, Y catalog ids.
struct ExchangeSequence {
  int x = 0;
  ModuleSum middle;
  int y = 0;
  Morphism f;  // X -> middle
  Morphism g;  // middle -> Y
  Representation middle_module;
};

struct Mutation {
  std::vector<int> order;   // T_k replaced by T_k* in place
  ExchangeSequence left;    // 0 -> T_k -> T' -> T_k* -> 0
  ExchangeSequence right;   // 0 -> T_k* -> T'' -> T_k -> 0
};

/// "0 -> (1 / 2) -> (1) + (2 / 1 3 / 2) -> (2 / 1 3) -> 0", summands by socle series.
std::string render_sequence(const ExchangeSequence& s, const Catalog& cat);

/// Mutation of the basic rigid module `order` (catalog ids) at position k.
Mutation mutate(const std::vector<int>& order, std::size_t k, const Catalog& cat);

/// No catalog indecomposable outside add(T) can be added keeping rigidity.
bool is_maximal_rigid(const ModuleSum& t, const Catalog& cat);
/// Catalog ids Y not in add(almost) with Y (+) almost rigid.
std::vector<int> rigid_complements(const ModuleSum& almost, const Catalog& cat);

/// Canonical order: non-projective summands by id, then projectives by vertex.
std::vector<int> standard_order(const ModuleSum& t, const Catalog& cat);

/// Checks that a module sum is basic, rigid and contains every projective;
/// throws NotRigid / InvalidArgument otherwise.
void require_basic_rigid_with_projectives(const ModuleSum& t, const Catalog& cat);

}  // namespace ppalg
