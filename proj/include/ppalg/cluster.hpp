#pragma once

// Matrix and seed mutation, and the exchange graph of basic maximal rigid
// modules with the seeds attached to its vertices.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppalg/catalog.hpp"
#include "ppalg/endo_quiver.hpp"
#include "ppalg/int_matrix.hpp"
#include "ppalg/parallel.hpp"
#include "ppalg/polynomial.hpp"

namespace ppalg {

/// Mutation of an r x m exchange matrix in direction k < m.
IntMatrix matrix_mutate(const IntMatrix& b, std::size_t k);

/// Cluster variables x_1..x_r (the last r - m frozen) and an r x m matrix.
struct Seed {
  std::vector<RationalFunction> x;
  IntMatrix b;

  static Seed initial(const IntMatrix& b);
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// x_k' = (prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k.
Seed seed_mutate(const Seed& s, std::size_t k);

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t position = 0;  // mutated position in the order of `from`
  int removed = 0;           // catalog id leaving
  int added = 0;             // catalog id entering
};

struct GraphOptions {
  Exec exec = Exec::parallel;
  bool exchange_data = false;  // compute ExchangeData per vertex
  bool seeds = false;          // propagate seeds (implies exchange_data at the root)
  std::size_t max_vertices = 0;  // 0 = unbounded
};

struct ExchangeGraph {
  std::vector<std::vector<int>> orders;  // per vertex; T_k* kept at position k along BFS tree edges
  std::vector<GraphEdge> edges;          // one per unordered pair, from < to
  std::vector<std::size_t> parent;       // BFS tree; root is its own parent
  std::vector<ExchangeData> data;        // filled when requested
  std::vector<Seed> seeds;               // filled when requested
  /// Cluster variable of every catalog id met in some seed.
  std::map<int, RationalFunction> variables;
  bool complete = true;                  // false when max_vertices stopped the search

  std::size_t vertex_count() const { return orders.size(); }
  std::size_t index_of(const ModuleSum& s) const;
  std::vector<std::size_t> degrees() const;
  nlohmann::json to_json(const Catalog& cat) const;
  std::string to_dot(const Catalog& cat) const;
};

/// BFS closure under mutation at all exchangeable positions. With seeds
/// requested, every non-tree edge is checked for consistency and an Error is
/// thrown on a mismatch.
ExchangeGraph exchange_graph(const std::vector<int>& initial, const Catalog& cat, const GraphOptions& options = {});

/// Greedy maximal rigid module: projectives, then catalog entries by id
/// whenever rigidity is kept. Returned in standard order.
std::vector<int> greedy_maximal_rigid(const Catalog& cat);
/// The modules written down explicitly for A2 and A3; greedy otherwise.
std::vector<int> builtin_initial(const Catalog& cat);

/// Products of at most max_degree variables from a single cluster, including
/// frozen variables, as distinct reduced expressions.
std::vector<RationalFunction> cluster_monomials(const ExchangeGraph& g, unsigned max_degree);

}  // namespace ppalg
