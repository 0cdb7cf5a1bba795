#include "ppalg/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "ppalg/approximation.hpp"

namespace ppalg {

IntMatrix matrix_mutate(const IntMatrix& b, std::size_t k) {
  if (k >= b.cols() || k >= b.rows()) throw InvalidArgument("matrix_mutate: direction out of range");
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const std::int64_t bik = b(i, k), bkj = b(k, j);
        out(i, j) = b(i, j) + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
      }
    }
  return out;
}

Seed Seed::initial(const IntMatrix& b) {
  Seed s{{}, b};
  for (std::size_t i = 0; i < b.rows(); ++i) s.x.push_back(RationalFunction::variable(b.rows(), i));
  return s;
}

Seed seed_mutate(const Seed& s, std::size_t k) {
  if (k >= s.b.cols()) throw InvalidArgument("seed_mutate: direction is not exchangeable");
  const std::size_t r = s.x.size();
  RationalFunction plus(Polynomial::constant(r, 1)), minus(Polynomial::constant(r, 1));
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t e = s.b(i, k);
    if (e > 0) plus = plus * s.x[i].pow(static_cast<unsigned>(e));
    if (e < 0) minus = minus * s.x[i].pow(static_cast<unsigned>(-e));
  }
  Seed out = s;
  out.x[k] = (plus + minus) / s.x[k];
  out.b = matrix_mutate(s.b, k);
  return out;
}

std::size_t ExchangeGraph::index_of(const ModuleSum& s) const {
  for (std::size_t v = 0; v < orders.size(); ++v)
    if (ModuleSum::from_ids(orders[v]) == s) return v;
  throw InvalidArgument("module is not a vertex of the exchange graph: " + s.to_string());
}

std::vector<std::size_t> ExchangeGraph::degrees() const {
  std::vector<std::size_t> d(orders.size(), 0);
  for (const auto& e : edges) {
    ++d[e.from];
    ++d[e.to];
  }
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

// Seed reached by mutating `s` (vertex order `from`) must equal the seed
// stored at a vertex with order `to` up to the permutation of summands.
bool seeds_agree(const Seed& mutated, const std::vector<int>& mutated_order, const Seed& stored,
                 const std::vector<int>& stored_order) {
  std::vector<std::size_t> perm(mutated_order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto it = std::find(stored_order.begin(), stored_order.end(), mutated_order[i]);
    if (it == stored_order.end()) return false;
    perm[i] = static_cast<std::size_t>(it - stored_order.begin());
    if (!(mutated.x[i] == stored.x[perm[i]])) return false;
  }
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t c = 0; c < mutated.b.cols(); ++c)
      if (perm[c] >= stored.b.cols() || mutated.b(i, c) != stored.b(perm[i], perm[c])) return false;
  return true;
}

}  // namespace

nlohmann::json ExchangeGraph::to_json(const Catalog& cat) const {
  auto vs = nlohmann::json::array();
  for (std::size_t v = 0; v < orders.size(); ++v) {
    nlohmann::json j{{"index", v}, {"order", orders[v]}, {"parent", parent[v]}};
    auto names = nlohmann::json::array();
    for (int id : orders[v]) names.push_back(cat.entry(id).display);
    j["summands"] = names;
    if (v < data.size()) j["exchange"] = data[v].to_json();
    if (v < seeds.size()) {
      auto xs = nlohmann::json::array();
      for (const auto& x : seeds[v].x) xs.push_back(x.to_string());
      j["seed"] = {{"x", xs}, {"B", matrix_json(seeds[v].b)}};
    }
    vs.push_back(j);
  }
  auto es = nlohmann::json::array();
  for (const auto& e : edges)
    es.push_back({{"from", e.from}, {"to", e.to}, {"position", e.position + 1}, {"removed", e.removed}, {"added", e.added}});
  return {{"type", cat.type().name()}, {"vertices", vs}, {"edges", es}, {"complete", complete}};
}

std::string ExchangeGraph::to_dot(const Catalog& cat) const {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t v = 0; v < orders.size(); ++v) {
    os << "  v" << v << " [label=\"";
    for (std::size_t i = 0; i < orders[v].size(); ++i) os << (i ? " + " : "") << "(" << cat.entry(orders[v][i]).display << ")";
    os << "\"];\n";
  }
  for (const auto& e : edges) os << "  v" << e.from << " -- v" << e.to << " [label=\"" << e.position + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

ExchangeGraph exchange_graph(const std::vector<int>& initial, const Catalog& cat, const GraphOptions& options) {
  const auto root = exchange_data(initial, cat);  // validates the start
  const std::size_t m = root.exchangeable;

  ExchangeGraph g;
  g.orders.push_back(initial);
  g.parent.push_back(0);
  std::vector<std::size_t> tree_position{0};
  std::map<ModuleSum, std::size_t> index{{ModuleSum::from_ids(initial), 0}};

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty() && g.complete) {
    const auto tasks = static_cast<std::int64_t>(frontier.size() * m);
    std::vector<std::vector<int>> results(static_cast<std::size_t>(tasks));
    auto run = [&](std::int64_t t) {
      const auto u = frontier[static_cast<std::size_t>(t) / m];
      results[static_cast<std::size_t>(t)] = mutate(g.orders[u], static_cast<std::size_t>(t) % m, cat).order;
    };
    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t t = 0; t < tasks; ++t) run(t);
    } else {
      for (std::int64_t t = 0; t < tasks; ++t) run(t);
    }

    // merge in task order so both paths produce the same numbering
    std::vector<std::size_t> next;
    for (std::int64_t t = 0; t < tasks; ++t) {
      const auto u = frontier[static_cast<std::size_t>(t) / m];
      const auto k = static_cast<std::size_t>(t) % m;
      auto& order = results[static_cast<std::size_t>(t)];
      const auto key = ModuleSum::from_ids(order);
      auto it = index.find(key);
      if (it == index.end()) {
        if (options.max_vertices && g.orders.size() >= options.max_vertices) {
          g.complete = false;
          continue;
        }
        it = index.emplace(key, g.orders.size()).first;
        next.push_back(g.orders.size());
        g.parent.push_back(u);
        tree_position.push_back(k);
        g.orders.push_back(order);
      }
      const std::size_t v = it->second;
      if (u < v) g.edges.push_back({u, v, k, g.orders[u][k], order[k]});
    }
    frontier = std::move(next);
  }

  if (options.exchange_data) {
    g.data.resize(g.orders.size());
    const auto n = static_cast<std::int64_t>(g.orders.size());
    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (std::int64_t v = 0; v < n; ++v) g.data[v] = exchange_data(g.orders[v], cat);
    } else {
      for (std::int64_t v = 0; v < n; ++v) g.data[v] = exchange_data(g.orders[v], cat);
    }
  }

  if (options.seeds) {
    g.seeds.push_back(Seed::initial(root.b_principal));
    for (std::size_t v = 1; v < g.orders.size(); ++v) g.seeds.push_back(seed_mutate(g.seeds[g.parent[v]], tree_position[v]));
    for (std::size_t v = 0; v < g.orders.size(); ++v)
      for (std::size_t i = 0; i < g.orders[v].size(); ++i) {
        const auto [it, fresh] = g.variables.emplace(g.orders[v][i], g.seeds[v].x[i]);
        if (!fresh && !(it->second == g.seeds[v].x[i]))
          throw Error("seed propagation is inconsistent for " + cat.entry(g.orders[v][i]).display);
      }
    for (const auto& e : g.edges) {
      auto mutated_order = g.orders[e.from];
      mutated_order[e.position] = e.added;
      if (!seeds_agree(seed_mutate(g.seeds[e.from], e.position), mutated_order, g.seeds[e.to], g.orders[e.to]))
        throw Error("seed mismatch along edge " + std::to_string(e.from) + " -- " + std::to_string(e.to));
    }
  }
  return g;
}

std::vector<int> greedy_maximal_rigid(const Catalog& cat) {
  std::vector<int> ids = cat.projective_ids();
  for (const auto& e : cat.entries()) {
    if (e.projective()) continue;
    auto trial = ids;
    trial.push_back(e.id);
    if (cat.is_rigid(ModuleSum::from_ids(trial))) ids = std::move(trial);
  }
  return standard_order(ModuleSum::from_ids(ids), cat);
}

std::vector<int> builtin_initial(const Catalog& cat) {
  std::vector<std::string> names;
  if (cat.type().name() == "A2") names = {"1", "1 / 2", "2 / 1"};
  if (cat.type().name() == "A3") names = {"1", "1 / 2", "2 / 1", "1 / 2 / 3", "2 / 1 3 / 2", "3 / 2 / 1"};
  if (names.empty()) return greedy_maximal_rigid(cat);
  std::vector<int> ids;
  for (const auto& n : names) ids.push_back(cat.lookup(n));
  return standard_order(ModuleSum::from_ids(ids), cat);
}

std::vector<RationalFunction> cluster_monomials(const ExchangeGraph& g, unsigned max_degree) {
  if (g.seeds.empty()) throw InvalidArgument("cluster_monomials: graph was built without seeds");
  std::set<std::vector<int>> multisets;
  for (const auto& order : g.orders) {
    std::vector<int> ids = order;
    std::sort(ids.begin(), ids.end());
    // all multisets of size <= max_degree drawn from ids
    std::vector<std::vector<int>> level{{}};
    multisets.insert(std::vector<int>{});
    for (unsigned d = 1; d <= max_degree; ++d) {
      std::vector<std::vector<int>> grown;
      for (const auto& base : level)
        for (int id : ids) {
          if (!base.empty() && id < base.back()) continue;
          auto next = base;
          next.push_back(id);
          grown.push_back(next);
          multisets.insert(next);
        }
      level = std::move(grown);
    }
  }
  const std::size_t r = g.orders.front().size();
  std::vector<RationalFunction> out;
  std::set<RationalFunction> distinct;
  for (const auto& ms : multisets) {
    RationalFunction p(Polynomial::constant(r, 1));
    for (int id : ms) p = p * g.variables.at(id);
    out.push_back(p);
    distinct.insert(p);
  }
  if (distinct.size() != out.size()) throw Error("cluster monomials are not pairwise distinct");
  return out;
}

}  // namespace ppalg
