// ppalg: command-line front end. Exit codes: 0 success, 1 domain error or a
// failed verification, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ppalg/approximation.hpp"
#include "ppalg/catalog.hpp"
#include "ppalg/cluster.hpp"
#include "ppalg/endo_quiver.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/semicanonical.hpp"
#include "ppalg/service.hpp"
#include "ppalg/verify.hpp"

using namespace ppalg;
using nlohmann::json;

namespace {

struct Config {
  std::string type = "A3";
  std::string field = "q";
  std::uint32_t prime = 32003;
  std::string seed = "builtin";
  int cap = 6;
  bool deep = false;
  std::string emit = "table";
  std::string out;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string module;
  std::string sequence;
  std::string word;
  std::string suite = "all";
  bool seeds = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  for (std::string p; std::getline(s, p, sep);) {
    const auto b = p.find_first_not_of(' ');
    const auto e = p.find_last_not_of(' ');
    if (b != std::string::npos) parts.push_back(p.substr(b, e - b + 1));
  }
  return parts;
}

std::vector<int> parse_positions(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p.size() || v < 1) throw InvalidArgument("expected positive integers, got '" + p + "'");
    out.push_back(v);
  }
  return out;
}

std::string paren(const Catalog& cat, int id) { return "(" + cat.entry(id).display + ")"; }

std::string module_line(const Catalog& cat, const std::vector<int>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? " + " : "") + paren(cat, order[i]);
  return s;
}

std::vector<int> module_ids(const Catalog& cat, const std::string& text) {
  std::vector<int> ids;
  for (const auto& name : split(text, ',')) ids.push_back(cat.lookup(name));
  if (ids.empty()) throw InvalidArgument("empty --module");
  return ids;
}

// --module wins; otherwise --seed builtin, or a seeded random walk from it.
std::vector<int> initial_module(const Catalog& cat, const Config& c) {
  if (!c.module.empty()) {
    const auto sum = ModuleSum::from_ids(module_ids(cat, c.module));
    require_basic_rigid_with_projectives(sum, cat);
    return standard_order(sum, cat);
  }
  auto order = builtin_initial(cat);
  if (c.seed == "builtin") return order;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(c.seed);
  } catch (const std::exception&) {
    throw InvalidArgument("--seed must be an integer or 'builtin'");
  }
  std::mt19937_64 rng(seed);
  const std::size_t m = order.size() - static_cast<std::size_t>(cat.type().rank());
  for (std::size_t step = 0; step < 3 * order.size(); ++step)
    order = mutate(order, static_cast<std::size_t>(rng() % m), cat).order;
  return order;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) s << std::setw(4) << m(i, j);
    s << '\n';
  }
  return s.str();
}

int cmd_build(const Config& c) {
  const auto type = DynkinType::parse(c.type);
  const auto& lambda = preprojective(type);
  int loewy = 0;
  for (const int d : lambda.degree) loewy = std::max(loewy, d + 1);
  const auto& cat = catalog(type);
  const auto t = builtin_initial(cat);
  Output out(c.out);
  if (c.emit == "json") {
    out.stream() << json{{"type", type.name()},
                         {"dim", lambda.words.size()},
                         {"loewy_length", loewy},
                         {"indecomposables", cat.size()},
                         {"r", t.size()},
                         {"initial", t},
                         {"exchange", exchange_data(t, cat).to_json()}}
                        .dump(2)
                 << '\n';
    return 0;
  }
  out.stream() << "Lambda(" << type.name() << "): dim " << lambda.words.size() << ", Loewy length " << loewy << '\n'
               << "indecomposables: " << cat.size() << '\n'
               << "r = " << t.size() << ", exchangeable " << t.size() - static_cast<std::size_t>(type.rank()) << '\n'
               << "initial T = " << module_line(cat, t) << '\n';
  return 0;
}

int cmd_catalog(const Config& c) {
  const auto& cat = catalog(DynkinType::parse(c.type));
  Output out(c.out);
  if (c.emit == "json") {
    out.stream() << json{{"type", cat.type().name()}, {"entries", cat.to_json()}}.dump(2) << '\n';
    return 0;
  }
  auto& os = out.stream();
  os << cat.type().name() << ": " << cat.size() << " indecomposables\n";
  os << std::left << std::setw(4) << "id" << std::setw(18) << "socle series" << std::setw(14) << "dims"
     << std::setw(6) << "proj" << std::setw(7) << "rigid" << "origin\n";
  for (const auto& e : cat.entries()) {
    std::string dims;
    for (const int d : e.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    os << std::setw(4) << e.id << std::setw(18) << e.display << std::setw(14) << dims << std::setw(6)
       << (e.projective() ? "P" + std::to_string(e.projective_vertex + 1) : "-") << std::setw(7)
       << (e.rigid ? "yes" : "no") << e.origin << '\n';
  }
  return 0;
}

int cmd_rigid_check(const Config& c) {
  const auto& cat = catalog(DynkinType::parse(c.type));
  if (c.module.empty()) throw InvalidArgument("rigid-check needs --module");
  const auto ids = module_ids(cat, c.module);
  const std::size_t k = ids.size();
  IntMatrix ext(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (c.field == "fp") {
        const auto& x = cat.entry(ids[i]).module;
        const auto& y = cat.entry(ids[j]).module;
        ext(i, j) = hom_dim_mod(x, y, c.prime) + hom_dim_mod(y, x, c.prime) - bilinear_form(cat.type(), x.dims(), y.dims());
      } else {
        ext(i, j) = cat.ext(ids[i], ids[j]);
      }
    }
  bool rigid = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rigid = rigid && ext(i, j) == 0;
  const auto sum = ModuleSum::from_ids(ids);
  const bool basic = sum.is_basic() && static_cast<std::size_t>(sum.summand_count()) == k;
  bool projectives = true;
  for (const int p : cat.projective_ids()) projectives = projectives && sum.multiplicity(p) > 0;
  const bool maximal = rigid && is_maximal_rigid(sum, cat);
  std::vector<int> complements;
  if (rigid) complements = rigid_complements(sum, cat);
  Output out(c.out);
  if (c.emit == "json") {
    json e = json::array();
    for (std::size_t i = 0; i < k; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < k; ++j) row.push_back(ext(i, j));
      e.push_back(row);
    }
    out.stream() << json{{"module", ids},       {"field", c.field == "fp" ? "F_" + std::to_string(c.prime) : "Q"},
                         {"ext1", e},           {"rigid", rigid},
                         {"basic", basic},      {"contains_projectives", projectives},
                         {"maximal", maximal},  {"rigid_complements", complements}}
                        .dump(2)
                 << '\n';
    return 0;
  }
  auto& os = out.stream();
  os << "T = " << module_line(cat, ids) << '\n'
     << "field: " << (c.field == "fp" ? "F_" + std::to_string(c.prime) : "Q") << '\n'
     << "dim Ext^1(T_i, T_j):\n"
     << matrix_text(ext, "  ") << "rigid: " << (rigid ? "yes" : "no") << '\n'
     << "basic: " << (basic ? "yes" : "no") << '\n'
     << "contains all projectives: " << (projectives ? "yes" : "no") << '\n'
     << "maximal rigid: " << (maximal ? "yes" : "no") << " (" << k << " of "
     << positive_root_count(cat.type()) << " summands)\n";
  if (rigid && !maximal) {
    os << "rigid complements:";
    for (const int id : complements) os << ' ' << paren(cat, id);
    os << '\n';
  }
  return 0;
}

int cmd_mutate(const Config& c) {
  const auto& cat = catalog(DynkinType::parse(c.type));
  auto order = initial_module(cat, c);
  const auto steps = parse_positions(c.sequence);
  Output out(c.out);
  auto& os = out.stream();
  json log{{"type", cat.type().name()}, {"initial", order}, {"steps", json::array()}};
  const bool text = c.emit != "json";
  if (text) os << "T = " << module_line(cat, order) << '\n';
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto pos = static_cast<std::size_t>(steps[s] - 1);
    if (pos >= order.size())
      throw InvalidArgument("position " + std::to_string(steps[s]) + " out of range 1.." + std::to_string(order.size()));
    if (cat.entry(order[pos]).projective()) {
      if (!text) os << log.dump(2) << '\n';
      throw ProjectiveDirection("step " + std::to_string(s + 1) + ": T" + std::to_string(steps[s]) + " = " +
                                paren(cat, order[pos]) + " is projective and cannot be mutated");
    }
    const auto m = mutate(order, pos, cat);
    const std::string left = render_sequence(m.left, cat), right = render_sequence(m.right, cat);
    if (text)
      os << "step " << s + 1 << ": mutate at T" << steps[s] << " = " << paren(cat, order[pos]) << '\n'
         << "  left:  " << left << '\n'
         << "  right: " << right << '\n'
         << "  new summand: " << paren(cat, m.order[pos]) << '\n'
         << "  T = " << module_line(cat, m.order) << '\n';
    log["steps"].push_back({{"k", steps[s]},
                            {"removed", cat.entry(order[pos]).display},
                            {"added", cat.entry(m.order[pos]).display},
                            {"left", left},
                            {"right", right},
                            {"order", m.order}});
    order = m.order;
  }
  if (!text) os << log.dump(2) << '\n';
  return 0;
}

int cmd_exchange_graph(const Config& c) {
  const auto type = DynkinType::parse(c.type);
  const auto& cat = catalog(type);
  GraphOptions go;
  go.exchange_data = c.emit == "json" || c.seeds;
  go.seeds = c.seeds;
  // beyond A3 the full graph is opt-in
  if (type.rank() > 3 && !c.deep) go.max_vertices = 100;
  const auto g = exchange_graph(initial_module(cat, c), cat, go);
  Output out(c.out);
  auto& os = out.stream();
  if (c.emit == "json") {
    os << g.to_json(cat).dump(2) << '\n';
    return 0;
  }
  if (c.emit == "dot") {
    os << g.to_dot(cat);
    return 0;
  }
  const auto deg = g.degrees();
  os << type.name() << " exchange graph: " << g.vertex_count() << " vertices, " << g.edges.size() << " edges";
  if (!g.complete) os << " (stopped at " << go.max_vertices << " vertices; pass --deep for the full graph)";
  os << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [deg " << deg[v] << "] " << module_line(cat, g.orders[v]) << '\n';
    if (c.seeds) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < g.seeds[v].x.size(); ++i) names.push_back("x" + std::to_string(i + 1));
      for (std::size_t i = 0; i < g.seeds[v].x.size(); ++i)
        os << "      " << names[i] << "' = " << g.seeds[v].x[i].to_string(names) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Config& c) {
  VerifyOptions o;
  o.deep = c.deep;
  o.cap = c.cap;
  o.prime = c.prime;
  if (c.seed != "builtin") {
    try {
      o.seed = std::stoull(c.seed);
    } catch (const std::exception&) {
      throw InvalidArgument("--seed must be an integer or 'builtin'");
    }
  }
  const auto results = run_suites(c.suite, DynkinType::parse(c.type), o);
  Output out(c.out);
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (c.emit == "json") {
      json checks = json::array();
      for (const auto& k : r.checks)
        checks.push_back({{"name", k.name}, {"pass", k.pass}, {"skipped", k.skipped}, {"detail", k.detail}});
      j.push_back({{"suite", r.suite}, {"type", r.type}, {"passed", r.passed()}, {"checks", checks}});
    } else {
      out.stream() << format_result(r);
    }
  }
  if (c.emit == "json") out.stream() << j.dump(2) << '\n';
  else out.stream() << (ok ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
  return ok ? 0 : 1;
}

int cmd_phi(const Config& c) {
  const auto type = DynkinType::parse(c.type);
  const auto& cat = catalog(type);
  if (c.module.empty()) throw InvalidArgument("phi needs --module");
  const auto m = cat.realize(module_ids(cat, c.module));
  std::vector<int> word;
  if (c.word.empty()) {
    word = longest_word(type);
  } else {
    for (const int v : parse_positions(c.word)) {
      if (v > type.rank()) throw InvalidArgument("vertex " + std::to_string(v) + " not in " + type.name());
      word.push_back(v - 1);
    }
  }
  const auto phi = phi_evaluate(m, word);
  Output out(c.out);
  auto& os = out.stream();
  if (c.field == "fp") {
    // point counts of the block varieties over F_p, for the nonzero terms
    json counts = json::array();
    for (const auto& [a, chi] : phi.coefficients) {
      CompositionType blocks;
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0) blocks.emplace_back(word[j], a[j]);
      counts.push_back({{"a", a}, {"count", count_flags_fq(m, blocks, c.prime)}, {"chi", chi.get_str()}});
    }
    if (c.emit == "json") {
      os << json{{"prime", c.prime}, {"phi", phi.to_json()}, {"counts", counts}}.dump(2) << '\n';
    } else {
      os << "phi = " << phi.to_string() << '\n';
      for (const auto& e : counts)
        os << "  a = " << e["a"].dump() << ": " << e["count"] << " points over F_" << c.prime << ", chi " << e["chi"].get<std::string>() << '\n';
    }
    return 0;
  }
  if (c.emit == "json") os << phi.to_json().dump(2) << '\n';
  else os << "phi = " << phi.to_string() << '\n';
  return 0;
}

int cmd_serve(const Config& c) {
  ExplorerService svc;
  std::cout << "listening on http://" << c.host << ":" << c.port << std::endl;
  svc.serve(c.host, c.port);
  return 0;
}

class PrimeValidator : public CLI::Validator {
 public:
  PrimeValidator() : CLI::Validator("PRIME") {
    func_ = [](std::string& s) -> std::string {
      try {
        if (is_prime(std::stoull(s)) && std::stoull(s) < (1ULL << 31)) return {};
      } catch (const std::exception&) {
      }
      return "'" + s + "' is not a prime below 2^31";
    };
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for preprojective algebras of Dynkin type"};
  app.require_subcommand(1);
  Config c;

  auto add_type = [&](CLI::App* s) { s->add_option("--type", c.type, "Dynkin type (A2, A3, A4)")->capture_default_str(); };
  auto add_field = [&](CLI::App* s) {
    s->add_option("--field", c.field, "q (rationals) or fp")->check(CLI::IsMember({"q", "fp"}))->capture_default_str();
    s->add_option("--prime", c.prime, "prime for --field fp")->check(PrimeValidator())->capture_default_str();
  };
  auto add_emit = [&](CLI::App* s, std::vector<std::string> formats) {
    s->add_option("--emit", c.emit, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    s->add_option("--out", c.out, "write to a file instead of stdout");
  };
  auto add_initial = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "'builtin' or an integer for a random start")->capture_default_str();
    s->add_option("--module", c.module, "summands, e.g. \"S1,#3,P1,P2\" or socle series");
  };

  auto* build = app.add_subcommand("build", "build Lambda and the catalog, print a summary");
  add_type(build);
  add_emit(build, {"table", "json"});

  auto* cat = app.add_subcommand("catalog", "list the indecomposable modules");
  add_type(cat);
  add_emit(cat, {"table", "json"});
  cat->add_flag_callback("--json", [&] { c.emit = "json"; }, "same as --emit json");
  cat->add_flag_callback("--table", [&] { c.emit = "table"; }, "same as --emit table");

  auto* rigid = app.add_subcommand("rigid-check", "Ext^1 between the summands of a module");
  add_type(rigid);
  add_field(rigid);
  add_emit(rigid, {"table", "json"});
  rigid->add_option("--module", c.module, "summands, e.g. \"S1,1 / 2,P1\"")->required();

  auto* mut = app.add_subcommand("mutate", "mutate along a sequence of positions, printing exchange sequences");
  add_type(mut);
  add_initial(mut);
  add_emit(mut, {"table", "json"});
  mut->add_option("--sequence", c.sequence, "1-based positions, e.g. 2,1,3")->required();

  auto* graph = app.add_subcommand("exchange-graph", "breadth-first exchange graph");
  add_type(graph);
  add_initial(graph);
  add_emit(graph, {"table", "json", "dot"});
  graph->add_flag("--deep", c.deep, "full graph beyond A3");
  graph->add_flag("--seeds", c.seeds, "attach cluster variables");

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  add_type(ver);
  add_emit(ver, {"table", "json"});
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  suites.push_back("endo");
  ver->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();
  ver->add_flag("--deep", c.deep, "whole A4 graph");
  ver->add_option("--cap", c.cap, "cap for homological dimensions")->check(CLI::Range(3, 64))->capture_default_str();
  ver->add_option("--prime", c.prime, "prime for the F_p cross-checks")->check(PrimeValidator())->capture_default_str();
  ver->add_option("--seed", c.seed, "integer seed for sampled pairs");

  auto* phi = app.add_subcommand("phi", "phi_M on a word");
  add_type(phi);
  add_field(phi);
  add_emit(phi, {"table", "json"});
  phi->add_option("--module", c.module, "summands of M")->required();
  phi->add_option("--word", c.word, "1-based vertices, default a reduced word for w0");

  auto* serve = app.add_subcommand("serve", "HTTP explorer service");
  serve->add_option("--port", c.port, "port")->check(CLI::Range(1, 65535))->capture_default_str();
  serve->add_option("--host", c.host, "bind address")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto* s = app.get_subcommands().front();
    const std::string name = s->get_name();
    if (name == "build") return cmd_build(c);
    if (name == "catalog") return cmd_catalog(c);
    if (name == "rigid-check") return cmd_rigid_check(c);
    if (name == "mutate") return cmd_mutate(c);
    if (name == "exchange-graph") return cmd_exchange_graph(c);
    if (name == "verify") return cmd_verify(c);
    if (name == "phi") return cmd_phi(c);
    if (name == "serve") return cmd_serve(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
