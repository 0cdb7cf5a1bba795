// Acceptance run: one PASS/FAIL line per criterion, with the time limits
// fixed below. Exit 0 only when every criterion passes. --deep adds the full
// A4 exchange graph to criterion 2.

#include <chrono>
#include <algorithm>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "ppalg/catalog.hpp"
#include "ppalg/cluster.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/verify.hpp"

using namespace ppalg;

namespace {

constexpr double kCatalogLimit = 60;       // 1
constexpr double kGraphLimit = 30;         // 2, A2 and A3
constexpr double kDeepGraphLimit = 1800;   // 2, A4 with --deep
constexpr double kGoldenLimit = 60;        // 3
constexpr double kMutationLimit = 60;      // 4
constexpr double kQuiverShapeLimit = 300;  // 5
constexpr double kHomologicalLimit = 60;   // 6
constexpr double kFunctorLimit = 300;      // 7
constexpr double kMultformLimit = 120;     // 8
constexpr double kClusterLimit = 120;      // 9

const DynkinType A2 = DynkinType::parse("A2");
const DynkinType A3 = DynkinType::parse("A3");
const DynkinType A4 = DynkinType::parse("A4");

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
};

// Folds suite results into an outcome; checks named in `only` (if any) are
// the ones that count, and a skipped check counts as a failure.
void absorb(Outcome& o, const std::vector<SuiteResult>& results, const std::vector<std::string>& only = {}) {
  for (const auto& r : results)
    for (const auto& c : r.checks) {
      if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
      if (!c.pass) {
        o.pass = false;
        o.failures.push_back(r.type + " " + r.suite + ": " + c.name + (c.skipped ? " skipped" : " failed") + " (" +
                             c.detail + ")");
      }
    }
}

std::string detail_of(const std::vector<SuiteResult>& results, const std::string& name) {
  for (const auto& r : results)
    for (const auto& c : r.checks)
      if (c.name == name) return c.detail;
  return "missing";
}

int run(int number, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit;
  const bool pass = o.pass && in_time;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!o.summary.empty()) line << "; " << o.summary;
  line << "  [" << seconds << " s, limit " << limit << " s]";
  std::cout << line.str() << std::endl;
  if (!in_time) std::cout << "      over the time limit" << std::endl;
  for (const auto& f : o.failures) std::cout << "      " << f << std::endl;
  return pass ? 0 : 1;
}

std::vector<SuiteResult> both(const std::string& suite, const VerifyOptions& o = {}) {
  auto a = run_suites(suite, A2, o);
  auto b = run_suites(suite, A3, o);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--deep") == 0) {
      deep = true;
    } else {
      std::cerr << "usage: acceptance [--deep]\n";
      return 2;
    }
  }
  int failed = 0;

  failed += run(1, "catalog counts A2/A3/A4 = 4/12/40, all rigid, r = 3/6/10", kCatalogLimit, [] {
    Outcome o;
    std::vector<SuiteResult> rs;
    std::string sizes;
    for (const auto& t : {A2, A3, A4}) {
      rs.push_back(run_suite("counts", t));
      sizes += (sizes.empty() ? "" : "/") + std::to_string(catalog(t).size());
    }
    absorb(o, rs, {"indecomposables", "all indecomposables rigid", "r = number of positive roots", "projectives"});
    o.summary = "sizes " + sizes;
    return o;
  });

  failed += run(2, "exchange graphs A2 -> 2, A3 -> 14 vertices, regular of degree r-n", kGraphLimit, [] {
    Outcome o;
    const auto rs = both("counts");
    absorb(o, rs, {"exchange graph vertices", "exchange graph regular of degree r-n"});
    o.summary = "A2 " + detail_of({rs[0]}, "exchange graph vertices") + "; A3 " +
                detail_of({rs[1]}, "exchange graph vertices") + ", " +
                detail_of({rs[1]}, "exchange graph regular of degree r-n");
    return o;
  });
  if (deep) {
    failed += run(2, "A4 exchange graph -> 672 vertices (--deep)", kDeepGraphLimit, [] {
      Outcome o;
      VerifyOptions v;
      v.deep = true;
      const std::vector<SuiteResult> rs{run_suite("counts", A4, v)};
      absorb(o, rs, {"exchange graph vertices", "exchange graph regular of degree r-n"});
      o.summary = detail_of(rs, "exchange graph vertices");
      return o;
    });
  } else {
    std::cout << "NOTE  criterion 2: A4 part (672 vertices, < 30 min) not run; pass --deep" << std::endl;
  }

  failed += run(3, "printed C_T, R_T, S and C_T*, R_T* for A2 and A3", kGoldenLimit, [] {
    Outcome o;
    const auto rs = both("golden");
    absorb(o, rs);
    std::size_t n = 0;
    for (const auto& r : rs) n += r.checks.size();
    o.summary = std::to_string(n) + " exact comparisons";
    return o;
  });

  failed += run(4, "B(mu_k T)0 = mu_k(B(T)0), C_T* = S C_T S^t, R_T* = S^t R_T S, R_T*0 = mu_k(R_T0)", kMutationLimit,
                [] {
                  Outcome o;
                  auto rs = both("thm-mutation");
                  const auto more = both("prop-mutation3");
                  rs.insert(rs.end(), more.begin(), more.end());
                  absorb(o, rs);
                  o.summary = "A2 " + detail_of({rs[0]}, "B(mu_k T)0 = mu_k(B(T)0)") + ", A3 " +
                              detail_of({rs[1]}, "B(mu_k T)0 = mu_k(B(T)0)");
                  return o;
                });

  failed += run(5, "End(T): no loops, 2-cycles, sinks or sources; gl.dim = dom.dim = 3; Ext symmetry",
                kQuiverShapeLimit, [] {
                  Outcome o;
                  const auto rs = both("thm-quivershape");
                  absorb(o, rs);
                  o.summary = "A2 " + detail_of({rs[0]}, "gl.dim E = 3") + ", A3 " + detail_of({rs[1]}, "gl.dim E = 3");
                  return o;
                });

  failed += run(6, "Ext^1 oracle, Ext symmetry and evenness, 2 codim = dim Ext^1(M,M)", kHomologicalLimit, [] {
    Outcome o;
    const auto rs = both("homological");
    absorb(o, rs);
    o.summary = "A3 " + detail_of({rs[1]}, "Ext^1 = projective presentation oracle") + ", " +
                detail_of({rs[1]}, "2 codim orbit = dim Ext^1(M,M)");
    return o;
  });

  failed += run(7, "F_T: proj.dim <= 1, reflects isomorphism, A2 image table", kFunctorLimit, [] {
    Outcome o;
    const auto rs = both("functor");
    absorb(o, rs);
    o.summary = "A3 " + detail_of({rs[1]}, "F_T reflects isomorphism");
    return o;
  });

  failed += run(8, "phi_S1 phi_S2 = phi_P1 + phi_P2, multiplicativity, multiplication formula", kMultformLimit, [] {
    Outcome o;
    const auto rs = both("thm-multform");
    absorb(o, rs);
    const std::string formula = "phi_M phi_N = phi_X + phi_Y when dim Ext^1(M,N) = 1";
    o.summary = "A2 " + detail_of({rs[0]}, formula) + ", A3 " + detail_of({rs[1]}, formula);
    // at least 10 A3 pairs, as required
    const auto& d = detail_of({rs[1]}, formula);
    if (std::stoul(d) < 10) {
      o.pass = false;
      o.failures.push_back("fewer than 10 A3 pairs with dim Ext^1 = 1");
    }
    return o;
  });

  failed += run(9, "seed graphs regular, cycle-consistent, Laurent, A2 exchange relation = phi identity",
                kClusterLimit, [] {
                  Outcome o;
                  const auto rs = both("cluster");
                  absorb(o, rs);
                  o.summary = "A3 " + detail_of({rs[1]}, "x(M)(phi_T) = phi_M");
                  return o;
                });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
