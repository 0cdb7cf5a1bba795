#include "doctest.h"
#include "ppalg/catalog.hpp"
#include "ppalg/semicanonical.hpp"

#include <chrono>
#include <iostream>

using namespace ppalg;

namespace {
const DynkinType A2 = DynkinType::parse("A2");
const DynkinType A3 = DynkinType::parse("A3");

Polynomial t(std::size_t i) { return Polynomial::variable(3, i); }

Polynomial phi(const Representation& m) { return phi_evaluate(m, longest_word(m.type())).polynomial(); }
}  // namespace

TEST_CASE("flag counts over F_p") {
  const auto s1 = Representation::simple(A2, 0);
  const auto p1 = Representation::projective(A2, 0);
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    CHECK(count_flags_fq(s1, std::vector<int>{0}, p) == 1);
    CHECK(count_flags_fq(direct_sum(s1, s1), std::vector<int>{0, 0}, p) == p + 1);
    CHECK(count_flags_fq(p1, std::vector<int>{1, 0}, p) == 0);
    CHECK(count_flags_fq(p1, std::vector<int>{0, 1}, p) == 1);
    CHECK(count_flags_fq(direct_sum(s1, s1), CompositionType{{0, 2}}, p) == 1);
  }
  CHECK_THROWS_AS(count_flags_fq(s1, std::vector<int>{0}, 4), InvalidArgument);
  // full flags in F_3^3 at vertex 1
  const auto s3 = direct_sum({s1, s1, s1});
  CHECK(count_flags_fq(s3, std::vector<int>{0, 0, 0}, 3) == 4 * 13);
}

TEST_CASE("Euler characteristics") {
  const auto s1 = Representation::simple(A2, 0);
  CHECK(euler_characteristic(Representation::projective(A2, 0), {0, 1}) == 1);
  CHECK(euler_characteristic(direct_sum(s1, s1), {0, 0}) == 2);
  CHECK(euler_characteristic(s1, {1}) == 0);
  CHECK(euler_characteristic(direct_sum({s1, s1, s1}), {0, 0, 0}) == 6);
  const auto cp = count_polynomial(direct_sum({s1, s1, s1}), {{0, 1}, {0, 1}, {0, 1}}, 3);
  CHECK(cp.coefficients == std::vector<Rational>{1, 2, 2, 1});
  const auto serial = count_polynomial(Representation::projective(A3, 1), {{1, 1}, {0, 1}, {2, 1}, {1, 1}}, 1,
                                       Exec::serial);
  const auto parallel = count_polynomial(Representation::projective(A3, 1), {{1, 1}, {0, 1}, {2, 1}, {1, 1}}, 1,
                                         Exec::parallel);
  CHECK(serial.samples == parallel.samples);
}

TEST_CASE("A2 phi values") {
  CHECK(longest_word(A2) == std::vector<int>{0, 1, 0});
  CHECK(longest_word(A3) == std::vector<int>{0, 1, 0, 2, 1, 0});
  const auto& c = catalog(A2);
  const auto s1 = phi(c.entry(0).module), s2 = phi(c.entry(1).module);
  const auto p1 = phi(c.entry(2).module), p2 = phi(c.entry(3).module);
  CHECK(s1 == t(0) + t(2));
  CHECK(s2 == t(1));
  CHECK(p1 == t(0) * t(1));
  CHECK(p2 == t(1) * t(2));
  CHECK(s1 * s2 == p1 + p2);
  CHECK(phi_evaluate(c.entry(0).module, {0, 1, 0}).to_string() == "t1 + t3");
  CHECK(phi_evaluate(c.entry(2).module, {0, 1, 0}).to_json()["polynomial"] == "t1*t2");
  for (const auto& x : c.entries())
    for (const auto& y : c.entries()) CHECK(phi(direct_sum(x.module, y.module)) == phi(x.module) * phi(y.module));
  const auto s11 = phi_evaluate(direct_sum(c.entry(0).module, c.entry(0).module), {0, 1, 0});
  CHECK(s11.chi({2, 0, 0}) == 2);
  CHECK(s11.coefficients.at({2, 0, 0}) == 1);
  CHECK_THROWS_AS(phi_evaluate(direct_sum({c.entry(2).module, c.entry(3).module, c.entry(2).module,
                                           c.entry(3).module, c.entry(0).module}),
                               {0, 1, 0}),
                  SizeLimit);
}

TEST_CASE("multiplication formula on A2 exchange pairs") {
  const auto& c = catalog(A2);
  int checked = 0;
  for (const auto& x : c.entries())
    for (const auto& y : c.entries()) {
      if (x.id >= y.id || c.ext(y.id, x.id) != 1) continue;
      const auto e1 = extension_middle(x.module, y.module, extension_space(x.module, y.module).classes.at(0));
      const auto e2 = extension_middle(y.module, x.module, extension_space(y.module, x.module).classes.at(0));
      CHECK(phi(x.module) * phi(y.module) == phi(e1) + phi(e2));
      ++checked;
    }
  CHECK(checked == 1);
}

TEST_CASE("A3 samples") {
  const auto& c = catalog(A3);
  const auto a = c.lookup("1 / 2"), b = c.lookup("2 / 1 3");
  const auto e1 = extension_middle(c.entry(a).module, c.entry(b).module,
                                   extension_space(c.entry(a).module, c.entry(b).module).classes.at(0));
  const auto e2 = extension_middle(c.entry(b).module, c.entry(a).module,
                                   extension_space(c.entry(b).module, c.entry(a).module).classes.at(0));
  const auto pa = phi(c.entry(a).module), pb = phi(c.entry(b).module);
  CHECK(pa * pb == phi(e1) + phi(e2));
  CHECK(phi(direct_sum(c.entry(a).module, c.entry(b).module)) == pa * pb);
}
