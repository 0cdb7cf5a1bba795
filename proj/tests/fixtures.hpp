#pragma once

// Modules written down by hand from their socle series, independent of the
// enumerator. Arrow order in the double quiver: a1, a1*, a2, a2*, ...

#include <string>
#include <utility>
#include <vector>

#include "ppalg/representation.hpp"

namespace fixtures {

using ppalg::DimensionVector;
using ppalg::DynkinType;
using ppalg::QMatrix;
using ppalg::Representation;

inline Representation build(const char* type, DimensionVector d, std::vector<std::pair<std::size_t, QMatrix>> maps) {
  Representation m(DynkinType::parse(type), std::move(d));
  for (auto& [a, f] : maps) m.map(a) = f;
  return m;
}

// A2: S1, S2, 1/2, 2/1 (ids 0..3)
inline std::vector<std::pair<std::string, Representation>> a2() {
  return {
      {"1", build("A2", {1, 0}, {})},
      {"2", build("A2", {0, 1}, {})},
      {"1 / 2", build("A2", {1, 1}, {{0, QMatrix{{1}}}})},
      {"2 / 1", build("A2", {1, 1}, {{1, QMatrix{{1}}}})},
  };
}

// A3 in id order
inline std::vector<std::pair<std::string, Representation>> a3() {
  return {
      {"1", build("A3", {1, 0, 0}, {})},
      {"2", build("A3", {0, 1, 0}, {})},
      {"3", build("A3", {0, 0, 1}, {})},
      {"1 / 2", build("A3", {1, 1, 0}, {{0, QMatrix{{1}}}})},
      {"2 / 1", build("A3", {1, 1, 0}, {{1, QMatrix{{1}}}})},
      {"2 / 3", build("A3", {0, 1, 1}, {{2, QMatrix{{1}}}})},
      {"3 / 2", build("A3", {0, 1, 1}, {{3, QMatrix{{1}}}})},
      {"1 / 2 / 3", build("A3", {1, 1, 1}, {{0, QMatrix{{1}}}, {2, QMatrix{{1}}}})},
      {"1 3 / 2", build("A3", {1, 1, 1}, {{0, QMatrix{{1}}}, {3, QMatrix{{1}}}})},
      {"2 / 1 3", build("A3", {1, 1, 1}, {{1, QMatrix{{1}}}, {2, QMatrix{{1}}}})},
      {"3 / 2 / 1", build("A3", {1, 1, 1}, {{3, QMatrix{{1}}}, {1, QMatrix{{1}}}})},
      // P2: top 2, middle 1 and 3, socle 2; the relation at 2 forces a sign
      {"2 / 1 3 / 2", build("A3", {1, 2, 1},
                            {{1, QMatrix{{1, 0}}}, {0, QMatrix{{0}, {1}}}, {2, QMatrix{{1, 0}}}, {3, QMatrix{{0}, {1}}}})},
  };
}

}  // namespace fixtures
