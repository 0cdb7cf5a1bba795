#pragma once

// phi_M evaluated on x_{i_1}(t_1) ... x_{i_k}(t_k): Euler characteristics of
// varieties of composition series, obtained by counting points over F_p and
// interpolating in p.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ppalg/parallel.hpp"
#include "ppalg/polynomial.hpp"
#include "ppalg/representation.hpp"

namespace ppalg {

/// A composition type: consecutive blocks (vertex, a) meaning a factors S_vertex.
using CompositionType = std::vector<std::pair<int, int>>;

/// Number of chains M = M_0 > M_1 > ... > 0 over F_p with M_{j-1}/M_j
/// isomorphic to S_{v_j}^{a_j}. With all a_j = 1 this counts composition
/// series of the expanded word.
std::uint64_t count_flags_fq(const Representation& m, const CompositionType& blocks, std::uint32_t p);
/// Composition series of the expanded word (0-based vertices).
std::uint64_t count_flags_fq(const Representation& m, const std::vector<int>& word, std::uint32_t p);

struct CountPolynomial {
  std::vector<Rational> coefficients;  // in q, lowest degree first
  std::vector<std::pair<std::uint32_t, std::uint64_t>> samples;
  Rational at_one() const;
};

/// Counts over the first degree_bound + 2 usable primes, interpolates
/// through all but the last and checks the last; throws NonPolynomialCount.
CountPolynomial count_polynomial(const Representation& m, const CompositionType& blocks, int degree_bound,
                                 Exec exec = Exec::parallel);

/// chi of the variety of composition series of the expanded word.
Integer euler_characteristic(const Representation& m, const std::vector<int>& word);
/// chi of the block variety: chi(Phi_{i^a}) / (a_1! ... a_k!).
Integer block_euler_characteristic(const Representation& m, const CompositionType& blocks, Exec exec = Exec::parallel);

/// A reduced word for the longest Weyl group element (0-based vertices).
std::vector<int> longest_word(const DynkinType& type);

struct PhiPolynomial {
  std::vector<int> pattern;  // 0-based vertices
  /// Exponent tuple a -> chi(Phi_{i^a, M}) / (a_1! ... a_k!), nonzero only.
  std::map<std::vector<int>, Integer> coefficients;

  /// The polynomial in t_1..t_k.
  Polynomial polynomial() const;
  /// chi(Phi_{i^a, M}) itself.
  Integer chi(const std::vector<int>& a) const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Modules larger than max_dim are refused with SizeLimit.
PhiPolynomial phi_evaluate(const Representation& m, const std::vector<int>& pattern, int max_dim = 8,
                           Exec exec = Exec::parallel);

}  // namespace ppalg
