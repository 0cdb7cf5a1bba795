#pragma once

// End_Lambda(T) as a structure-constant algebra, the quiver Gamma_T, and the
// integer matrices B(T), C_T, R_T, S(B, k) attached to a basic complete
// rigid module T given as an ordered list of catalog ids.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppalg/algebra.hpp"
#include "ppalg/catalog.hpp"
#include "ppalg/int_matrix.hpp"

namespace ppalg {

/// E = End(T) with basis the concatenated bases of Hom(T_i, T_j), pairs in
/// row-major (i, j) order. A map T_i -> T_j lies in e_j E e_i and the product
/// is composition, so E e_i = Hom(T_i, T) and arrows i -> j of the Gabriel
/// quiver are irreducible maps T_i -> T_j.
struct EndomorphismAlgebra {
  std::vector<int> order;
  std::vector<Representation> summands;
  AlgebraPtr algebra;
  std::vector<std::vector<HomSpace>> hom;         // hom[i][j] = Hom(T_i, T_j)
  std::vector<std::vector<std::size_t>> offset;  // basis start of hom[i][j]
};

EndomorphismAlgebra endomorphism_algebra(const std::vector<int>& order, const Catalog& cat);

/// arrows(i, j) = number of arrows T_i -> T_j in Gamma_T.
IntMatrix gamma_quiver(const std::vector<int>& order, const Catalog& cat);

/// t_ij = arrows(j -> i) - arrows(i -> j).
IntMatrix b_matrix(const IntMatrix& arrows);
/// c_ij = dim Hom(T_j, T_i).
IntMatrix cartan_of(const std::vector<int>& order, const Catalog& cat);
/// C^{-t}; throws SingularMatrix unless C is invertible over Z.
IntMatrix ringel_of(const IntMatrix& cartan);

/// Identity except row k: s_kj = -delta_kj + (|b_kj| - b_kj) / 2. k is 0-based.
IntMatrix s_matrix(const IntMatrix& b, std::size_t k);

struct ExchangeData {
  std::vector<int> order;  // exchangeable summands first, then projectives
  std::size_t exchangeable = 0;
  IntMatrix arrows;
  IntMatrix b;            // r x r
  IntMatrix b_principal;  // B(T)°: the first r - n columns
  IntMatrix cartan;
  IntMatrix ringel;

  nlohmann::json to_json() const;
};

/// Requires T basic, rigid, with r summands and the projectives last.
ExchangeData exchange_data(const std::vector<int>& order, const Catalog& cat);

/// Gamma_T in Graphviz syntax with vertices labelled by socle series.
std::string gamma_dot(const std::vector<int>& order, const IntMatrix& arrows, const Catalog& cat);

/// F_T(X) = Hom(X, T) as a left E-module; e_i F_T(X) = Hom(X, T_i).
AlgebraModule ft_module(const Representation& x, const EndomorphismAlgebra& e);

}  // namespace ppalg
