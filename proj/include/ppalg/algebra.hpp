#pragma once

// Finite-dimensional algebras given by structure constants, their modules,
// and the homological routines (radical, simples, minimal projective
// resolutions, global and dominant dimension, Ext dimensions) used for both
// the preprojective algebra and endomorphism algebras End(T).

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ppalg/int_matrix.hpp"
#include "ppalg/matrix.hpp"
#include "ppalg/quiver.hpp"

namespace ppalg {

using Vector = std::vector<Rational>;
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Coordinates with respect to a fixed basis of a subspace. Precomputes a
/// left inverse on a set of independent rows so that repeated coordinate
/// extraction is a single matrix product.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates() = default;
  explicit SubspaceCoordinates(QMatrix basis);

  const QMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Coordinates of the columns of `vectors`; the columns must lie in the span.
  QMatrix coordinates(const QMatrix& vectors) const;

 private:
  QMatrix basis_;
  std::vector<std::size_t> rows_;
  QMatrix left_inverse_;
};

/// One arrow of the Gabriel quiver of a basic algebra: a radical element in
/// e_to A e_from that is independent modulo rad^2.
struct AlgebraArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Vector element;
};

struct AlgebraQuiver {
  IntMatrix arrow_counts;  // (i, j) = number of arrows i -> j
  std::vector<AlgebraArrow> arrows;
};

/// A basic finite-dimensional algebra over Q with a complete set of
/// primitive orthogonal idempotents e_1..e_m (one per vertex). Immutable
/// after construction; derived data (radical, quiver) is computed once on
/// first use and is safe to request from several threads.
class FinDimAlgebra {
 public:
  FinDimAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                std::vector<Vector> idempotents);

  std::size_t dim() const { return labels_.size(); }
  std::size_t vertex_count() const { return idempotents_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const Vector& idempotent(std::size_t i) const { return idempotents_[i]; }

  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector unit() const;

  /// Matrix of y -> b_i y (resp. y -> y b_i) on the basis.
  QMatrix left_multiplication(std::size_t i) const;
  QMatrix left_multiplication(const Vector& x) const;
  QMatrix right_multiplication(const Vector& x) const;

  bool is_associative() const;
  FinDimAlgebra opposite() const;

  /// Columns form a basis of the Jacobson radical, computed as the radical
  /// of the trace form tr(L_{xy}) (valid in characteristic 0).
  const QMatrix& radical() const;
  /// Basis of rad^2.
  const QMatrix& radical_squared() const;
  /// Gabriel quiver: dim e_j (J/J^2) e_i arrows i -> j, with lifted arrows.
  const AlgebraQuiver& gabriel_quiver() const;
  /// Basis (columns) of e_i A e_j.
  QMatrix peirce(std::size_t i, std::size_t j) const;
  /// c_ij = dim e_i A e_j.
  IntMatrix cartan_matrix() const;

  nlohmann::json to_json() const;

 private:
  struct Derived {
    std::once_flag radical_once;
    QMatrix radical;
    QMatrix radical_squared;
    std::once_flag quiver_once;
    AlgebraQuiver quiver;
  };

  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  std::vector<Vector> idempotents_;
  std::shared_ptr<Derived> derived_;
};

using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

/// A finite-dimensional left module given by one action matrix per basis
/// element of the algebra.
struct AlgebraModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<QMatrix> action;

  QMatrix act(const Vector& x) const;
  /// dim e_i M for each vertex.
  std::vector<std::size_t> dimension_vector() const;
};

AlgebraModule zero_module(const AlgebraPtr& a);
/// Restriction to an invariant subspace (columns of `basis`, independent).
AlgebraModule submodule(const AlgebraModule& m, const QMatrix& basis);
/// Quotient by an invariant subspace.
AlgebraModule quotient_module(const AlgebraModule& m, const QMatrix& sub_basis);
AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b);
/// Basis of rad(A) M.
QMatrix radical_of_module(const AlgebraModule& m);

/// A e_i with left multiplication.
AlgebraModule projective_module(const AlgebraPtr& a, std::size_t vertex);
/// D(e_i A) with the induced left action; the injective hull of S_i.
AlgebraModule injective_module(const AlgebraPtr& a, std::size_t vertex);
AlgebraModule simple_module(const AlgebraPtr& a, std::size_t vertex);
/// The left regular module A.
AlgebraModule regular_module(const AlgebraPtr& a);
/// D(A) as a left module over the opposite algebra `op` (action b -> L_b^t).
AlgebraModule dual_regular_module(const AlgebraPtr& a, const AlgebraPtr& op);

/// Top of a module as a list of (vertex, representative vector).
std::vector<std::pair<std::size_t, QMatrix>> top_vectors(const AlgebraModule& m);
std::vector<int> top_multiplicities(const AlgebraModule& m);

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0. terms[k][i] is
/// the multiplicity of P_i in P_k. `complete` is false when the kernel after
/// the last computed term (index max_length) is still nonzero.
struct ProjectiveResolution {
  std::vector<std::vector<int>> terms;
  bool complete = true;
  /// Index of the last nonzero term (projective dimension when complete).
  int length() const;
};

ProjectiveResolution minimal_projective_resolution(const AlgebraModule& m, std::size_t max_length);

/// A homological dimension capped at some bound; at_least marks "value or more".
struct CappedDimension {
  int value = 0;
  bool at_least = false;
  friend bool operator==(const CappedDimension&, const CappedDimension&) = default;
};

CappedDimension projective_dimension(const AlgebraModule& m, std::size_t cap);
CappedDimension global_dimension(const AlgebraPtr& a, std::size_t cap);
/// Number of leading projective-injective terms in a minimal injective
/// coresolution of A; computed by resolving D(A) over the opposite algebra.
CappedDimension dominant_dimension(const AlgebraPtr& a, std::size_t cap);
/// Vertices i whose injective D(e_i A) is also projective.
std::vector<std::size_t> projective_injective_vertices(const AlgebraPtr& a);

/// dim Ext^degree(S_from, S_to), read off the minimal resolution of S_from.
int ext_dim(const AlgebraPtr& a, std::size_t from, std::size_t to, std::size_t degree);
/// Table ext[k](i, j) = dim Ext^k(S_i, S_j) for k = 0..max_degree.
std::vector<IntMatrix> ext_table(const AlgebraPtr& a, std::size_t max_degree);
/// Ringel form matrix (sum_k (-1)^k dim Ext^k(S_i, S_j)); requires finite
/// global dimension <= cap.
IntMatrix ringel_form(const AlgebraPtr& a, std::size_t cap);

/// Basis of Hom_A(M, N) as matrices (dim N x dim M).
std::vector<QMatrix> module_hom(const AlgebraModule& m, const AlgebraModule& n);
bool modules_isomorphic(const AlgebraModule& m, const AlgebraModule& n, std::uint64_t seed = 1);

/// The preprojective algebra of a Dynkin type with its path basis.
struct PreprojectiveAlgebra {
  DynkinType type;
  std::shared_ptr<const Quiver> quiver;  // the double quiver
  AlgebraPtr algebra;
  /// Basis element b equals words[b][0] * words[b][1] * ... * e_{source[b]}.
  std::vector<std::vector<std::size_t>> words;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<int> degree;
  /// arrow_action[a][b]: a * b_b expressed in the basis.
  std::vector<std::vector<SparseVector>> arrow_action;
};

/// Builds KQbar/(c) degree by degree as a quadratic algebra until a degree
/// vanishes.
PreprojectiveAlgebra build_preprojective(const DynkinType& type);
/// Shared, cached instance.
const PreprojectiveAlgebra& preprojective(const DynkinType& type);

}  // namespace ppalg
