#pragma once

// Lambda-modules as representations of the double quiver: one matrix per
// arrow, subject to the preprojective relation at every vertex.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ppalg/algebra.hpp"
#include "ppalg/matrix.hpp"
#include "ppalg/quiver.hpp"

namespace ppalg {

class Representation {
 public:
  Representation(DynkinType type, DimensionVector dims);  // all maps zero
  Representation(DynkinType type, DimensionVector dims, std::vector<QMatrix> maps);

  static Representation simple(const DynkinType& type, int vertex);
  /// Lambda e_i in the path basis of the preprojective algebra.
  static Representation projective(const DynkinType& type, int vertex);

  const DynkinType& type() const { return type_; }
  const Quiver& quiver() const { return *quiver_; }
  const DimensionVector& dims() const { return dims_; }
  int dim(int vertex) const { return dims_[vertex]; }
  int total_dim() const;
  std::size_t vertex_count() const { return dims_.size(); }
  std::size_t arrow_count() const { return maps_.size(); }
  /// Matrix of the double-quiver arrow a: dims[t(a)] x dims[s(a)].
  const QMatrix& map(std::size_t arrow) const { return maps_[arrow]; }
  QMatrix& map(std::size_t arrow) { return maps_[arrow]; }
  const std::vector<QMatrix>& maps() const { return maps_; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.type_ == b.type_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  void check_shapes() const;

  DynkinType type_;
  std::shared_ptr<const Quiver> quiver_;
  DimensionVector dims_;
  std::vector<QMatrix> maps_;
};

/// A homomorphism of representations: one matrix per vertex.
struct Morphism {
  std::vector<QMatrix> components;

  static Morphism zero(const Representation& from, const Representation& to);
  static Morphism identity(const Representation& m);
  bool is_zero() const;
  bool is_isomorphism() const;
  /// Sum over vertices of rank.
  std::size_t rank() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator*(const Rational& s, const Morphism& a);
bool is_homomorphism(const Morphism& f, const Representation& from, const Representation& to);

struct RelationReport {
  bool ok = true;
  std::vector<int> failing_vertices;
  std::vector<QMatrix> defects;  // one per vertex
};

RelationReport check_relations(const Representation& m);

/// Basis of Hom(X, Y). The basis is in reduced echelon form on the
/// flattened unknowns: element t is 1 at position free[t] and 0 at the other
/// free positions, so coordinates are read off directly.
struct HomSpace {
  std::vector<Morphism> basis;
  std::vector<std::size_t> free;  // flattened positions
  std::vector<std::size_t> offsets;  // start of each vertex block in the flattening

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of a homomorphism in this basis.
  std::vector<Rational> coordinates(const Morphism& f) const;
  Morphism combination(const std::vector<Rational>& coeffs) const;
};

HomSpace hom_space(const Representation& x, const Representation& y);
int hom_dim(const Representation& x, const Representation& y);
// Same linear system reduced mod p. The structure maps must be p-integral.
int hom_dim_mod(const Representation& x, const Representation& y, std::uint32_t p);

/// dim Ext^1(X, Y) = dim Hom(X,Y) + dim Hom(Y,X) - (dim X, dim Y).
int ext1_dim(const Representation& x, const Representation& y);
/// dim Ext^1(X, Y) from a projective presentation 0 -> Omega X -> P -> X -> 0:
/// the cokernel of Hom(P, Y) -> Hom(Omega X, Y).
int ext1_dim_oracle(const Representation& x, const Representation& y);

/// Extensions 0 -> Y -> E -> X -> 0 with E = Y (+) X and
/// f^E_a = [[f^Y_a, c_a], [0, f^X_a]]. `classes` are cocycles c whose images
/// form a basis of Ext^1(X, Y).
struct ExtensionSpace {
  std::vector<std::vector<QMatrix>> classes;  // per class, one c_a per arrow
  std::size_t dim() const { return classes.size(); }
};

ExtensionSpace extension_space(const Representation& x, const Representation& y);
Representation extension_middle(const Representation& x, const Representation& y,
                                const std::vector<QMatrix>& cocycle);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& parts);
/// Base change by invertible per-vertex matrices g: f_a -> g_t f_a g_s^{-1}.
Representation conjugate(const Representation& m, const std::vector<QMatrix>& g);
/// The dual module: same dimension vector, g_a = f_{a*}^t.
Representation dual(const Representation& m);

/// Restriction to a subrepresentation given by per-vertex bases (columns).
Representation subrepresentation(const Representation& m, const std::vector<QMatrix>& bases);
/// Quotient by a subrepresentation. The complement of the subspace at each
/// vertex is spanned by standard basis vectors chosen in ascending order.
struct Quotient {
  Representation module;
  Morphism projection;
};
Quotient quotient(const Representation& m, const std::vector<QMatrix>& sub_bases);

/// Per-vertex bases of ker f and im f.
std::vector<QMatrix> kernel_bases(const Morphism& f);
std::vector<QMatrix> image_bases(const Morphism& f);
Representation kernel_of(const Morphism& f, const Representation& from);
Quotient cokernel_of(const Morphism& f, const Representation& to);

/// Top vectors of M: per vertex, a complement of the images of incoming arrows.
std::vector<std::pair<int, QMatrix>> top_vectors(const Representation& m);
/// Projective cover P -> M (P a direct sum of indecomposable projectives).
struct ProjectiveCover {
  Representation projective;
  std::vector<int> vertices;  // summand P_i in order
  Morphism map;
};
ProjectiveCover projective_cover(const Representation& m);
Representation syzygy(const Representation& m);
/// Cokernel of an injective hull; throws InvalidArgument when M has a
/// projective direct summand.
Representation cosyzygy(const Representation& m);
bool is_projective(const Representation& m);

/// rad M = sum of arrow images; M / soc M.
Representation radical_of(const Representation& m);
Representation socle_quotient(const Representation& m);

/// Socle series layers, socle first: layers[k][i] = multiplicity of S_i.
std::vector<std::vector<int>> socle_layers(const Representation& m);
/// "2 / 1 3 / 2": layers top first, vertex labels 1-based.
std::string socle_display(const Representation& m);

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y, std::uint64_t seed = 1);
bool is_isomorphic(const Representation& x, const Representation& y, std::uint64_t seed = 1);

/// dim End(M)/rad End(M) via the rank of the trace form tr(fg) on End(M).
std::size_t top_dim_of_endomorphisms(const Representation& m);

/// Krull-Schmidt decomposition by Fitting splittings; isomorphic leaves are
/// grouped with multiplicities in order of first appearance.
std::vector<std::pair<Representation, int>> decompose(const Representation& m, std::uint64_t seed = 1);

/// codim of the GL-orbit of M in the module variety of its dimension vector.
int orbit_codim(const Representation& m);

/// The module as a module over the structure-constant preprojective algebra.
AlgebraModule to_algebra_module(const Representation& m);

nlohmann::json to_json(const Representation& m);
Representation representation_from_json(const nlohmann::json& j);

}  // namespace ppalg
