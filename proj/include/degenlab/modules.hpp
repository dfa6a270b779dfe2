#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenlab/linalg.hpp"
#include "degenlab/quiver.hpp"

namespace degenlab {

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

// Raised when a computation would need a proper extension of the working field.
struct NeedsSplitInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P = ⊕_r Λ z_r with z_r normed by e(r). Basis: pairs (p, r), p a basis path
// of Λ starting at e(r); block r lists Λe(r) in path order, so z_r comes first.
class ProjectivePresentation {
 public:
  struct Elem {
    size_t path;  // algebra basis index
    size_t top;   // r
  };

  ProjectivePresentation(AlgebraPtr alg, std::vector<int> tops);

  const PathAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  const std::vector<int>& tops() const { return tops_; }
  size_t top_count() const { return tops_.size(); }
  size_t dim() const { return basis_.size(); }
  const Elem& basis(size_t k) const { return basis_[k]; }
  size_t index(size_t path, size_t top) const;
  size_t offset(size_t top) const { return offset_[top]; }
  size_t block_size(size_t top) const { return alg_->basis_from(tops_[top]).size(); }
  int end_vertex(size_t k) const { return alg_->basis_path(basis_[k].path).end; }
  size_t length(size_t k) const { return alg_->basis_path(basis_[k].path).length(); }

  Vec zero() const { return Vec(dim()); }
  Vec unit(size_t k) const;
  Vec z(size_t r) const { return unit(offset_[r]); }
  // λ z_r for λ in Λe(r) (entries of λ outside Λe(r) must vanish).
  Vec embed(const Vec& lambda, size_t r) const;
  // Component of v in Λz_r, as an algebra element.
  Vec component(const Vec& v, size_t r) const;

  Vec act_arrow(int a, const Vec& v) const;
  Vec act_basis(size_t alg_index, const Vec& v) const;
  Vec act(const Vec& lambda, const Vec& v) const;
  Vec project_vertex(int vertex, const Vec& v) const;

  // Λ-linear endomorphism of P with z_r ↦ images[r], applied to v.
  Vec apply_hom(const std::vector<Vec>& images, const Vec& v) const;
  // Matrix of that endomorphism on the basis of P.
  Matrix hom_matrix(const std::vector<Vec>& images) const;

  Subspace radical() const;
  std::vector<size_t> vertex_dims() const;
  std::string element_str(const Vec& v) const;
  bool same_as(const ProjectivePresentation& o) const { return alg_ == o.alg_ && tops_ == o.tops_; }

 private:
  AlgebraPtr alg_;
  std::vector<int> tops_;
  std::vector<Elem> basis_;
  std::vector<size_t> offset_;
  std::vector<size_t> pos_in_from_;  // algebra index -> position within Λe(start)
  std::vector<std::vector<std::vector<std::pair<size_t, Scalar>>>> arrow_action_;  // [arrow][basis] sparse image
};

using PresentationPtr = std::shared_ptr<const ProjectivePresentation>;

PresentationPtr make_presentation(AlgebraPtr alg, std::vector<int> tops);

struct SubmodulePoint {
  PresentationPtr pres;
  Subspace space;
  bool inside_radical = false;

  size_t quotient_dim() const { return pres->dim() - space.dim(); }
};

bool is_arrow_stable(const ProjectivePresentation& pres, const Subspace& s);
// Smallest submodule containing the generators.
SubmodulePoint submodule_spin(PresentationPtr pres, const std::vector<Vec>& generators);
// Wraps an arrow-stable subspace; throws std::invalid_argument otherwise.
SubmodulePoint make_point(PresentationPtr pres, Subspace space);
// Vertex-homogeneous generators of C, one per top element of C.
std::vector<Vec> submodule_generators(const SubmodulePoint& c);

// Vertex-graded representation: one block per vertex, one matrix per arrow
// (rows: target block, columns: source block). Global coordinates are the
// concatenation of the vertex blocks.
struct Representation {
  AlgebraPtr alg;
  std::vector<size_t> dims;
  std::vector<Matrix> arrows;

  size_t total() const;
  size_t offset(int v) const;
  Vec act_arrow(int a, const Vec& x) const;
  Vec act_path(const Path& p, const Vec& x) const;
  Vec act(const Vec& lambda, const Vec& x) const;
  Matrix global_arrow(int a) const;
  // Subspace of vectors supported in the block of vertex v.
  std::vector<size_t> graded_dims(const Subspace& s) const;
  // Basis vectors of a graded subspace lying in the block of v.
  std::vector<Vec> graded_basis(const Subspace& s, int v) const;
  // J·U = Σ_a a·U.
  Subspace radical_of(const Subspace& u) const;
  Subspace whole() const;
};

// P/C with coset representatives the non-pivot basis elements of C.
// Coordinates are vertex-major; within a vertex, path-basis order.
struct QuotientRepresentation {
  SubmodulePoint point;
  Representation rep;
  std::vector<size_t> reps;            // P basis index of each coordinate
  std::vector<size_t> coordinate_of;   // P basis index -> coordinate or npos
  std::vector<Vec> top_images;

  Vec project(const Vec& p_elem) const;
  Vec lift(const Vec& m) const;
  std::vector<size_t> dimension_vector() const { return rep.dims; }
  // Image of JP.
  Subspace radical() const { return rep.radical_of(rep.whole()); }
  // Matrix on M induced by a P-endomorphism preserving C.
  Matrix induced(const std::vector<Vec>& images) const;
};

QuotientRepresentation quotient_rep(const SubmodulePoint& c);

struct SemisimpleSequence {
  std::vector<std::vector<size_t>> layers;
  friend bool operator==(const SemisimpleSequence& a, const SemisimpleSequence& b) { return a.layers == b.layers; }
};

SemisimpleSequence radical_layering(const Representation& m);
inline SemisimpleSequence radical_layering(const QuotientRepresentation& m) { return radical_layering(m.rep); }

enum class Dominance { Equal, StrictlyLess, StrictlyGreater, Incomparable };
const char* to_string(Dominance d);
// Throws std::invalid_argument on total or top mismatch.
Dominance dominance_compare(const SemisimpleSequence& a, const SemisimpleSequence& b);

struct HomSpace {
  size_t dim = 0;
  std::vector<Matrix> basis;  // global matrices, block diagonal by vertex
};

// Hom_Λ(M, N), solved through the presentation of M: a map is fixed by the
// images n_r ∈ e(r)N of the tops, subject to C_M ↦ 0. When `within` is given
// the images are confined to that submodule of N.
HomSpace hom_space(const QuotientRepresentation& m, const QuotientRepresentation& n,
                   const std::optional<Subspace>& within = std::nullopt);
size_t hom_dim(const QuotientRepresentation& m, const QuotientRepresentation& n,
               const std::optional<Subspace>& within = std::nullopt);
// Hom_Λ(M, N) by solving φ_t(a) M_a = N_a φ_s(a) over all arrows.
HomSpace hom_space_by_commutation(const Representation& m, const Representation& n);
// dim Hom(P, X) = Σ_r dim e(r)X for X with the given vertex dimensions.
size_t hom_from_projective_dim(const ProjectivePresentation& pres, const std::vector<size_t>& dims);

// Basis of {h ∈ End_Λ(P) : h(C) ⊆ C'}; each element is the list of images of z_r.
std::vector<std::vector<Vec>> hom_into(const SubmodulePoint& c, const SubmodulePoint& c_target);
// Coefficient of z_s in h(z_r): the induced map on the top, t×t.
Matrix top_matrix(const ProjectivePresentation& pres, const std::vector<Vec>& images);

struct IsoResult {
  bool isomorphic = false;
  bool probabilistic_negative = false;
  std::string reason;
  // On success: an automorphism h of P with h(C) = C', as images of z_r
  // (in C's presentation).
  std::vector<Vec> witness;
};

IsoResult iso_test(const SubmodulePoint& c, const SubmodulePoint& c2, uint64_t seed = 0);

// Same module, tops reordered: new top r is old top perm[r].
SubmodulePoint permute_tops(const SubmodulePoint& c, const std::vector<size_t>& perm);
SubmodulePoint direct_sum(const std::vector<SubmodulePoint>& parts);
// Minimal presentation of the submodule of M generated by `generators`
// (vectors in M coordinates, each supported at one vertex and independent
// modulo the radical of the generated submodule).
SubmodulePoint present_submodule(const QuotientRepresentation& m, const std::vector<Vec>& generators);
// Minimal presentation of a graded arrow-stable subspace U of M.
SubmodulePoint present_subspace(const QuotientRepresentation& m, const Subspace& u);

// Indecomposable summands, each minimally presented.
std::vector<SubmodulePoint> decompose_summands(const SubmodulePoint& c, uint64_t seed = 0);

// Jacobson radical of a matrix algebra given by a basis of n×n matrices.
// Uses the trace form when the characteristic is 0 or exceeds n; otherwise
// enumerates small finite algebras; otherwise throws NeedsSplitInput.
Subspace matrix_algebra_radical(const std::vector<Matrix>& basis, const Field& f);

Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, size_t n);

}  // namespace degenlab
