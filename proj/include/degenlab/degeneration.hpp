#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenlab/curves.hpp"
#include "degenlab/modules.hpp"

namespace degenlab {

// An operation was called on an input outside its domain (C ⊄ JP, a
// non-maximal point for the normal form, a witness mode that does not apply).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// dim Hom(P, JP/C) − dim Hom(P/C, JP/C).
size_t invariant_m(const SubmodulePoint& c);
// Rank of Hom_Λ(P, JP) → Hom_K(C, P/C), f ↦ (c ↦ f(c) mod C).
size_t unipotent_tangent_rank(const SubmodulePoint& c);
// dim Hom(P, P/C) − dim End(P/C); throws std::logic_error when the tangent
// rank of End_Λ(P) → Hom_K(C, P/C) disagrees.
size_t orbit_dimension(const SubmodulePoint& c);
// Rank of the diagonal Lie action a ↦ (c ↦ θ_a(c) mod C), θ_a scaling y_r by a_r.
size_t torus_orbit_dimension(const SubmodulePoint& c, const std::vector<Vec>& top_basis);

// φ ∈ ⊕_i M_{t_i} with φ̃(C) ⊆ C, where φ̃(z_r) = Σ_s φ_{sr} z_s over tops
// at the same vertex. Matrices are t×t and vanish across vertices.
struct StabilizerAlgebra {
  std::vector<Matrix> basis;
  size_t dim() const { return basis.size(); }
};
StabilizerAlgebra stabilizer_algebra(const SubmodulePoint& c);

// Flag in the span of the tops at one vertex, in coordinates of those tops.
struct VertexFlag {
  int vertex = 0;
  std::vector<size_t> tops;        // indices r with e(r) = vertex
  std::vector<Subspace> members;   // strictly increasing, last = whole
  std::vector<size_t> jumps;       // s_1, ..., s_u
  size_t variety_dim = 0;          // Σ_{j<k} s_j s_k
};

struct ParabolicityResult {
  bool parabolic = false;
  size_t algebra_dim = 0;
  size_t block_triangular_dim = 0;
  std::vector<VertexFlag> flags;
  size_t flag_dim() const;
};
// Flag from the kernel series of rad A; parabolic iff A is the full
// block-triangular algebra of that flag.
ParabolicityResult parabolicity(const SubmodulePoint& c);

// C = ⊕_r C_r y_r with C_r ⊆ Λe(r).
struct LocalDecomposition {
  std::vector<Vec> top_basis;
  std::vector<Subspace> ideals;  // subspaces of Λ
};

enum class WitnessKind { Unipotent, Splitting, Incomparable, Torque, CrossSummand };
const char* to_string(WitnessKind k);

// A curve prescribed by one of the constructive arguments, with its limit.
struct Witness {
  WitnessKind kind = WitnessKind::Unipotent;
  CurveFamily curve;
  // Torus-type witnesses: the top-element sequence and weights of the curve.
  std::vector<Vec> top_basis;
  std::vector<int> weights;
  SubmodulePoint limit;
  bool limit_isomorphic = false;
  bool probabilistic = false;  // non-isomorphism rests on random sampling
  std::string detail;
};

// Builds the witness for the named failure mode; throws PreconditionError
// when that mode does not fail on C.
Witness witness_degeneration(const SubmodulePoint& c, WitnessKind mode, uint64_t seed = 0);

bool check_unipotent_maximal(const SubmodulePoint& c);

struct TorusCheck {
  bool maximal = false;
  std::optional<LocalDecomposition> decomposition;
  std::optional<Witness> witness;
};
TorusCheck check_torus_maximal(const SubmodulePoint& c, uint64_t seed = 0);

enum class CheckMode { Full, Unipotent, Torus };

struct DegenerationReport {
  std::string field;
  std::vector<size_t> dimension_vector;
  SemisimpleSequence layering;
  size_t m = 0;
  size_t t = 0;
  std::optional<size_t> s;  // unset when decomposition needs a split field
  size_t orbit_dim = 0;
  std::optional<bool> unipotent_maximal, torus_maximal, fully_maximal;
  std::optional<ParabolicityResult> parabolic;
  std::optional<LocalDecomposition> decomposition;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

DegenerationReport check_maximal(const SubmodulePoint& c, CheckMode mode = CheckMode::Full, uint64_t seed = 0);

// The point of the Aut(T)-orbit of a maximal C with tops grouped by vertex
// and, per vertex, descending ideals. Throws PreconditionError when C is not
// maximal.
SubmodulePoint modulimax_normal_form(const SubmodulePoint& c, uint64_t seed = 0);

// C ∩ Λz_r as a left ideal of Λe(r), inside Λ.
Subspace ideal_of(const SubmodulePoint& c, size_t r);
// C = ⊕_r (C ∩ Λz_r).
bool is_split(const SubmodulePoint& c);

}  // namespace degenlab
