#pragma once

#include <string>
#include <vector>

#include "degenlab/grass.hpp"
#include "degenlab/modules.hpp"
#include "degenlab/poly.hpp"

namespace degenlab {

// V ⊆ P^m cut out by homogeneous polynomials in X_0..X_m. L = 0 means the
// largest degree; it must be given (≥ 1) when there are no polynomials.
struct ProjectiveVarietyInput {
  size_t m = 1;
  std::vector<Polynomial> polys;
  int levels = 0;
  Field field = Field::rationals();
};

// Level quiver 1 → 2 → ... → L+1 with arrows a<r>_<i> (r = 1..L, i = 0..m),
// commutativity relations between consecutive levels, and one relation per
// polynomial. Top S_1, dimension vector (1, ..., 1).
struct CompiledVariety {
  size_t m = 0;
  int levels = 0;
  std::vector<Polynomial> polys;
  Quiver quiver;
  std::vector<RelationElement> commutativity;
  std::vector<RelationElement> poly_relations;
  AlgebraOptions options;
  AlgebraPtr algebra;  // Λ
  AlgebraPtr base;     // Λ_0: commutativity only
  PresentationPtr pres, base_pres;

  std::vector<size_t> dimension_vector() const { return std::vector<size_t>(static_cast<size_t>(levels) + 1, 1); }
  // Algebra file with all relations.
  std::string algebra_text() const;
  // Path α^l_{i_l} ⋯ α^1_{i_1} for indices i_1, ..., i_l.
  Path level_path(const std::vector<size_t>& indices) const;
};

// Throws std::invalid_argument on a zero or inhomogeneous polynomial, a
// variable beyond X_m, or a degree above the level count.
CompiledVariety compile_variety(const ProjectiveVarietyInput& input);

// C(k) = Σ Λ(k_i α^1_j − k_j α^1_i), spun up in Λe_1 (or Λ_0 e_1 when
// `over_base`). Throws std::invalid_argument for k = 0.
SubmodulePoint psi_point(const CompiledVariety& v, const std::vector<Scalar>& k, bool over_base = false);

// Every f_r + I_0 lies in C(k) ⊆ Λ_0 e_1. Throws std::logic_error when this
// disagrees with evaluating the polynomials at k.
bool variety_membership(const CompiledVariety& v, const std::vector<Scalar>& k);

// For k_j = 1: α^l_{i_l}⋯α^1_{i_1} x = k_{i_l}⋯k_{i_1} α^l_j⋯α^1_j x in P/C(k)
// for every index sequence of length ≤ L.
bool dagger_identity_holds(const CompiledVariety& v, const std::vector<Scalar>& k, size_t j = 0, bool over_base = false);

// The chart around k_j = 1: σ = {z, α^1_j z, α^2_j α^1_j z, ...}.
PathBasis variety_chart_basis(const CompiledVariety& v, size_t j = 0);

}  // namespace degenlab
