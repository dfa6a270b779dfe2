#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "degenlab/modules.hpp"

namespace degenlab {

// Σ_e τ^e v_e, sparse by exponent; zero coefficients are never stored.
using LaurentVec = std::map<int, Vec>;

struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A family g_τ of Λ-linear endomorphisms of P, fixed by the images of the
// top elements: images[r] = g_τ(z_r) with Laurent coefficients in τ.
struct CurveFamily {
  PresentationPtr pres;
  std::vector<LaurentVec> images;

  LaurentVec apply(const Vec& v) const;
  // Images of z_r at a nonzero value of τ.
  std::vector<Vec> at(const Scalar& tau) const;
  // det g_τ ≠ 0 at one of two seeded random values.
  bool generically_invertible(uint64_t seed = 0) const;
};

// g_τ = id for all τ.
CurveFamily constant_curve(PresentationPtr pres);
// Arbitrary images; each coefficient of images[r] must lie in e(r)P.
CurveFamily make_curve(PresentationPtr pres, std::vector<LaurentVec> images);
// g_τ = id + τ f with f(z_r) = f_images[r]; requires f(P) ⊆ JP.
CurveFamily make_unipotent_curve(PresentationPtr pres, const std::vector<Vec>& f_images);
// g_τ(y_r) = τ^{w_r} y_r for a sequence of top elements y_r, rewritten in
// the z-basis.
CurveFamily make_torus_curve(PresentationPtr pres, const std::vector<Vec>& top_basis, const std::vector<int>& weights);

// y_r ∈ e(r)P and the y_r are independent modulo JP; throws
// std::invalid_argument otherwise.
void validate_top_basis(const ProjectivePresentation& pres, const std::vector<Vec>& top_basis);
// Images of z_r under the inverse of the automorphism z_r ↦ images[r].
std::vector<Vec> inverse_images(const ProjectivePresentation& pres, const std::vector<Vec>& images);
// h(C) for an automorphism h given on top elements.
SubmodulePoint transform(const SubmodulePoint& c, const std::vector<Vec>& images);

// lim_{τ→∞} g_τ(C), by saturating a polynomial basis at s = 1/τ.
SubmodulePoint flat_limit(const CurveFamily& curve, const SubmodulePoint& c);

// The curve z_r ↦ z_r (r selected), z_r ↦ τ z_r (otherwise).
CurveFamily split_curve(PresentationPtr pres, const std::vector<size_t>& selected);
// JU = U ∩ JM for U the image of ⊕_{r selected} Λz_r in M = P/C.
bool top_stably_embedded(const SubmodulePoint& c, const std::vector<size_t>& selected);
// (C ∩ Q) ⊕ π(C) for Q = ⊕_{selected} Λz_r and π the projection along Q.
// Throws std::invalid_argument unless the selection is top-stably embedded.
SubmodulePoint split_by_submodule(const SubmodulePoint& c, const std::vector<size_t>& selected);
// Iterated splitting along a top-element sequence: in y-coordinates, step k
// keeps y_1..y_k fixed and scales the rest, so the result is in the torus
// orbit closure and equals ⊕_r (C' ∩ Λy_r).
SubmodulePoint full_local_split(const SubmodulePoint& c, const std::vector<Vec>& top_basis);

}  // namespace degenlab
