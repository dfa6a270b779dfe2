#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/modules.hpp"
#include "degenlab/poly.hpp"

namespace degenlab {

// A set of basis elements p z_r of P (indices into the P basis, ascending)
// containing every z_r, with counts[i] of them ending at vertex i.
struct PathBasis {
  std::vector<size_t> elements;
  std::vector<size_t> counts;

  bool contains(size_t k) const;
  friend bool operator==(const PathBasis& a, const PathBasis& b) { return a.elements == b.elements; }
};

// Throws std::invalid_argument unless σ contains every z_r and indexes P.
void validate_path_basis(const ProjectivePresentation& pres, const PathBasis& sigma);

// All path bases with the given dimension vector, in lexicographic order of
// the chosen elements per vertex. With `truncation_closed`, every initial
// subpath of a member must be a member too.
std::vector<PathBasis> enumerate_path_bases(const ProjectivePresentation& pres, const std::vector<size_t>& d,
                                            bool truncation_closed = false);

// P = C ⊕ span σ.
bool schu_membership(const SubmodulePoint& c, const PathBasis& sigma);

// "a*w.z2", or "a*w" when P has a single top.
std::string path_element_str(const ProjectivePresentation& pres, size_t k);

// Affine chart Schu(σ) ∩ Grass^T_d. A point is fixed by q ≡ Σ_b x[q;b] b mod C
// for q ∉ σ, b ∈ σ of positive length with the end vertex of q. Unknowns that
// occur linearly with a constant coefficient are eliminated; `equations` are
// in the remaining (free) unknowns.
struct ChartSystem {
  PresentationPtr pres;
  PathBasis basis;
  std::vector<std::pair<size_t, size_t>> unknowns;  // (q, b)
  std::vector<std::string> names;
  std::vector<size_t> free_vars;
  std::vector<std::optional<Polynomial>> eliminated;  // expression in the free unknowns
  std::vector<Polynomial> equations;

  // "vars: ..." followed by one polynomial per line.
  std::string text() const;
};

ChartSystem chart_equations(PresentationPtr pres, const PathBasis& sigma);

// Values of all unknowns at a point of the chart; throws std::invalid_argument
// when C ∉ Schu(σ).
std::vector<Scalar> chart_coordinates(const SubmodulePoint& c, const ChartSystem& sys);
// The point for given values of the free unknowns, or nullopt when the
// equations fail there.
std::optional<SubmodulePoint> chart_point(const ChartSystem& sys, const std::vector<Scalar>& free_values);

}  // namespace degenlab
