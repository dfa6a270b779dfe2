#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/field.hpp"
#include "degenlab/linalg.hpp"

namespace degenlab {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  int add_vertex(const std::string& id);
  int add_arrow(const std::string& name, const std::string& source, const std::string& target);

  size_t vertex_count() const { return vertices_.size(); }
  size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_id(int v) const { return vertices_.at(static_cast<size_t>(v)); }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<size_t>(a)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // -1 when absent.
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_lookup_, arrow_lookup_;
};

// A path of the quiver. `arrows` is in traversal order: arrows[0] is applied
// first, so the written product reads arrows.back() * ... * arrows[0].
struct Path {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;

  size_t length() const { return arrows.size(); }
  static Path trivial(int v) { return Path{v, v, {}}; }
  friend bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.end == b.end && a.arrows == b.arrows;
  }
};

// First q, then p.
Path concat(const Path& p, const Path& q);

// Written form: "a*w" for w then a; trivial paths print as "e<vertex id>".
std::string path_str(const Quiver& q, const Path& p);

// Parses a written "*"-composed path; "e" or "e<vertex>" is a trivial path
// (bare "e" needs `start`). Throws std::invalid_argument on unknown arrows or
// non-composable products; `position` locates the offending name in `text`.
Path parse_path(const Quiver& q, const std::string& text, std::optional<int> start = std::nullopt);

struct PathError : std::invalid_argument {
  PathError(const std::string& msg, size_t pos) : std::invalid_argument(msg), position(pos) {}
  size_t position;
};

// Order on paths: length, then vertex for trivial paths, then lexicographic
// on the written arrow-name sequence. Returns <0, 0, >0.
int path_compare(const Quiver& q, const Path& a, const Path& b);

struct RelationTerm {
  Scalar coeff;
  Path path;
};

struct RelationElement {
  std::vector<RelationTerm> terms;
};

struct AlgebraOptions {
  // Length bound for normal forms; chosen automatically when unset.
  std::optional<int> max_len;
  Field field = Field::rationals();
  // Permit relations containing single arrows (needed for degree-one
  // polynomials in compiled varieties). Off for ordinary input.
  bool allow_linear = false;
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse algebra element: (basis index, coefficient) pairs, indices ascending.
using SparseVec = std::vector<std::pair<size_t, Scalar>>;

class PathAlgebra {
 public:
  static PathAlgebra build(Quiver quiver, std::vector<RelationElement> relations, const AlgebraOptions& opts = {});

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<RelationElement>& relations() const { return relations_; }
  int max_len() const { return max_len_; }
  size_t dim() const { return basis_.size(); }
  size_t vertex_count() const { return quiver_.vertex_count(); }

  const Path& basis_path(size_t k) const { return basis_[k]; }
  const std::vector<Path>& basis() const { return basis_; }
  // Basis indices of paths starting at `from` (the basis of Λe_from), in path order.
  const std::vector<size_t>& basis_from(int from) const { return from_[static_cast<size_t>(from)]; }
  // Basis indices of paths from i to j (e_j Λ e_i); length >= 1 when radical_only.
  std::vector<size_t> basis_between(int i, int j, bool radical_only) const;
  std::optional<size_t> basis_index(const Path& p) const;

  // Normal form of an arbitrary path (zero beyond max_len or when killed).
  const SparseVec& reduce(const Path& p) const;
  Vec element(const Path& p) const;
  // Product of basis elements: basis_path(i) * basis_path(j) (first j, then i).
  const SparseVec& product(size_t i, size_t j) const { return products_[i * basis_.size() + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec idempotent(int v) const;
  Vec unit() const;

  // Smallest k with J^k = 0.
  int loewy_length() const { return loewy_length_; }
  // J^1, ..., J^{L}: J^l spanned by basis paths of length >= l.
  std::vector<Subspace> radical_series() const;
  // Basis of e_j Λ e_i as a subspace of Λ.
  Subspace idempotent_component(int i, int j, bool radical_only) const;

  std::string element_str(const Vec& a) const;

 private:
  Quiver quiver_;
  Field field_;
  std::vector<RelationElement> relations_;
  int max_len_ = 0;
  std::vector<Path> basis_;
  std::vector<std::vector<size_t>> from_;
  std::map<std::pair<int, std::vector<int>>, size_t> index_;
  std::map<std::pair<int, std::vector<int>>, SparseVec> normal_forms_;
  std::vector<SparseVec> products_;
  int loewy_length_ = 0;
};

// Splits a relation into its (source, target) uniform components, merging
// repeated paths and dropping zero terms.
std::vector<RelationElement> split_uniform(const RelationElement& r);

}  // namespace degenlab
