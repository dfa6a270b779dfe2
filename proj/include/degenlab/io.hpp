#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenlab/curves.hpp"
#include "degenlab/modules.hpp"

namespace degenlab {

// line and column are 1-based; 0 when unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t line_no, size_t col);
  size_t line, column;
  std::string message;
};

struct SourceLine {
  size_t number;
  std::string text;
};

// Sectioned text: "[name]" headers, "#" comments, blank lines ignored.
// Known sections: quiver, relations, options, module, curve.
using Sections = std::map<std::string, std::vector<SourceLine>>;
Sections split_sections(const std::string& text);

// Builds Λ from the [quiver], [relations] and [options] sections. A field
// given here overrides the file's `field` option.
AlgebraPtr parse_algebra(const std::string& text, const std::optional<Field>& field = std::nullopt);

// Relation text: rational-coefficient combination of "*"-composed paths.
RelationElement parse_relation(const Quiver& q, const std::string& text, size_t line_no = 0);

// P-element text: terms "<coeff> <path> z<r>" joined by + or -; coefficient
// and path are optional ("z2", "w z1", "-1/2 a*w z1").
Vec parse_element(const ProjectivePresentation& pres, const std::string& text, size_t line_no = 0);

// The [module] section: `top <vertex>` lines, then `gen <element>` lines.
SubmodulePoint parse_module(AlgebraPtr alg, const std::string& text);

// The [curve] section over a given presentation:
//   kind unipotent   with `map z<r> -> <element>` lines (g_τ = id + τ f)
//   kind torus       with `basis <element>` lines and `weights <w1> ... <wt>`
//   kind laurent     with `image z<r> <exponent> -> <element>` lines
CurveFamily parse_curve(PresentationPtr pres, const std::string& text);

std::string relation_str(const Quiver& q, const RelationElement& r);
std::string write_algebra(const Quiver& q, const std::vector<RelationElement>& relations, const AlgebraOptions& opts);
std::string write_algebra(const PathAlgebra& alg);
std::string write_module(const SubmodulePoint& c);

}  // namespace degenlab
