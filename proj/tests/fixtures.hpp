#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "degenlab/io.hpp"

namespace fixtures {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DEGENLAB_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline degenlab::AlgebraPtr algebra(const std::string& name,
                                    const std::optional<degenlab::Field>& f = std::nullopt) {
  return degenlab::parse_algebra(read_data(name), f);
}

inline degenlab::SubmodulePoint module(const degenlab::AlgebraPtr& alg, const std::string& name) {
  return degenlab::parse_module(alg, read_data(name));
}

// Module text from inline lines, e.g. point(alg, "top 1\ntop 1\ngen a z2").
inline degenlab::SubmodulePoint point(const degenlab::AlgebraPtr& alg, const std::string& body) {
  return degenlab::parse_module(alg, "[module]\n" + body + "\n");
}

inline degenlab::Vec elem(const degenlab::SubmodulePoint& c, const std::string& text) {
  return degenlab::parse_element(*c.pres, text);
}

}  // namespace fixtures
