#include "degenlab.h"

#include <optional>
#include <sstream>
#include <string>

#include "degenlab/degeneration.hpp"
#include "degenlab/grass.hpp"
#include "degenlab/io.hpp"
#include "degenlab/report.hpp"
#include "degenlab/variety.hpp"

using namespace degenlab;

struct dgl_context {
  std::optional<Field> field;
  uint64_t seed = 0;
  AlgebraPtr algebra;
  std::optional<SubmodulePoint> point;
  std::optional<CurveFamily> curve;
  std::string result, error;
};

namespace {

struct Missing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
dgl_status guarded(dgl_context* ctx, F&& body) {
  if (!ctx) return DGL_INTERNAL;
  ctx->error.clear();
  try {
    ctx->result = body();
    return DGL_OK;
  } catch (const ParseError& e) {
    ctx->error = e.what();
    return DGL_PARSE_ERROR;
  } catch (const NeedsSplitInput& e) {
    ctx->error = e.what();
    return DGL_NEEDS_SPLIT_INPUT;
  } catch (const Missing& e) {
    ctx->error = e.what();
    return DGL_MISSING_INPUT;
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return DGL_PRECONDITION;
  } catch (const std::exception& e) {
    ctx->error = std::string("internal error: ") + e.what();
    return DGL_INTERNAL;
  }
}

const SubmodulePoint& need_point(const dgl_context* ctx) {
  if (!ctx->point) throw Missing("no module loaded");
  return *ctx->point;
}

std::vector<size_t> parse_dims(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (v < 0 || item.find_first_not_of(" ", pos) != std::string::npos) throw std::invalid_argument("");
      out.push_back(static_cast<size_t>(v));
    } catch (const std::exception&) {
      throw ParseError("bad dimension vector entry '" + item + "'", 0, 0);
    }
  }
  return out;
}

std::string basis_str(const ProjectivePresentation& P, const PathBasis& s) {
  std::string out;
  for (size_t k : s.elements) out += (out.empty() ? "" : ", ") + path_element_str(P, k);
  return "{" + out + "}";
}

}  // namespace

extern "C" {

dgl_context* dgl_context_new(void) {
  try {
    return new dgl_context();
  } catch (...) {
    return nullptr;
  }
}

void dgl_context_free(dgl_context* ctx) { delete ctx; }

const char* dgl_version(void) { return "1.0.0"; }

const char* dgl_status_name(dgl_status s) {
  switch (s) {
    case DGL_OK: return "OK";
    case DGL_PARSE_ERROR: return "PARSE_ERROR";
    case DGL_NEEDS_SPLIT_INPUT: return "NEEDS_SPLIT_INPUT";
    case DGL_PRECONDITION: return "PRECONDITION";
    case DGL_MISSING_INPUT: return "MISSING_INPUT";
    case DGL_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* dgl_last_error(const dgl_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }
const char* dgl_result(const dgl_context* ctx) { return ctx ? ctx->result.c_str() : ""; }

dgl_status dgl_set_field(dgl_context* ctx, const char* spec) {
  return guarded(ctx, [&] {
    try {
      ctx->field = Field::parse(spec ? spec : "");
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0, 0);
    }
    return std::string();
  });
}

dgl_status dgl_set_seed(dgl_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] {
    ctx->seed = seed;
    return std::string();
  });
}

dgl_status dgl_load_algebra(dgl_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    ctx->algebra = parse_algebra(text ? text : "", ctx->field);
    ctx->point.reset();
    ctx->curve.reset();
    return std::string();
  });
}

dgl_status dgl_load_module(dgl_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    if (!ctx->algebra) throw Missing("no algebra loaded");
    ctx->point = parse_module(ctx->algebra, text ? text : "");
    ctx->curve.reset();
    return std::string();
  });
}

dgl_status dgl_load_curve(dgl_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    const auto& c = need_point(ctx);
    ctx->curve = parse_curve(c.pres, text ? text : "");
    return std::string();
  });
}

dgl_status dgl_check(dgl_context* ctx, dgl_mode mode) {
  return guarded(ctx, [&] {
    const auto& c = need_point(ctx);
    CheckMode m = mode == DGL_MODE_UNIPOTENT ? CheckMode::Unipotent
                  : mode == DGL_MODE_TORUS   ? CheckMode::Torus
                                             : CheckMode::Full;
    auto rep = check_maximal(c, m, ctx->seed);
    return dump_report(report_to_json(c, rep, m, ctx->seed));
  });
}

dgl_status dgl_invariants(dgl_context* ctx) {
  return guarded(ctx, [&] { return dump_report(invariants_to_json(need_point(ctx), ctx->seed)); });
}

dgl_status dgl_limit(dgl_context* ctx) {
  return guarded(ctx, [&] {
    const auto& c = need_point(ctx);
    if (!ctx->curve) throw Missing("no curve loaded");
    return write_module(flat_limit(*ctx->curve, c));
  });
}

dgl_status dgl_normal_form(dgl_context* ctx) {
  return guarded(ctx, [&] { return write_module(modulimax_normal_form(need_point(ctx), ctx->seed)); });
}

dgl_status dgl_decompose(dgl_context* ctx) {
  return guarded(ctx, [&] {
    auto parts = decompose_summands(need_point(ctx), ctx->seed);
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
      auto q = quotient_rep(parts[i]);
      out << "# summand " << (i + 1) << " of " << parts.size() << ", dimension vector";
      for (size_t d : q.dimension_vector()) out << ' ' << d;
      out << "\n" << write_module(parts[i]);
    }
    return out.str();
  });
}

dgl_status dgl_charts(dgl_context* ctx, const char* dims, int truncation_closed) {
  return guarded(ctx, [&] {
    const auto& c = need_point(ctx);
    const auto& P = *c.pres;
    std::vector<size_t> d = dims ? parse_dims(dims) : quotient_rep(c).dimension_vector();
    if (d.size() != P.algebra().vertex_count()) throw std::invalid_argument("dimension vector has the wrong length");
    auto bases = enumerate_path_bases(P, d, truncation_closed != 0);
    std::ostringstream out;
    out << "# " << bases.size() << " path bases\n";
    for (size_t i = 0; i < bases.size(); ++i) {
      out << "# chart " << (i + 1) << ": sigma = " << basis_str(P, bases[i]);
      if (!dims) out << (schu_membership(c, bases[i]) ? " (contains the module)" : "");
      out << "\n" << chart_equations(c.pres, bases[i]).text();
    }
    return out.str();
  });
}

dgl_status dgl_compile_variety(dgl_context* ctx, const char* polys, int m, int levels) {
  return guarded(ctx, [&] {
    std::string text = polys ? polys : "";
    ProjectiveVarietyInput in;
    if (ctx->field) in.field = *ctx->field;
    in.levels = levels;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (item.find_first_not_of(" \t") != std::string::npos) parts.push_back(item);
    size_t n = 0;
    for (const auto& p : parts) n = std::max(n, polynomial_variable_count(p));
    if (m >= 0) {
      if (n > static_cast<size_t>(m) + 1) throw ParseError("polynomial uses a variable beyond x" + std::to_string(m), 0, 0);
      in.m = static_cast<size_t>(m);
    } else {
      if (n < 2) throw std::invalid_argument("cannot infer m; give it explicitly");
      in.m = n - 1;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      try {
        in.polys.push_back(parse_polynomial(parts[i], in.m + 1, in.field));
      } catch (const std::invalid_argument& e) {
        throw ParseError("polynomial " + std::to_string(i + 1) + ": " + e.what(), 0, 0);
      }
    }
    auto v = compile_variety(in);
    std::ostringstream out;
    out << "# V(";
    for (size_t i = 0; i < v.polys.size(); ++i) {
      std::vector<std::string> names;
      for (size_t k = 0; k <= v.m; ++k) names.push_back("x" + std::to_string(k));
      out << (i ? ", " : "") << v.polys[i].str(names);
    }
    out << ") in P^" << v.m << "; top S1, dimension vector (";
    for (int l = 0; l <= v.levels; ++l) out << (l ? "," : "") << 1;
    out << ")\n" << v.algebra_text();
    return out.str();
  });
}

}  // extern "C"
