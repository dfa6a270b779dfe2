// Command-line front end over the C interface.
// Exit codes: 0 success, 1 computation refused (split field needed, precondition,
// internal error), 2 unreadable or malformed input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "degenlab.h"

namespace {

struct Job {
  std::string algebra, module, curve, field, out, dims, mode = "full";
  std::vector<std::string> polys;
  uint64_t seed = 0;
  int m = -1, levels = 0;
  bool closed = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(dgl_status s) {
  if (s == DGL_OK) return 0;
  return s == DGL_PARSE_ERROR ? 2 : 1;
}

using Context = std::unique_ptr<dgl_context, decltype(&dgl_context_free)>;

// Runs one step; on failure prints the diagnostic and returns the exit code.
int step(dgl_context* ctx, dgl_status s, const std::string& what) {
  if (s == DGL_OK) return 0;
  std::cerr << "degenlab: " << what << ": " << dgl_status_name(s) << ": " << dgl_last_error(ctx) << "\n";
  return exit_code(s);
}

int emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(job.out, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "degenlab: cannot write '" << job.out << "'\n";
    return 1;
  }
  return 0;
}

int run(const std::string& command, const Job& job) {
  Context ctx(dgl_context_new(), dgl_context_free);
  if (!ctx) return 1;
  dgl_context* c = ctx.get();
  if (int e = step(c, dgl_set_seed(c, job.seed), "seed")) return e;
  if (!job.field.empty())
    if (int e = step(c, dgl_set_field(c, job.field.c_str()), "--field")) return e;

  if (command == "compile-variety") {
    std::string joined;
    for (const auto& p : job.polys) joined += (joined.empty() ? "" : ";") + p;
    if (int e = step(c, dgl_compile_variety(c, joined.c_str(), job.m, job.levels), command)) return e;
    return emit(job, dgl_result(c));
  }

  if (job.algebra.empty() || job.module.empty()) {
    std::cerr << "degenlab: " << command << " needs --algebra and --module\n";
    return 2;
  }
  if (int e = step(c, dgl_load_algebra(c, read_file(job.algebra).c_str()), job.algebra)) return e;
  if (int e = step(c, dgl_load_module(c, read_file(job.module).c_str()), job.module)) return e;

  dgl_status s = DGL_OK;
  if (command == "check") {
    dgl_mode mode = job.mode == "unipotent" ? DGL_MODE_UNIPOTENT : job.mode == "torus" ? DGL_MODE_TORUS : DGL_MODE_FULL;
    s = dgl_check(c, mode);
  } else if (command == "invariants") {
    s = dgl_invariants(c);
  } else if (command == "limit") {
    if (job.curve.empty()) {
      std::cerr << "degenlab: limit needs --curve\n";
      return 2;
    }
    if (int e = step(c, dgl_load_curve(c, read_file(job.curve).c_str()), job.curve)) return e;
    s = dgl_limit(c);
  } else if (command == "normal-form") {
    s = dgl_normal_form(c);
  } else if (command == "charts") {
    s = dgl_charts(c, job.dims.empty() ? nullptr : job.dims.c_str(), job.closed ? 1 : 0);
  } else if (command == "decompose") {
    s = dgl_decompose(c);
  }
  if (int e = step(c, s, command)) return e;
  return emit(job, dgl_result(c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-stable degenerations of modules over path algebras with relations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dgl_version()));
  Job job;

  auto common = [&](CLI::App* sub, bool module_input) {
    if (module_input) {
      sub->add_option("--algebra", job.algebra, "algebra file ([quiver], [relations], [options])")->required();
      sub->add_option("--module", job.module, "module file ([module]: top and gen lines)")->required();
    }
    sub->add_option("--seed", job.seed, "seed for randomized isomorphism tests");
    sub->add_option("--field", job.field, "working field: rational or fp:P");
    sub->add_option("--out", job.out, "write the result here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "decide degeneration-maximality; JSON report");
  common(check, true);
  check->add_option("--mode", job.mode, "full, unipotent or torus")
      ->check(CLI::IsMember({"full", "unipotent", "torus"}));
  common(app.add_subcommand("invariants", "m, orbit dimension and layering; JSON"), true);
  auto* limit = app.add_subcommand("limit", "flat limit of a curve applied to the module");
  common(limit, true);
  limit->add_option("--curve", job.curve, "curve file ([curve] section)")->required();
  common(app.add_subcommand("normal-form", "normal form of a maximal point"), true);
  auto* charts = app.add_subcommand("charts", "path bases and affine chart equations for the module's top");
  common(charts, true);
  charts->add_option("--dims", job.dims, "dimension vector, comma separated (default: that of the module)");
  charts->add_flag("--truncation-closed", job.closed, "only path bases closed under initial subpaths");
  common(app.add_subcommand("decompose", "indecomposable summands"), true);
  auto* compile = app.add_subcommand("compile-variety", "algebra whose moduli space is the given projective variety");
  common(compile, false);
  compile->add_option("--poly", job.polys, "homogeneous polynomial in x0..xm (repeatable)");
  compile->add_option("--m", job.m, "ambient dimension of P^m (default: from the variables)");
  compile->add_option("--levels", job.levels, "level count L (default: largest degree)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, job);
  } catch (const InputError& e) {
    std::cerr << "degenlab: " << e.what() << "\n";
    return 2;
  }
}
