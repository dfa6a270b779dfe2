// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "degenlab.h"
#include "json_schema.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return slurp(std::string(DEGENLAB_DATA_DIR) + "/" + name); }

using Ctx = std::unique_ptr<dgl_context, decltype(&dgl_context_free)>;

Ctx loaded(const std::string& alg, const std::string& mod, uint64_t seed = 0) {
  Ctx c(dgl_context_new(), dgl_context_free);
  REQUIRE(c);
  REQUIRE(dgl_set_seed(c.get(), seed) == DGL_OK);
  REQUIRE(dgl_load_algebra(c.get(), data(alg).c_str()) == DGL_OK);
  REQUIRE(dgl_load_module(c.get(), data(mod).c_str()) == DGL_OK);
  return c;
}

const schema_check::Validator& validator() {
  static const schema_check::Validator v(json::parse(slurp(DEGENLAB_SCHEMA)));
  return v;
}

void expect_valid(const std::string& text) {
  auto errors = validator().validate(json::parse(text));
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

const std::pair<const char*, const char*> kCases[] = {
    {"loop.alg", "loop_jz2.mod"},   {"a2.alg", "a2_jz2.mod"},       {"kronecker.alg", "kronecker_split.mod"},
    {"two_cycle.alg", "two_cycle_mixed.mod"}, {"six_loops.alg", "six_loops_d.mod"},
};

}  // namespace

TEST_CASE("status codes") {
  Ctx c(dgl_context_new(), dgl_context_free);
  CHECK(dgl_check(c.get(), DGL_MODE_FULL) == DGL_MISSING_INPUT);
  CHECK(std::string(dgl_last_error(c.get())) == "no module loaded");
  CHECK(dgl_load_module(c.get(), "[module]\ntop 1\n") == DGL_MISSING_INPUT);
  CHECK(dgl_set_field(c.get(), "fp:4") == DGL_PARSE_ERROR);
  CHECK(dgl_set_field(c.get(), "fp:7") == DGL_OK);
  CHECK(std::string(dgl_last_error(c.get())).empty());

  const std::string bad = "[quiver]\nvertex 1\narrow w 1 1\n[relations]\nw**\n";
  CHECK(dgl_load_algebra(c.get(), bad.c_str()) == DGL_PARSE_ERROR);
  CHECK(std::string(dgl_last_error(c.get())).find("line 5") != std::string::npos);

  auto ok = loaded("loop.alg", "loop_jz2.mod");
  CHECK(dgl_normal_form(ok.get()) == DGL_PRECONDITION);
  CHECK(dgl_limit(ok.get()) == DGL_MISSING_INPUT);
  CHECK(dgl_load_curve(ok.get(), data("loop_unipotent.curve").c_str()) == DGL_OK);
  REQUIRE(dgl_limit(ok.get()) == DGL_OK);
  CHECK(std::string(dgl_result(ok.get())).find("gen 1 a*w z1") != std::string::npos);

  CHECK(dgl_check(nullptr, DGL_MODE_FULL) == DGL_INTERNAL);
  CHECK(std::string(dgl_status_name(DGL_NEEDS_SPLIT_INPUT)) == "NEEDS_SPLIT_INPUT");
  CHECK(std::string(dgl_version()) == "1.0.0");
}

TEST_CASE("decomposition depends on square roots of -1") {
  // End(M) ≅ K[x]/(x^2 + 1): a field over F_3, split over F_5 (2^2 = -1).
  const std::string alg = "[quiver]\nvertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\n";
  const std::string mod = "[module]\ntop 1\ntop 1\ngen a z1 + b z2\ngen b z1 - a z2\n";
  for (const char* field : {"fp:3", "fp:5"}) {
    CAPTURE(field);
    Ctx c(dgl_context_new(), dgl_context_free);
    REQUIRE(dgl_set_field(c.get(), field) == DGL_OK);
    REQUIRE(dgl_load_algebra(c.get(), alg.c_str()) == DGL_OK);
    REQUIRE(dgl_load_module(c.get(), mod.c_str()) == DGL_OK);
    const dgl_status s = dgl_decompose(c.get());
    if (std::string(field) == "fp:3") {
      CHECK(s == DGL_NEEDS_SPLIT_INPUT);
    } else {
      REQUIRE(s == DGL_OK);
      CHECK(std::string(dgl_result(c.get())).find("summand 2 of 2") != std::string::npos);
    }
  }
}

TEST_CASE("reports conform to the schema") {
  for (auto [alg, mod] : kCases) {
    CAPTURE(mod);
    auto c = loaded(alg, mod);
    for (dgl_mode m : {DGL_MODE_FULL, DGL_MODE_UNIPOTENT, DGL_MODE_TORUS}) {
      REQUIRE(dgl_check(c.get(), m) == DGL_OK);
      expect_valid(dgl_result(c.get()));
    }
    REQUIRE(dgl_invariants(c.get()) == DGL_OK);
    expect_valid(dgl_result(c.get()));
  }
}

TEST_CASE("the validator rejects malformed reports") {
  auto c = loaded("a2.alg", "a2_jz2.mod");
  REQUIRE(dgl_check(c.get(), DGL_MODE_FULL) == DGL_OK);
  json good = json::parse(dgl_result(c.get()));
  CHECK(validator().validate(good).empty());
  json extra = good;
  extra["surprise"] = 1;
  CHECK_FALSE(validator().validate(extra).empty());
  json missing = good;
  missing.erase("m");
  CHECK_FALSE(validator().validate(missing).empty());
  json negative = good;
  negative["m"] = -1;
  CHECK_FALSE(validator().validate(negative).empty());
  json bad_mode = good;
  bad_mode["mode"] = "sideways";
  CHECK_FALSE(validator().validate(bad_mode).empty());
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto [alg, mod] : kCases) {
    CAPTURE(mod);
    std::string first, second;
    for (std::string* out : {&first, &second}) {
      auto c = loaded(alg, mod, 17);
      REQUIRE(dgl_check(c.get(), DGL_MODE_FULL) == DGL_OK);
      *out = dgl_result(c.get());
      REQUIRE(dgl_invariants(c.get()) == DGL_OK);
      *out += dgl_result(c.get());
    }
    CHECK(first == second);
  }
}

TEST_CASE("report content for the closed non-split orbit") {
  auto c = loaded("a2.alg", "a2_jz2.mod");
  REQUIRE(dgl_check(c.get(), DGL_MODE_FULL) == DGL_OK);
  json r = json::parse(dgl_result(c.get()));
  CHECK(r["fully_maximal"] == true);
  CHECK(r["m"] == 0);
  CHECK(r["orbit_dim"] == 1);
  CHECK(r["certificate"]["kind"] == "decomposition");
  CHECK(r["certificate"]["flag_dim"] == 1);

  auto d = loaded("loop.alg", "loop_jz2.mod");
  REQUIRE(dgl_check(d.get(), DGL_MODE_TORUS) == DGL_OK);
  json t = json::parse(dgl_result(d.get()));
  CHECK(t["verdicts"]["torus_maximal"] == false);
  CHECK(t["certificate"]["witness"] == "torque");
  CHECK(t["certificate"]["limit_isomorphic"] == false);
}

TEST_CASE("compiled variety and charts through the C interface") {
  Ctx c(dgl_context_new(), dgl_context_free);
  REQUIRE(dgl_compile_variety(c.get(), "x0*x2 - x1^2", -1, 0) == DGL_OK);
  const std::string text = dgl_result(c.get());
  CHECK(text.find("a2_2*a1_0") != std::string::npos);
  CHECK(dgl_load_algebra(c.get(), text.c_str()) == DGL_OK);
  CHECK(dgl_compile_variety(c.get(), "x0*x2 - x1", -1, 0) == DGL_PRECONDITION);
  CHECK(dgl_compile_variety(c.get(), "x0*+x2", -1, 0) == DGL_PARSE_ERROR);

  auto k = loaded("kronecker.alg", "kronecker_split.mod");
  REQUIRE(dgl_charts(k.get(), nullptr, 0) == DGL_OK);
  CHECK(std::string(dgl_result(k.get())).find("(contains the module)") != std::string::npos);
  CHECK(dgl_charts(k.get(), "2,x", 0) == DGL_PARSE_ERROR);
  CHECK(dgl_charts(k.get(), "2", 0) == DGL_PRECONDITION);
}
