#include "degenlab/report.hpp"

namespace degenlab {

namespace {

using nlohmann::json;

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json layering_json(const SemisimpleSequence& s) {
  json out = json::array();
  for (const auto& layer : s.layers) out.push_back(layer);
  return out;
}

json tops_json(const ProjectivePresentation& P) {
  json out = json::array();
  for (int v : P.tops()) out.push_back(P.algebra().quiver().vertex_id(v));
  return out;
}

json elements_json(const ProjectivePresentation& P, const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(P.element_str(v));
  return out;
}

json point_json(const SubmodulePoint& c) {
  return json{{"tops", tops_json(*c.pres)}, {"generators", elements_json(*c.pres, submodule_generators(c))}};
}

json ideal_json(const PathAlgebra& alg, const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(alg.element_str(v));
  return out;
}

json witness_json(const Witness& w) {
  json j{{"kind", "curve"},
         {"witness", to_string(w.kind)},
         {"curve", curve_to_json(w.curve)},
         {"limit", point_json(w.limit)},
         {"limit_isomorphic", w.limit_isomorphic},
         {"probabilistic", w.probabilistic},
         {"detail", w.detail}};
  if (!w.top_basis.empty()) {
    j["top_basis"] = elements_json(*w.curve.pres, w.top_basis);
    j["weights"] = w.weights;
  }
  return j;
}

json decomposition_json(const SubmodulePoint& c, const LocalDecomposition& d, const std::optional<ParabolicityResult>& par) {
  json ideals = json::array();
  for (const auto& s : d.ideals) ideals.push_back(ideal_json(c.pres->algebra(), s));
  json j{{"kind", "decomposition"}, {"top_basis", elements_json(*c.pres, d.top_basis)}, {"ideals", ideals}};
  if (par) {
    json flags = json::array();
    for (const auto& f : par->flags)
      flags.push_back({{"vertex", c.pres->algebra().quiver().vertex_id(f.vertex)},
                       {"jumps", f.jumps},
                       {"variety_dim", f.variety_dim}});
    j["flags"] = flags;
    j["flag_dim"] = par->flag_dim();
  }
  return j;
}

}  // namespace

const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::Full: return "full";
    case CheckMode::Unipotent: return "unipotent";
    case CheckMode::Torus: return "torus";
  }
  return "?";
}

json curve_to_json(const CurveFamily& curve) {
  json images = json::array();
  for (const auto& lv : curve.images) {
    json terms = json::array();
    for (const auto& [e, v] : lv) terms.push_back({{"exponent", e}, {"element", curve.pres->element_str(v)}});
    images.push_back(terms);
  }
  return json{{"images", images}};
}

json report_to_json(const SubmodulePoint& c, const DegenerationReport& r, CheckMode mode, uint64_t seed) {
  json j;
  j["command"] = "check";
  j["mode"] = to_string(mode);
  j["seed"] = seed;
  j["field"] = r.field;
  j["tops"] = tops_json(*c.pres);
  j["dimension_vector"] = r.dimension_vector;
  j["radical_layering"] = layering_json(r.layering);
  j["m"] = r.m;
  j["t"] = r.t;
  j["s"] = r.s ? json(*r.s) : json(nullptr);
  j["orbit_dim"] = r.orbit_dim;
  j["verdicts"] = {{"unipotent_maximal", opt_bool(r.unipotent_maximal)},
                   {"torus_maximal", opt_bool(r.torus_maximal)},
                   {"fully_maximal", opt_bool(r.fully_maximal)}};
  j["fully_maximal"] = opt_bool(r.fully_maximal);
  if (r.parabolic) {
    j["stabilizer"] = {{"parabolic", r.parabolic->parabolic},
                       {"algebra_dim", r.parabolic->algebra_dim},
                       {"block_triangular_dim", r.parabolic->block_triangular_dim}};
  } else {
    j["stabilizer"] = nullptr;
  }
  if (r.witness) j["certificate"] = witness_json(*r.witness);
  else if (r.decomposition) j["certificate"] = decomposition_json(c, *r.decomposition, r.parabolic);
  else j["certificate"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

json invariants_to_json(const SubmodulePoint& c, uint64_t seed) {
  const auto q = quotient_rep(c);
  std::vector<Vec> z;
  for (size_t r = 0; r < c.pres->top_count(); ++r) z.push_back(c.pres->z(r));
  json j;
  j["command"] = "invariants";
  j["seed"] = seed;
  j["field"] = c.pres->field().name();
  j["tops"] = tops_json(*c.pres);
  j["dimension_vector"] = q.dimension_vector();
  j["radical_layering"] = layering_json(radical_layering(q));
  j["t"] = c.pres->top_count();
  j["m"] = invariant_m(c);
  j["unipotent_tangent_rank"] = unipotent_tangent_rank(c);
  j["orbit_dim"] = orbit_dimension(c);
  j["torus_orbit_dim"] = torus_orbit_dimension(c, z);
  j["split"] = is_split(c);
  j["notes"] = json::array();
  try {
    j["s"] = decompose_summands(c, seed).size();
  } catch (const NeedsSplitInput& e) {
    j["s"] = nullptr;
    j["notes"].push_back(std::string("summand count unavailable: ") + e.what());
  }
  return j;
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace degenlab
