#include <algorithm>

#include "commands.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/median.hpp"

namespace lrbtool {

using lrb::Json;

const std::vector<std::string>& build_kinds() {
  static const std::vector<std::string> kinds = {"arrangement", "graph-fpc", "median-graph",
                                                 "matroid",     "covectors", "table",
                                                 "braid",       "ranking"};
  return kinds;
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) throw lrb::ParseError("expected a JSON object");
  if (j.contains("kind") && j["kind"].is_string()) {
    const std::string k = j["kind"];
    if (k == "lrb-table") return "table";
    if (std::find(build_kinds().begin(), build_kinds().end(), k) != build_kinds().end()) return k;
  }
  if (j.contains("table")) return "table";
  if (j.contains("forms")) return "arrangement";
  if (j.contains("covectors")) return "covectors";
  if (j.contains("independents")) return "matroid";
  if (j.contains("vertices")) return "graph-fpc";
  if (j.contains("relations")) return "ranking";
  if (j.contains("n")) return "braid";
  throw lrb::ParseError("cannot tell what kind of input this is; pass --kind");
}

namespace {

Json hemisphere_json(const lrb::Hemisphere& h) {
  Json form = Json::array();
  for (const auto& q : h.form) form.push_back(lrb::rational_to_string(q));
  return Json{{"form", form},          {"region", h.region},
              {"method", h.method},    {"attempts", h.attempts},
              {"seed", h.seed},        {"covers_boundary", h.covers_boundary},
              {"connected", h.region_connected}};
}

}  // namespace

Json build(const Json& input, std::string kind, std::uint64_t seed) {
  if (kind.empty()) kind = detect_kind(input);
  Json prov{{"tool", "lrbtool"}, {"version", kVersion}, {"kind", kind}, {"seed", seed}};
  lrb::Lrb b;
  if (kind == "table") {
    b = lrb::lrb_from_json(input);
  } else if (kind == "arrangement") {
    const lrb::Arrangement arr = lrb::arrangement_from_json(input);
    if (arr.is_central()) {
      const lrb::FaceBand fb = lrb::face_monoid_central(arr);
      b = fb.lrb;
      if (arr.is_essential()) {
        prov["hemisphere"] = hemisphere_json(lrb::visual_hemisphere_realizable(arr, fb, seed));
      }
    } else {
      b = lrb::face_semigroup_affine(arr).lrb;
    }
    prov["hyperplanes"] = arr.size();
    prov["central"] = arr.is_central();
  } else if (kind == "graph-fpc") {
    b = lrb::free_partially_commutative(lrb::graph_from_json(input));
  } else if (kind == "median-graph") {
    const lrb::Cat0Result r = lrb::cat0_from_median_graph(lrb::graph_from_json(input));
    b = r.lrb;
    prov["f_vector"] = r.complex.f_vector();
  } else if (kind == "matroid") {
    const lrb::MatroidData m = lrb::matroid_from_json(input);
    b = lrb::matroid_lrb(m.ground, m.independents);
  } else if (kind == "covectors") {
    const lrb::CovectorSet cs = lrb::covectors_from_json(input);
    const lrb::AxiomReport ax = lrb::check_axioms(cs);
    b = lrb::covector_lrb(cs);
    prov["oriented_matroid"] = ax.oriented_matroid();
    prov["com"] = ax.com();
    prov["lopsided"] = ax.lopsided();
  } else if (kind == "braid") {
    b = lrb::braid_face_monoid(lrb::braid_n_from_json(input));
  } else if (kind == "ranking") {
    b = lrb::ranking_com(lrb::ranking_poset_from_json(input));
  } else {
    throw lrb::ParseError("unknown kind \"" + kind + "\"");
  }
  Json out = lrb::to_json(b);
  out["provenance"] = prov;
  return out;
}

}  // namespace lrbtool
