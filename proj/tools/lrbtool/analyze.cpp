#include <ostream>

#include "commands.hpp"
#include "lrb/enumeration.hpp"
#include "lrb/ext.hpp"
#include "lrb/quiver.hpp"
#include "lrb/resolutions.hpp"

namespace lrbtool {

using lrb::Json;

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Json lambda_json(const lrb::Lrb& b) {
  const lrb::Poset& lam = b.lambda();
  Json reps = Json::array();
  Json sizes = Json::array();
  for (int x = 0; x < b.num_supports(); ++x) {
    reps.push_back(b.name(b.rep(x)));
    sizes.push_back(b.lclass(x).size());
  }
  Json covers = Json::array();
  for (const auto& [x, y] : lam.covers()) covers.push_back({x, y});
  return Json{{"size", lam.size()},
              {"representatives", reps},
              {"class_sizes", sizes},
              {"ranks", lam.heights()},
              {"covers", covers}};
}

Json relation_json(const lrb::Quiver& q, const lrb::Relation& r) {
  Json terms = Json::array();
  for (const auto& [path, coeff] : r.terms) {
    Json arrows = Json::array();
    for (int a : path) arrows.push_back({q.arrows[a].first, q.arrows[a].second});
    terms.push_back(Json{{"path", arrows}, {"coeff", lrb::rational_to_string(coeff)}});
  }
  return terms;
}

Json ext_json(const lrb::ExtTable& t) {
  Json dims = Json::array();
  for (int n = 0; n <= t.max_degree(); ++n) {
    Json m = Json::array();
    for (int x = 0; x < t.size; ++x) {
      Json row = Json::array();
      for (int y = 0; y < t.size; ++y) row.push_back(t.at(n, x, y));
      m.push_back(std::move(row));
    }
    dims.push_back(std::move(m));
  }
  return Json{{"field", lrb::to_string(t.field)}, {"dims", dims}};
}

Json complex_json(const lrb::ModuleComplex& c) {
  return Json{{"ranks", c.ranks()},
              {"module_maps", c.module_maps},
              {"exact_Q", c.exact_q},
              {"exact_F2", c.exact_f2},
              {"torsion_free", c.torsion_free},
              {"certified", c.certified()}};
}

Json resolutions_json(const lrb::Lrb& b, std::ostream& summary) {
  Json out = Json::array();
  const bool cw = lrb::is_cw_lrb(b).passes;
  const bool geometric = lrb::non_geometric_witnesses(b).empty();
  for (int x = 0; x < b.num_supports(); ++x) {
    Json entry{{"support", x}};
    const lrb::OrderComplexResolution oc = lrb::order_complex_resolution(b, x);
    Json ocj = complex_json(oc.complex);
    ocj["multiplicities"] = oc.multiplicities.counts;
    ocj["multiplicities_match"] = oc.multiplicities.ranks_match && oc.multiplicities.characters_match;
    entry["order_complex"] = ocj;
    if (cw) {
      const lrb::CellularResolution cr = lrb::minimal_cellular_resolution(b, x);
      Json crj = complex_json(cr.complex);
      crj["minimal"] = cr.minimality.minimal();
      crj["hom"] = cr.minimality.hom;
      entry["cellular"] = crj;
      summary << "  resolution of k_" << x << ": cellular ranks [" ;
      bool first = true;
      for (long r : cr.complex.ranks()) {
        summary << (first ? "" : ",") << r;
        first = false;
      }
      summary << "]" << (cr.minimality.minimal() ? " minimal" : " NOT minimal") << "\n";
    }
    if (geometric) {
      const lrb::CrosscutResolution cc = lrb::geometric_crosscut_resolution(b, x);
      Json ccj = complex_json(cc.complex);
      ccj["projective_cover"] = cc.degree0_is_projective_cover;
      entry["crosscut"] = ccj;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json enumeration_json(const lrb::Lrb& b) {
  const lrb::CellCountReport cells = lrb::cell_counts_vs_mobius(b);
  const lrb::FlagReport flags = lrb::flag_vector_vs_mobius(b);
  Json flag = Json::object();
  Json mob = Json::object();
  for (const auto& [j, v] : flags.direct) flag[join_ints(j)] = v;
  for (const auto& [j, v] : flags.mobius_side) mob[join_ints(j)] = v;
  return Json{{"f", cells.f},
              {"f_mobius", cells.f_mobius},
              {"class_sizes", cells.direct},
              {"class_sizes_mobius", cells.mobius_side},
              {"euler", cells.euler},
              {"flag", flag},
              {"mobius_side", mob},
              {"match", cells.match() && flags.match()}};
}

Json injective_json(const lrb::Lrb& b, const Json& prov, std::ostream& summary) {
  if (!prov.is_object() || !prov.contains("hemisphere")) {
    throw lrb::PreconditionError("NoHemisphere",
                                 "--injective needs a table built from an essential central arrangement");
  }
  const std::vector<int> region = prov["hemisphere"]["region"].get<std::vector<int>>();
  const lrb::RightCoverCertificate rc = lrb::right_projective_cover(b, region);
  const int top = b.sigma(*b.identity());
  const lrb::InjectiveEnvelope env = lrb::injective_envelope(b, top, region);
  summary << "  hemisphere |R| = " << region.size() << ", dim kB/kR = " << rc.quotient_dim
          << ", dim I = " << env.module.dim << "\n";
  return Json{{"region_size", region.size()},
              {"quotient_dim", rc.quotient_dim},
              {"envelope",
               Json{{"support", top},
                    {"dim", env.module.dim},
                    {"socle_dim", env.socle_dim},
                    {"socle_is_simple", env.socle_is_simple_x},
                    {"multiplicities", env.multiplicities}}}};
}

}  // namespace

Json analyze(const Json& input, const AnalyzeOptions& opt, std::ostream& summary) {
  const lrb::Lrb b = lrb::lrb_from_json(input);
  Json out = lrb::to_json(b);
  if (input.contains("provenance")) out["provenance"] = input["provenance"];
  const Json prov = out.contains("provenance") ? out["provenance"] : Json();

  Json report{{"size", b.size()}, {"monoid", b.is_monoid()}, {"connected", lrb::is_connected(b)}};
  report["lambda"] = lambda_json(b);
  summary << "LRB with " << b.size() << " elements, " << b.num_supports() << " supports\n";

  if (opt.ext) {
    const lrb::ExtTable t = lrb::ext_table(b, opt.field);
    report["ext"] = ext_json(t);
    summary << "  Ext over " << lrb::to_string(opt.field) << " nonzero through degree "
            << t.max_degree() << "\n";
  }
  if (opt.quiver) {
    const auto arrows = lrb::quiver(b, opt.field);
    Json q = Json::array();
    for (int x = 0; x < b.num_supports(); ++x) {
      for (int y = 0; y < b.num_supports(); ++y) {
        for (long k = 0; k < arrows[x][y]; ++k) q.push_back({x, y});
      }
    }
    report["quiver"] = q;
    summary << "  quiver: " << q.size() << " arrows\n";
    const lrb::CwLrbReport cw = lrb::is_cw_lrb(b);
    if (cw.passes) {
      const lrb::QuiverPresentation p = lrb::quiver_presentation_cw(b);
      Json rels = Json::array();
      for (std::size_t i = 0; i < p.relations.size(); ++i) {
        rels.push_back(Json{{"interval", {p.relation_intervals[i].first, p.relation_intervals[i].second}},
                            {"terms", relation_json(p.quiver, p.relations[i])}});
      }
      report["relations"] = rels;
      report["presentation"] = Json{{"quotient_dims", p.quotient_dims},
                                    {"total", p.total},
                                    {"matches_size", p.dimension_matches}};
      summary << "  presentation: " << rels.size() << " relations, total dim " << p.total << "\n";
    } else {
      report["presentation"] = Json{{"unavailable", cw.reason.empty() ? "not CW" : cw.reason}};
    }
  }
  if (opt.cartan) {
    const lrb::IntMatrix c = lrb::cartan_by_characters(b);
    const bool agree = c == lrb::cartan_by_mobius(b) && c == lrb::cartan_by_modules(b);
    report["cartan"] = c;
    report["cartan_routes_agree"] = agree;
    summary << "  Cartan entry sum " << lrb::entry_sum(c) << (agree ? "" : " (routes DISAGREE)")
            << "\n";
  }
  if (opt.global_dim) {
    const int g = lrb::global_dimension(b, opt.field);
    report["global_dim"] = g;
    summary << "  global dimension " << g << "\n";
  }
  if (opt.cd) {
    Json cd;
    bool b1 = false;
    for (lrb::Field f : lrb::kAllFields) {
      const lrb::CdReport r = lrb::cohomological_dimension_report(b, lrb::Coefficients(f));
      cd[lrb::to_string(f)] = r.value;
      b1 = r.used_b1;
    }
    cd["identity_adjoined"] = b1;
    report["cd"] = cd;
    summary << "  cd over Q " << cd["Q"].get<int>() << "\n";
  }
  if (opt.resolutions) report["resolutions"] = resolutions_json(b, summary);
  if (opt.enumeration) {
    report["enumeration"] = enumeration_json(b);
    summary << "  enumeration identities " << (report["enumeration"]["match"].get<bool>() ? "hold" : "FAIL")
            << "\n";
  }
  if (opt.injective) report["injective"] = injective_json(b, prov, summary);
  out["report"] = report;
  return out;
}

}  // namespace lrbtool
