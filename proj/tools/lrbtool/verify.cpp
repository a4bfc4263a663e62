#include <algorithm>
#include <functional>

#include "commands.hpp"
#include "lrb/algebra.hpp"
#include "lrb/enumeration.hpp"
#include "lrb/ext.hpp"
#include "lrb/quiver.hpp"
#include "lrb/resolutions.hpp"

namespace lrbtool {

using lrb::Json;

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"axioms",      "idempotents",  "radical",
                                                 "resolutions", "cartan",       "enumeration",
                                                 "presentation", "cm",          "incidence"};
  return names;
}

namespace {

// Checks that run under "all"; incidence is a classifier rather than an
// identity, so it only runs on request.
bool in_all(const std::string& name) { return name != "incidence"; }

struct Context {
  std::optional<lrb::CovectorSet> covectors;
  std::optional<lrb::Lrb> band;
  std::string band_error;
};

void require(bool ok, const char* kind, const std::string& detail) {
  if (!ok) throw lrb::PreconditionError(kind, detail);
}

CheckResult check_axioms(const Context& ctx) {
  require(ctx.covectors.has_value(), "NotCovectorInput", "axioms need a covector set");
  const lrb::AxiomReport r = lrb::check_axioms(*ctx.covectors);
  CheckResult c;
  c.pass = r.com();
  if (r.oriented_matroid()) {
    c.detail = "oriented matroid";
  } else if (r.lopsided()) {
    c.detail = "lopsided";
  } else if (r.com()) {
    c.detail = "COM";
  }
  if (!r.failures.empty() && !c.pass) {
    c.detail = r.failures.front().axiom + " fails at " + r.failures.front().witness;
  }
  return c;
}

CheckResult check_idempotents(const lrb::Lrb& b) {
  CheckResult c;
  c.pass = true;
  const bool connected = lrb::is_connected(b);
  for (const lrb::Lrb& v : {b, b.with_rotated_representatives()}) {
    const lrb::IdempotentSystem sys = lrb::eta_idempotents(v);
    if (!sys.all_pass()) {
      c.pass = false;
      c.detail = "eta system fails";
    }
    if (lrb::identity_element(v, sys).has_value() != connected) {
      c.pass = false;
      c.detail = "two-sided identity disagrees with connectivity";
    }
  }
  if (c.pass) c.detail = connected ? "identity present" : "no identity (not connected)";
  return c;
}

CheckResult check_radical(const lrb::Lrb& b) {
  const lrb::RadicalInfo r = lrb::radical(b);
  CheckResult c;
  c.pass = r.spans_kernel && r.nilpotency <= r.bound;
  c.detail = "dim " + std::to_string(r.dim) + ", nilpotency " + std::to_string(r.nilpotency) +
             " <= " + std::to_string(r.bound);
  return c;
}

CheckResult check_resolutions(const lrb::Lrb& b) {
  require(lrb::is_connected(b), "NotConnected", "resolutions need a connected band");
  const bool cw = lrb::is_cw_lrb(b).passes;
  const bool geometric = lrb::non_geometric_witnesses(b).empty();
  CheckResult c;
  c.pass = true;
  for (int x = 0; x < b.num_supports() && c.pass; ++x) {
    const auto oc = lrb::order_complex_resolution(b, x);
    if (!oc.complex.certified() || !oc.multiplicities.ranks_match ||
        !oc.multiplicities.characters_match) {
      c.pass = false;
      c.detail = "order complex resolution of k_" + std::to_string(x);
    }
    if (c.pass && cw && !lrb::minimal_cellular_resolution(b, x).minimality.minimal()) {
      c.pass = false;
      c.detail = "cellular resolution of k_" + std::to_string(x) + " not minimal";
    }
    if (c.pass && geometric && !lrb::geometric_crosscut_resolution(b, x).complex.certified()) {
      c.pass = false;
      c.detail = "cross-cut resolution of k_" + std::to_string(x);
    }
  }
  if (c.pass) {
    c.detail = "order complex";
    if (cw) c.detail += ", minimal cellular";
    if (geometric) c.detail += ", cross-cut";
  }
  return c;
}

CheckResult check_cartan(const lrb::Lrb& b) {
  const lrb::IntMatrix c1 = lrb::cartan_by_characters(b);
  CheckResult c;
  c.pass = c1 == lrb::cartan_by_mobius(b) && c1 == lrb::cartan_by_modules(b) &&
           lrb::is_unipotent_lower_triangular(b, c1);
  c.detail = "entry sum " + std::to_string(lrb::entry_sum(c1));
  return c;
}

void require_cw(const lrb::Lrb& b) {
  const lrb::CwLrbReport r = lrb::is_cw_lrb(b);
  require(r.passes, "NotCwLrb", r.reason.empty() ? "not a CW band" : r.reason);
}

CheckResult check_enumeration(const lrb::Lrb& b) {
  require_cw(b);
  CheckResult c;
  const auto cells = lrb::cell_counts_vs_mobius(b);
  const auto flags = lrb::flag_vector_vs_mobius(b);
  c.pass = cells.match() && flags.match();
  c.detail = std::to_string(flags.direct.size()) + " flag counts";
  return c;
}

CheckResult check_presentation(const lrb::Lrb& b) {
  require_cw(b);
  const lrb::QuiverPresentation p = lrb::quiver_presentation_cw(b);
  CheckResult c;
  c.pass = p.dimension_matches;
  c.detail = "total " + std::to_string(p.total) + " vs " + std::to_string(b.size());
  return c;
}

CheckResult check_cm(const lrb::Lrb& b) {
  require_cw(b);
  const lrb::CmIntervalReport r = lrb::cm_open_intervals(b.lambda());
  CheckResult c;
  c.pass = r.all_pass;
  c.detail = std::to_string(r.intervals_checked) + " open intervals";
  if (!r.failures.empty()) {
    c.detail = "interval (" + std::to_string(r.failures[0].x) + "," + std::to_string(r.failures[0].y) +
               ") over " + r.failures[0].ring;
  }
  return c;
}

CheckResult check_incidence(const lrb::Lrb& b) {
  const lrb::IncidenceCertificate r = lrb::incidence_algebra_certificate(b);
  CheckResult c;
  c.pass = r.passes();
  c.detail = std::string("thin ") + (r.thin ? "yes" : "no") + ", Cartan = zeta " +
             (r.cartan_is_zeta ? "yes" : "no");
  return c;
}

}  // namespace

std::vector<CheckResult> verify(const Json& input, const std::vector<std::string>& theorems) {
  std::vector<std::string> wanted;
  const bool all = std::find(theorems.begin(), theorems.end(), "all") != theorems.end();
  if (all) {
    for (const auto& n : theorem_names()) {
      if (in_all(n)) wanted.push_back(n);
    }
  } else {
    for (const auto& n : theorems) {
      if (std::find(theorem_names().begin(), theorem_names().end(), n) == theorem_names().end()) {
        throw lrb::ParseError("unknown theorem \"" + n + "\"");
      }
      wanted.push_back(n);
    }
  }

  Context ctx;
  const std::string kind = detect_kind(input);
  if (kind == "covectors") {
    ctx.covectors = lrb::covectors_from_json(input);
    try {
      ctx.band = lrb::covector_lrb(*ctx.covectors);
    } catch (const lrb::Error& e) {
      ctx.band_error = e.what();
    }
  } else if (kind == "table") {
    ctx.band = lrb::lrb_from_json(input);
  } else {
    ctx.band = lrb::Lrb::validate(lrb::table_from_json(build(input, kind, kDefaultSeed)));
  }

  const std::map<std::string, std::function<CheckResult(const lrb::Lrb&)>> band_checks = {
      {"idempotents", check_idempotents}, {"radical", check_radical},
      {"resolutions", check_resolutions}, {"cartan", check_cartan},
      {"enumeration", check_enumeration}, {"presentation", check_presentation},
      {"cm", check_cm},                   {"incidence", check_incidence}};

  std::vector<CheckResult> out;
  for (const auto& name : wanted) {
    CheckResult r;
    try {
      if (name == "axioms") {
        r = check_axioms(ctx);
      } else if (!ctx.band) {
        r.pass = false;
        r.detail = "covectors do not form a band: " + ctx.band_error;
      } else {
        r = band_checks.at(name)(*ctx.band);
      }
    } catch (const lrb::PreconditionError& e) {
      if (!all) throw;
      r.skipped = true;
      r.detail = e.what();
    }
    r.name = name;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lrbtool
