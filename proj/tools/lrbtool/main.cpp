// lrbtool: build, analyze and verify finite left regular bands.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 unreadable input,
// 3 input fails validation, 4 a requested analysis is inapplicable.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "commands.hpp"

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kValidation = 3, kPrecondition = 4 };

std::uint64_t resolve_seed(std::uint64_t flag, bool flag_given) {
  if (const char* env = std::getenv("LRB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lrb::ParseError(std::string("LRB_SEED is not a number: ") + env);
    }
  }
  return flag_given ? flag : lrbtool::kDefaultSeed;
}

void emit(const lrb::Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << lrb::dump_canonical(j);
  } else {
    lrb::write_json_file(out, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite left regular bands: construction, homology and representation theory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lrbtool::kVersion);

  std::string from, kind, out;
  std::uint64_t seed = lrbtool::kDefaultSeed;
  auto* build = app.add_subcommand("build", "Build a multiplication table from construction data");
  build->add_option("--from", from, "Input JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--kind", kind, "Input kind")->check(CLI::IsMember(lrbtool::build_kinds()));
  build->add_option("--out", out, "Output file (stdout if omitted)");
  auto* seed_opt = build->add_option("--seed", seed, "Seed for generic-form search");

  std::string table_path, field = "Q", report_out;
  lrbtool::AnalyzeOptions opt;
  auto* analyze = app.add_subcommand("analyze", "Compute invariants of an LRB table");
  analyze->add_option("table", table_path, "LRB table JSON")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--ext", opt.ext, "Ext dimensions between simple modules");
  analyze->add_flag("--quiver", opt.quiver, "Quiver and, for CW bands, its relations");
  analyze->add_flag("--cartan", opt.cartan, "Cartan matrix by three routes");
  analyze->add_flag("--global-dim", opt.global_dim, "Global dimension");
  analyze->add_flag("--cd", opt.cd, "Cohomological dimension over Q, F2, F3");
  analyze->add_flag("--resolutions", opt.resolutions, "Projective resolutions of every simple");
  analyze->add_flag("--enum", opt.enumeration, "Cell and flag counts against Mobius sums");
  analyze->add_flag("--injective", opt.injective, "Hemisphere cover and injective envelope");
  analyze->add_option("--field", field, "Coefficient field")->check(CLI::IsMember({"Q", "F2", "F3"}));
  analyze->add_option("--out", report_out, "Report file (stdout summary only if omitted)");

  std::string verify_path;
  std::vector<std::string> theorems{"all"};
  auto* verify = app.add_subcommand("verify", "Check theorem identities, one PASS/FAIL line each");
  verify->add_option("input", verify_path, "LRB table or construction JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--theorems", theorems, "all, or a list of check names")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*build) {
      const lrb::Json input = lrb::read_json_file(from);
      emit(lrbtool::build(input, kind, resolve_seed(seed, seed_opt->count() > 0)), out);
      return kOk;
    }
    if (*analyze) {
      opt.field = lrb::field_from_string(field);
      const lrb::Json input = lrb::read_json_file(table_path);
      std::ostringstream summary;
      const lrb::Json report = lrbtool::analyze(input, opt, summary);
      std::cout << summary.str();
      if (!report_out.empty()) emit(report, report_out);
      return kOk;
    }
    if (*verify) {
      const lrb::Json input = lrb::read_json_file(verify_path);
      bool ok = true;
      for (const auto& r : lrbtool::verify(input, theorems)) {
        const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::cout << tag << " " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        if (!r.skipped && !r.pass) ok = false;
      }
      return ok ? kOk : kFail;
    }
  } catch (const lrb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const lrb::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const lrb::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
