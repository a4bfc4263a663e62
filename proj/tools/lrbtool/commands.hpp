#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrb/io.hpp"

namespace lrbtool {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr const char* kVersion = "0.1.0";

// Input kind names accepted by `build`.
const std::vector<std::string>& build_kinds();
// Guess the kind from the keys of a JSON document.
std::string detect_kind(const lrb::Json& j);

// Table JSON plus a "provenance" block.
lrb::Json build(const lrb::Json& input, std::string kind, std::uint64_t seed);

struct AnalyzeOptions {
  bool ext = false;
  bool quiver = false;
  bool cartan = false;
  bool global_dim = false;
  bool cd = false;
  bool resolutions = false;
  bool enumeration = false;
  bool injective = false;
  lrb::Field field = lrb::Field::Q;
};

// The input table, its provenance and a fresh "report" section.  Running it
// on its own output reproduces the output.
lrb::Json analyze(const lrb::Json& input, const AnalyzeOptions& opt, std::ostream& summary);

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

const std::vector<std::string>& theorem_names();
// "all" runs every applicable check and skips the rest; an explicitly named
// check whose precondition fails raises PreconditionError.
std::vector<CheckResult> verify(const lrb::Json& input, const std::vector<std::string>& theorems);

}  // namespace lrbtool
