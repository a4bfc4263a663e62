#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lrb/covectors.hpp"
#include "lrb/error.hpp"
#include "lrb/graph.hpp"
#include "lrb/linalg.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

using Json = nlohmann::json;

// Malformed input (bad JSON, missing keys, wrong types).  Structural
// problems with well-formed input raise plain Error.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail) : Error("ParseError", detail) {}
};

Json read_json_file(const std::string& path);
// Objects are emitted with sorted keys; the output ends in a newline.
std::string dump_canonical(const Json& j);
void write_json_file(const std::string& path, const Json& j);

// "p/q", or "p" for integers.
std::string rational_to_string(const Rational& q);
// Accepts an integer, a "p/q" string or a [num, den] pair.
Rational rational_from_json(const Json& j);

// {"n", "table", "names"?, "kind": "lrb-table"}
Json to_json(const Lrb& b);
SemigroupTable table_from_json(const Json& j);
Lrb lrb_from_json(const Json& j);

// {"vertices": [string], "edges": [[string, string]]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

struct MatroidData {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> independents;
};
MatroidData matroid_from_json(const Json& j);

// {"dim", "forms": [[coeff]], "constants": [coeff]}, coefficients as in
// rational_from_json.  Forms are written as [num, den] pairs.
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// {"ground", "alphabet": "L" | "Ltilde", "covectors": [[sign]]}
Json to_json(const CovectorSet& cs);
CovectorSet covectors_from_json(const Json& j);

// {"vertices": [string], "facets": [[string]]}; unlabelled vertices are
// named by index.
Json to_json(const SimplicialComplex& k);
SimplicialComplex simplicial_complex_from_json(const Json& j);
// {"low", "betti": [int], "torsion": [[int]]}; torsion is empty over fields.
Json to_json(const HomologyResult& h);

// {"n"} for the braid monoid; {"n", "relations": [[i, j]]} with 1-based
// i < j for a ranking COM.
int braid_n_from_json(const Json& j);
Poset ranking_poset_from_json(const Json& j);

}  // namespace lrb
