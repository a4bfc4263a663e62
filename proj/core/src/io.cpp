#include "lrb/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace lrb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << dump_canonical(j);
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) throw ParseError("zero denominator");
      q.canonicalize();
      return q;
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      const long den = j[1].get<long>();
      if (den == 0) throw ParseError("zero denominator");
      Rational q(j[0].get<long>(), den);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    // fall through
  }
  throw ParseError("bad rational " + j.dump());
}

Json to_json(const Lrb& b) {
  Json rows = Json::array();
  for (int a = 0; a < b.size(); ++a) {
    Json row = Json::array();
    for (int c = 0; c < b.size(); ++c) row.push_back(b.mul(a, c));
    rows.push_back(std::move(row));
  }
  return Json{{"kind", "lrb-table"}, {"n", b.size()}, {"names", b.names()}, {"table", rows}};
}

SemigroupTable table_from_json(const Json& j) {
  if (j.contains("kind") && j["kind"] != "lrb-table") {
    throw ParseError("kind must be \"lrb-table\"");
  }
  SemigroupTable t;
  t.n = small_int(field(j, "n"), "n");
  if (t.n < 0) throw ParseError("n must be nonnegative");
  if (t.n > kMaxTableSize) throw Error("TableTooLarge", std::to_string(t.n));
  const Json& rows = field(j, "table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != t.n) {
    throw ParseError("table must have n rows");
  }
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != t.n) {
      throw ParseError("table rows must have n entries");
    }
    for (const auto& v : row) t.table.push_back(small_int(v, "table entry"));
  }
  if (j.contains("names")) {
    t.names = string_list(j["names"], "names");
    if (static_cast<int>(t.names.size()) != t.n) throw ParseError("names must have n entries");
  }
  return t;
}

Lrb lrb_from_json(const Json& j) { return Lrb::validate(table_from_json(j)); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.labels[u], g.labels[v]});
  return Json{{"vertices", g.labels}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const auto names = string_list(field(j, "vertices"), "vertices");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<int>(i)).second) {
      throw Error("DuplicateVertex", names[i]);
    }
  }
  Graph g(static_cast<int>(names.size()));
  g.labels = names;
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (const auto& e : edges) {
    const auto ends = string_list(e, "edge");
    if (ends.size() != 2) throw ParseError("edges are pairs");
    auto u = index.find(ends[0]);
    auto v = index.find(ends[1]);
    if (u == index.end() || v == index.end()) throw Error("UnknownVertex", e.dump());
    if (u->second == v->second) throw Error("SelfLoop", ends[0]);
    g.add_edge(u->second, v->second);
  }
  return g;
}

MatroidData matroid_from_json(const Json& j) {
  MatroidData m;
  m.ground = string_list(field(j, "ground"), "ground");
  const Json& ind = field(j, "independents");
  if (!ind.is_array()) throw ParseError("independents must be an array");
  for (const auto& s : ind) m.independents.push_back(string_list(s, "independent set"));
  return m;
}

Json to_json(const Arrangement& a) {
  auto pair = [](const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return Json::array({c.get_num().get_si(), c.get_den().get_si()});
  };
  Json forms = Json::array();
  for (const auto& f : a.forms) {
    Json row = Json::array();
    for (const auto& q : f) row.push_back(pair(q));
    forms.push_back(std::move(row));
  }
  Json cs = Json::array();
  for (const auto& q : a.constants) cs.push_back(pair(q));
  return Json{{"dim", a.dim}, {"forms", forms}, {"constants", cs}};
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement a;
  a.dim = small_int(field(j, "dim"), "dim");
  const Json& forms = field(j, "forms");
  if (!forms.is_array()) throw ParseError("forms must be an array");
  for (const auto& f : forms) {
    if (!f.is_array()) throw ParseError("each form must be an array");
    QVector row;
    for (const auto& c : f) row.push_back(rational_from_json(c));
    a.forms.push_back(std::move(row));
  }
  if (j.contains("constants")) {
    const Json& cs = j["constants"];
    if (!cs.is_array()) throw ParseError("constants must be an array");
    for (const auto& c : cs) a.constants.push_back(rational_from_json(c));
  } else {
    a.constants.assign(a.forms.size(), Rational(0));
  }
  a.validate();
  return a;
}

Json to_json(const CovectorSet& cs) {
  Json vs = Json::array();
  for (const auto& x : cs.vectors) {
    Json row = Json::array();
    for (Sign s : x) row.push_back(std::string(1, to_char(s)));
    vs.push_back(std::move(row));
  }
  return Json{{"ground", cs.ground}, {"alphabet", to_string(cs.alphabet)}, {"covectors", vs}};
}

CovectorSet covectors_from_json(const Json& j) {
  auto ground = string_list(field(j, "ground"), "ground");
  Alphabet alpha = Alphabet::L;
  if (j.contains("alphabet")) {
    const Json& a = j["alphabet"];
    if (a == "L") {
      alpha = Alphabet::L;
    } else if (a == "Ltilde") {
      alpha = Alphabet::Ltilde;
    } else {
      throw ParseError("alphabet must be \"L\" or \"Ltilde\"");
    }
  }
  const Json& vs = field(j, "covectors");
  if (!vs.is_array()) throw ParseError("covectors must be an array");
  std::vector<Covector> out;
  for (const auto& v : vs) {
    Covector x;
    if (v.is_string()) {
      x = covector_from_string(v.get<std::string>());
    } else {
      for (const auto& s : string_list(v, "covector")) {
        if (s.size() != 1) throw ParseError("bad sign \"" + s + "\"");
        x.push_back(sign_from_char(s[0]));
      }
    }
    out.push_back(std::move(x));
  }
  return CovectorSet::make(std::move(ground), std::move(out), alpha);
}

Json to_json(const SimplicialComplex& k) {
  std::vector<std::string> names;
  for (int v = 0; v < k.num_vertices(); ++v) {
    names.push_back(static_cast<int>(k.labels.size()) > v ? k.labels[v] : std::to_string(v));
  }
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json row = Json::array();
    for (int v : f) row.push_back(names[v]);
    facets.push_back(std::move(row));
  }
  return Json{{"vertices", names}, {"facets", facets}};
}

SimplicialComplex simplicial_complex_from_json(const Json& j) {
  const auto names = string_list(field(j, "vertices"), "vertices");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<int>(i)).second) throw Error("DuplicateVertex", names[i]);
  }
  const Json& fs = field(j, "facets");
  if (!fs.is_array()) throw ParseError("facets must be an array");
  std::vector<Simplex> facets;
  for (const auto& f : fs) {
    Simplex s;
    for (const auto& v : string_list(f, "facet")) {
      auto it = index.find(v);
      if (it == index.end()) throw Error("UnknownVertex", v);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("RepeatedVertex", f.dump());
    facets.push_back(std::move(s));
  }
  SimplicialComplex k = SimplicialComplex::from_facets(static_cast<int>(names.size()), facets);
  k.labels = names;
  return k;
}

Json to_json(const HomologyResult& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) {
    Json row = Json::array();
    for (const auto& z : t) row.push_back(z.get_si());
    torsion.push_back(std::move(row));
  }
  return Json{{"low", h.low}, {"betti", h.betti}, {"torsion", torsion}};
}

int braid_n_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n");
  if (n < 1 || n > 5) throw Error("TooLarge", "braid monoids need 1 <= n <= 5");
  return n;
}

Poset ranking_poset_from_json(const Json& j) {
  const int n = braid_n_from_json(j);
  std::vector<std::pair<int, int>> rel;
  if (j.contains("relations")) {
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2) throw ParseError("relations are pairs");
      const int a = small_int(r[0], "relation") - 1;
      const int b = small_int(r[1], "relation") - 1;
      if (a < 0 || b < 0 || a >= n || b >= n) throw Error("UnknownVertex", r.dump());
      rel.emplace_back(a, b);
    }
  }
  return Poset::from_covers(n, rel);
}

}  // namespace lrb
