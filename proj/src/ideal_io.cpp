#include "syzygy/ideal.hpp"
#include "syzygy/module.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace syz {

using Json = nlohmann::ordered_json;

namespace {

Json coefficient_to_json(const mpq_class& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return Json(c.get_num().get_si());
  return Json(format_rational(c));
}

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where.empty() ? "/" : where, "missing field \"" + key + "\"");
  return *it;
}

long long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

mpq_class coefficient_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ParseError(where, err.what());
    }
  }
  throw ParseError(where, "coefficient must be an integer or a fraction string \"a/b\"");
}

Json polynomial_to_json(const Polynomial& g) {
  auto terms = Json::array();
  for (const auto& t : g.terms())
    terms.push_back({{"coefficient", coefficient_to_json(t.coefficient)}, {"exponents", t.exponents}});
  return terms;
}

Polynomial polynomial_from_json(const Json& poly, int e, const std::string& where) {
  if (!poly.is_array()) throw ParseError(where, "a polynomial is a list of terms");
  std::vector<Term> terms;
  for (std::size_t t = 0; t < poly.size(); ++t) {
    std::string tw = where + "/" + std::to_string(t);
    const Json& term = poly[t];
    mpq_class c = coefficient_from_json(member(term, "coefficient", tw), tw + "/coefficient");
    const Json& ex = member(term, "exponents", tw);
    if (!ex.is_array() || static_cast<int>(ex.size()) != e)
      throw ParseError(tw + "/exponents", "expected " + std::to_string(e) + " exponents");
    Exponents m;
    for (std::size_t v = 0; v < ex.size(); ++v) {
      long long a = as_integer(ex[v], tw + "/exponents/" + std::to_string(v));
      if (a < 0 || a > 1000) throw ParseError(tw + "/exponents/" + std::to_string(v), "exponent out of range");
      m.push_back(static_cast<int>(a));
    }
    terms.push_back(Term{c, std::move(m)});
  }
  return Polynomial(e, std::move(terms));
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("byte " + std::to_string(err.byte), err.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string ideal_to_json(const IdealDescription& ideal) {
  Json doc;
  doc["field"] = {{"characteristic", ideal.field.characteristic()}};
  doc["variables"] = ideal.variables;
  auto gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(polynomial_to_json(g));
  doc["generators"] = gens;
  const auto& m = ideal.metadata;
  if (!m.empty()) {
    Json meta = Json::object();
    if (!m.name.empty()) meta["name"] = m.name;
    if (m.dim) meta["dim"] = *m.dim;
    if (m.cohen_macaulay) meta["cohen_macaulay"] = *m.cohen_macaulay;
    if (m.koszul) meta["koszul"] = *m.koszul;
    if (m.regularity) meta["regularity"] = *m.regularity;
    if (m.seed) meta["seed"] = *m.seed;
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

IdealDescription ideal_from_json(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "field" && key != "variables" && key != "generators" && key != "metadata")
      throw ParseError("/" + key, "unknown field");

  IdealDescription out;
  const Json& field = member(doc, "field", "");
  long long p = as_integer(member(field, "characteristic", "/field"), "/field/characteristic");
  if (p < 0 || p > std::numeric_limits<std::uint32_t>::max())
    throw ParseError("/field/characteristic", "out of range");
  try {
    out.field = FieldSpec(static_cast<std::uint32_t>(p));
  } catch (const std::invalid_argument& err) {
    throw ParseError("/field/characteristic", err.what());
  }

  const Json& vars = member(doc, "variables", "");
  if (!vars.is_array() || vars.empty()) throw ParseError("/variables", "expected a non-empty list of names");
  std::set<std::string> seen;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    std::string where = "/variables/" + std::to_string(v);
    if (!vars[v].is_string() || vars[v].get<std::string>().empty())
      throw ParseError(where, "variable names must be non-empty strings");
    if (!seen.insert(vars[v].get<std::string>()).second) throw ParseError(where, "duplicate variable name");
    out.variables.push_back(vars[v].get<std::string>());
  }
  int e = out.num_vars();

  const Json& gens = member(doc, "generators", "");
  if (!gens.is_array()) throw ParseError("/generators", "expected a list of polynomials");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::string gw = "/generators/" + std::to_string(g);
    out.generators.push_back(polynomial_from_json(gens[g], e, gw));
  }

  if (doc.contains("metadata")) {
    const Json& meta = doc["metadata"];
    if (!meta.is_object()) throw ParseError("/metadata", "expected an object");
    for (const auto& [key, val] : meta.items()) {
      std::string where = "/metadata/" + key;
      if (key == "name") {
        if (!val.is_string()) throw ParseError(where, "expected a string");
        out.metadata.name = val.get<std::string>();
      } else if (key == "dim") {
        out.metadata.dim = static_cast<int>(as_integer(val, where));
      } else if (key == "regularity") {
        out.metadata.regularity = static_cast<int>(as_integer(val, where));
      } else if (key == "seed") {
        if (!val.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer");
        out.metadata.seed = val.get<std::uint64_t>();
      } else if (key == "cohen_macaulay" || key == "koszul") {
        if (!val.is_boolean()) throw ParseError(where, "expected true or false");
        (key == "koszul" ? out.metadata.koszul : out.metadata.cohen_macaulay) = val.get<bool>();
      } else {
        throw ParseError(where, "unknown metadata field");
      }
    }
  }
  return out;
}

IdealDescription read_ideal_file(const std::string& path) { return ideal_from_json(slurp(path)); }

void write_ideal_file(const std::string& path, const IdealDescription& ideal) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << ideal_to_json(ideal);
}

std::string presentation_to_json(const Presentation& p) {
  Json doc;
  doc["generator_degrees"] = p.generator_degrees;
  auto rels = Json::array();
  for (std::size_t l = 0; l < p.relations.size(); ++l) {
    auto comps = Json::array();
    for (const auto& c : p.relations[l]) comps.push_back(polynomial_to_json(c));
    rels.push_back({{"degree", p.relation_degrees[l]}, {"components", comps}});
  }
  doc["relations"] = rels;
  return doc.dump(2) + "\n";
}

Presentation presentation_from_json(const std::string& text, int num_vars) {
  Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  Presentation p;
  const Json& gens = member(doc, "generator_degrees", "");
  if (!gens.is_array() || gens.empty()) throw ParseError("/generator_degrees", "expected a non-empty list");
  for (std::size_t k = 0; k < gens.size(); ++k)
    p.generator_degrees.push_back(static_cast<int>(as_integer(gens[k], "/generator_degrees/" + std::to_string(k))));
  if (!doc.contains("relations")) return p;
  const Json& rels = doc["relations"];
  if (!rels.is_array()) throw ParseError("/relations", "expected a list");
  for (std::size_t l = 0; l < rels.size(); ++l) {
    std::string rw = "/relations/" + std::to_string(l);
    int deg = static_cast<int>(as_integer(member(rels[l], "degree", rw), rw + "/degree"));
    const Json& comps = member(rels[l], "components", rw);
    if (!comps.is_array() || comps.size() != gens.size())
      throw ParseError(rw + "/components", "expected one polynomial per generator");
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      std::string cw = rw + "/components/" + std::to_string(k);
      Polynomial f = polynomial_from_json(comps[k], num_vars, cw);
      if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != deg - p.generator_degrees[k]))
        throw ParseError(cw, "component must be homogeneous of degree " + std::to_string(deg - p.generator_degrees[k]));
      row.push_back(std::move(f));
    }
    p.relation_degrees.push_back(deg);
    p.relations.push_back(std::move(row));
  }
  return p;
}

Presentation read_presentation_file(const std::string& path, int num_vars) {
  return presentation_from_json(slurp(path), num_vars);
}

}  // namespace syz
