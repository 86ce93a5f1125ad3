#include "dill/config.hpp"

#include <fstream>
#include <set>

#include "dill/error.hpp"
#include "dill/rel.hpp"

namespace dill {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Config, what); }

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

void check_atoms(const Type& t, const AtomTable& atoms) {
  if (t.kind() == TypeKind::Atom || t.kind() == TypeKind::CartAtom) {
    if (!atoms.count(t.name())) throw Error(ErrorKind::UnknownAtom, "unknown atom '" + t.name() + "'");
    return;
  }
  for (const auto& k : t.kids()) check_atoms(k, atoms);
}

void read_rel_generators(Config& c, const nlohmann::json& gens) {
  for (const auto& [name, g] : gens.items()) {
    if (!g.is_object() || !g.contains("dom") || !g.contains("cod") || !g.contains("table")) {
      bad("generator '" + name + "' needs dom, cod and table");
    }
    Type dom = Type::from_json(g["dom"]);
    Type cod = Type::from_json(g["cod"]);
    if (dom.world() != cod.world()) bad("generator '" + name + "' mixes the linear and cartesian worlds");
    check_atoms(dom, c.atoms);
    check_atoms(cod, c.atoms);
    // a cartesian generator X -> Y is stored as its relation F(X) -> Y
    Type rdom = dom.world() == World::Cartesian ? interpret(*c.lnl, Type::free(dom)) : interpret(*c.lnl, dom);
    Type rcod = interpret(*c.lnl, cod);
    std::vector<std::pair<Element, Element>> rows;
    for (const auto& row : g["table"]) {
      if (!row.is_array() || row.size() != 2) bad("generator '" + name + "': table rows are [input, output]");
      Element x = Element::from_json(row[0]);
      Element y = Element::from_json(row[1]);
      if (!element_of(x, rdom, c.atoms)) bad("generator '" + name + "': " + x.str() + " is not in " + rdom.str());
      if (!element_of(y, rcod, c.atoms)) bad("generator '" + name + "': " + y.str() + " is not in " + rcod.str());
      rows.emplace_back(std::move(x), std::move(y));
    }
    c.signature[name] = {name, dom, cod};
    c.rel_generators.emplace(name, rel::table(rdom, rcod, std::move(rows), name));
  }
}

void read_poly_generators(Config& c, const nlohmann::json& gens) {
  for (const auto& [name, g] : gens.items()) {
    PolyMap f = PolyMap::from_json(g);
    c.signature[name] = {name, poly_type(f.dom), poly_type(f.cod())};
    c.poly_generators.emplace(name, std::move(f));
  }
}

}  // namespace

Type poly_type(std::size_t n) {
  if (n == 0) return Type::cart_unit();
  Type t = Type::cart_atom("R");
  for (std::size_t i = 1; i < n; ++i) t = Type::cart_prod(t, Type::cart_atom("R"));
  return t;
}

Config parse_config(const nlohmann::json& j) {
  if (!j.is_object()) bad("config must be a JSON object");
  static const std::set<std::string> known = {"model", "atoms", "mutation", "generators", "budget", "suites", "corpus"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) bad("unknown config field '" + key + "'");
  }
  Config c;
  c.model = field<std::string>(j, "model", "rel");
  if (c.model != "rel" && c.model != "kleisli-of-rel" && c.model != "trivial" && c.model != "poly") {
    bad("unknown model '" + c.model + "'");
  }
  if (j.contains("atoms")) {
    if (!j["atoms"].is_object()) bad("atoms must map names to carrier lists");
    for (const auto& [name, carrier] : j["atoms"].items()) {
      if (!carrier.is_array() || carrier.empty()) bad("atom '" + name + "' needs a non-empty carrier");
      std::set<std::string> seen;
      for (const auto& v : carrier) {
        if (!v.is_string()) bad("atom '" + name + "': carrier values are strings");
        if (!seen.insert(v.get<std::string>()).second) bad("atom '" + name + "': duplicate value " + v.dump());
        c.atoms[name].push_back(v.get<std::string>());
      }
    }
  }
  try {
    c.mutation = mutation_from_name(field<std::string>(j, "mutation", "none"));
  } catch (const Error& e) {
    bad(e.what());
  }
  if (j.contains("budget")) {
    const auto& b = j["budget"];
    if (!b.is_object()) bad("budget must be an object");
    long long n = field<long long>(b, "N", static_cast<long long>(c.budget.n));
    if (n < 0) bad("budget.N must be >= 0");
    c.budget.n = static_cast<std::size_t>(n);
    c.budget.max_elements = field<std::size_t>(b, "maxElements", c.budget.max_elements);
    c.budget.seed = field<std::uint64_t>(b, "seed", c.budget.seed);
  }
  c.suites = field<std::vector<std::string>>(j, "suites", {});
  for (const auto& s : c.suites) {
    if (std::find(suite_ids().begin(), suite_ids().end(), s) == suite_ids().end()) bad("unknown suite '" + s + "'");
  }
  if (j.contains("corpus")) {
    const auto& k = j["corpus"];
    c.corpus.max_arity = field<std::size_t>(k, "maxArity", c.corpus.max_arity);
    c.corpus.max_degree = field<unsigned>(k, "maxDegree", c.corpus.max_degree);
    c.corpus.random_maps = field<std::size_t>(k, "randomMaps", c.corpus.random_maps);
    c.corpus.random_degree = field<unsigned>(k, "randomDegree", c.corpus.random_degree);
    c.corpus.random_coeff = field<int>(k, "randomCoeff", c.corpus.random_coeff);
    c.corpus.oracle_points = field<std::size_t>(k, "oraclePoints", c.corpus.oracle_points);
  }

  if (c.is_poly()) {
    if (c.mutation != Mutation::None) bad("mutations apply to the relational models only");
    if (j.contains("generators")) read_poly_generators(c, j["generators"]);
    return c;
  }
  if (c.atoms.empty()) bad("model '" + c.model + "' needs at least one atom");
  if (c.model == "trivial") {
    if (c.mutation != Mutation::None) bad("mutations apply to the relational models only");
    c.lnl = trivial_lnl(c.atoms);
  } else {
    c.lnl = rel_lnl(c.atoms, c.mutation);
  }
  if (j.contains("generators")) read_rel_generators(c, j["generators"]);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return parse_config(j);
}

}  // namespace dill
