#include <doctest.h>

#include "dill/config.hpp"
#include "dill/error.hpp"

using namespace dill;
using nlohmann::json;

namespace {

ErrorKind kind_of(const char* text) {
  try {
    parse_config(json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("config accepted: " << text);
  return ErrorKind::Config;
}

}  // namespace

TEST_CASE("a relational config builds its model and generators") {
  Config c = parse_config(json::parse(R"({
    "model": "rel", "atoms": {"b": ["0", "1"]}, "budget": {"N": 3},
    "generators": {"flip": {"dom": {"CartAtom": "b"}, "cod": {"CartAtom": "b"},
                            "table": [[{"bag": ["0"]}, "1"], [{"bag": ["1"]}, "0"]]}}})"));
  CHECK(c.lnl->id() == "kleisli-of-rel");
  CHECK(c.budget.n == 3);
  REQUIRE(c.rel_generators.count("flip") == 1);
  CHECK(c.rel_generators.at("flip").dom() == Type::bang(Type::atom("b")));
  CHECK(c.rel_generators.at("flip").image(Element::bag({Element::atom("0")}), 4) == Image{Element::atom("1")});
}

TEST_CASE("a polynomial config types its generators over R^n") {
  Config c = parse_config(json::parse(R"({"model": "poly",
    "generators": {"mul": {"dom": 2, "coords": [[{"exponents": [1, 1], "num": 1, "den": 1}]]}}})"));
  CHECK(c.is_poly());
  CHECK(c.signature.at("mul").dom == poly_type(2));
  CHECK(c.poly_generators.at("mul").cod() == 1);
}

TEST_CASE("config errors") {
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]}, "colour": 1})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "nope", "atoms": {"a": ["0"]}})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": []}})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0", "0"]}})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]}, "budget": {"N": -1}})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]}, "suites": ["bogus"]})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]}, "mutation": "everything"})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "trivial", "atoms": {"a": ["0"]}, "mutation": "deriving"})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]},
    "generators": {"g": {"dom": {"Atom": "q"}, "cod": {"Atom": "a"}, "table": []}}})") == ErrorKind::UnknownAtom);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]},
    "generators": {"g": {"dom": {"Atom": "a"}, "cod": {"Atom": "a"}, "table": [["7", "0"]]}}})") == ErrorKind::Config);
  CHECK(kind_of(R"({"model": "rel", "atoms": {"a": ["0"]},
    "generators": {"g": {"dom": {"Atom": "a"}, "cod": {"CartAtom": "a"}, "table": []}}})") == ErrorKind::Config);
}

TEST_CASE("unknown atom diagnostics name the atom") {
  try {
    parse_config(json::parse(R"({"model": "rel", "atoms": {"a": ["0"]},
      "generators": {"g": {"dom": {"Atom": "zeta"}, "cod": {"Atom": "a"}, "table": []}}})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("zeta") != std::string::npos);
  }
}
