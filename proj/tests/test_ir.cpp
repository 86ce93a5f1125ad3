#include <doctest.h>

#include "dill/element.hpp"
#include "dill/error.hpp"
#include "dill/term.hpp"

using namespace dill;

namespace {

const Type a = Type::atom("a");
const Type b = Type::atom("b");
const AtomTable atoms = {{"a", {"x"}}, {"b", {"y"}}};

Element bag(std::vector<Element> items) { return Element::bag(std::move(items)); }
Element x() { return Element::atom("x"); }

}  // namespace

TEST_CASE("types round trip through JSON") {
  std::vector<Type> ts = {a,
                          Type::unit(),
                          Type::zero(),
                          Type::tensor({a, b, Type::bang(a)}),
                          Type::biproduct(a, Type::tensor(a, b)),
                          Type::free(Type::cart_prod(Type::cart_atom("a"), Type::cart_unit())),
                          Type::forget(Type::bang(b))};
  for (const auto& t : ts) CHECK(Type::from_json(t.to_json()) == t);
  CHECK(Type::tensor({a, b, Type::bang(a)}).arity() == 3);
  CHECK(Type::unit().arity() == 0);
  CHECK(Type::cart_atom("a").world() == World::Cartesian);
  CHECK(Type::bang(a).world() == World::Linear);
}

TEST_CASE("malformed type JSON is a parse error") {
  try {
    Type::from_json(nlohmann::json::parse(R"({"Atom": "a", "Unit": []})"));
    FAIL("accepted a two-key type");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("bags are multisets") {
  Element y = Element::atom("y");
  CHECK(bag({x(), y, x()}) == bag({x(), x(), y}));
  CHECK(bag({x(), y}) != bag({x()}));
  for (const auto& e : {bag({x(), y, x()}), Element::tag(2, Element::tuple({x(), y})), Element::star()}) {
    CHECK(Element::from_json(e.to_json()) == e);
  }
}

TEST_CASE("element size counts atoms and bag slots") {
  CHECK(Element::star().size() == 0);
  CHECK(x().size() == 1);
  CHECK(bag({}).size() == 0);
  CHECK(bag({x()}).size() == 2);
  CHECK(bag({x(), x()}).size() == 4);
}

TEST_CASE("enumeration of !a follows the size formula") {
  Type ba = Type::bang(a);
  CHECK(enumerate_elements(ba, 2, atoms) == std::vector<Element>{bag({}), bag({x()})});
  CHECK(enumerate_elements(ba, 3, atoms) == std::vector<Element>{bag({}), bag({x()})});
  CHECK(enumerate_elements(ba, 4, atoms) == std::vector<Element>{bag({}), bag({x()}), bag({x(), x()})});
  for (std::size_t n : {0u, 3u, 7u}) CHECK(enumerate_elements(Type::unit(), n, atoms) == std::vector<Element>{Element::star()});
  std::vector<Element> sum = enumerate_elements(Type::biproduct(a, b), 1, atoms);
  CHECK(sum == std::vector<Element>{Element::tag(1, x()), Element::tag(2, Element::atom("y"))});
}

TEST_CASE("enumeration agrees with a brute-force count") {
  // bags over a 2-point carrier with k items: k + 1 of them, each of size 2k
  AtomTable two = {{"c", {"0", "1"}}};
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t expected = 0;
    for (std::size_t k = 0; 2 * k <= n; ++k) expected += k + 1;
    CHECK(enumerate_elements(Type::bang(Type::atom("c")), n, two).size() == expected);
  }
  // c ⊗ !c: one of two points and a bag, sizes 1 + 2k
  for (std::size_t n = 0; n <= 7; ++n) {
    std::size_t expected = 0;
    for (std::size_t k = 0; n >= 1 && 1 + 2 * k <= n; ++k) expected += 2 * (k + 1);
    CHECK(enumerate_elements(Type::tensor(Type::atom("c"), Type::bang(Type::atom("c"))), n, two).size() == expected);
  }
}

TEST_CASE("budget exhaustion is reported") {
  AtomTable wide = {{"c", {"0", "1", "2", "3", "4", "5", "6", "7"}}};
  try {
    enumerate_elements(Type::bang(Type::atom("c")), 12, wide, 50);
    FAIL("enumeration did not stop");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExhausted);
  }
}

TEST_CASE("membership checks carriers and shapes") {
  CHECK(element_of(x(), a, atoms));
  CHECK_FALSE(element_of(Element::atom("y"), a, atoms));
  CHECK(element_of(bag({x(), x()}), Type::bang(a), atoms));
  CHECK_FALSE(element_of(x(), Type::bang(a), atoms));
  CHECK(element_of(Element::tuple({x(), Element::atom("y")}), Type::tensor(a, b), atoms));
  CHECK(element_of(Element::tag(2, Element::atom("y")), Type::biproduct(a, b), atoms));
  CHECK_THROWS_AS(element_of(x(), Type::atom("q"), atoms), Error);
}

TEST_CASE("bag splittings are all ordered decompositions") {
  auto s = bag_splittings(bag({x(), x()}));
  std::vector<std::pair<Element, Element>> expected = {
      {bag({}), bag({x(), x()})}, {bag({x()}), bag({x()})}, {bag({x(), x()}), bag({})}};
  std::sort(s.begin(), s.end());
  std::sort(expected.begin(), expected.end());
  CHECK(s == expected);
  // 2^k splittings of k distinct items
  auto d = bag_splittings(bag({Element::atom("0"), Element::atom("1"), Element::atom("2")}));
  CHECK(d.size() == 8);
}

TEST_CASE("terms typecheck") {
  Signature sig;
  Typing t = typecheck(Term::id(a), sig);
  CHECK(t.dom == a);
  CHECK(t.cod == a);

  Typing dw = typecheck(Term::compose(Term::deriving(a), Term::weak(Type::forget(a))), sig);
  CHECK(dw.dom == Type::tensor(Type::bang(a), a));
  CHECK(dw.cod == Type::unit());

  try {
    typecheck(Term::compose(Term::counit(a), Term::id(b)), sig);
    FAIL("mistyped composite accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
  CHECK_THROWS_AS(typecheck(Term::generator("g", a, a), sig), Error);
}

TEST_CASE("terms round trip through JSON") {
  Type x = Type::cart_atom("a");
  std::vector<Term> ts = {
      Term::compose({Term::deriving(a), Term::contr(Type::forget(a)), Term::tensor(Term::id(Type::bang(a)), Term::counit(a))}),
      Term::pair(Term::proj(1, x, x), Term::terminal_to(x)),
      Term::sum(Term::zero(a, b), Term::generator("g", a, b)),
      Term::dx(Term::diag(x)),
      Term::inj(2, a, b),
  };
  for (const auto& t : ts) {
    Term back = Term::from_json(t.to_json());
    CHECK(back.to_json() == t.to_json());
    CHECK(back.str() == t.str());
  }
  CHECK_THROWS_AS(Term::from_json(nlohmann::json::parse(R"({"Nope": {}})")), Error);
}
