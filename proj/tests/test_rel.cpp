#include <doctest.h>

#include <functional>

#include "dill/equal.hpp"
#include "dill/error.hpp"
#include "dill/rel.hpp"

using namespace dill;

namespace {

const AtomTable atoms = {{"a", {"x"}}, {"b", {"0", "1"}}};
const Type a = Type::atom("a");
const Type b = Type::atom("b");

Element bag(std::vector<Element> items) { return Element::bag(std::move(items)); }
Element at(const char* s) { return Element::atom(s); }

// Brute force: every codomain element up to the bound that the predicate relates to x.
Image oracle(const Type& cod, std::size_t bound, const std::function<bool(const Element&)>& related) {
  Image out;
  for (const auto& y : enumerate_elements(cod, bound, atoms)) {
    if (related(y)) out.push_back(y);
  }
  normalize(out);
  return out;
}

Image sorted(Image img) {
  normalize(img);
  return img;
}

Element flatten(const Element& bags) {
  std::vector<Element> items;
  for (const auto& m : bags.items()) items.insert(items.end(), m.items().begin(), m.items().end());
  return bag(items);
}

}  // namespace

TEST_CASE("deriving adds the new point") {
  RelMor d = rel::deriving(a);
  CHECK(d.image(Element::tuple({bag({at("x")}), at("x")}), 6) == Image{bag({at("x"), at("x")})});
  CHECK(d.image(Element::tuple({bag({}), at("x")}), 6) == Image{bag({at("x")})});
}

TEST_CASE("contraction enumerates splittings") {
  RelMor c = rel::contraction(a);
  Element m = bag({at("x"), at("x")});
  Image expected = sorted({Element::tuple({bag({}), m}), Element::tuple({bag({at("x")}), bag({at("x")})}),
                           Element::tuple({m, bag({})})});
  CHECK(c.image(m, 8) == expected);
  RelMor cb = rel::contraction(b);
  for (const auto& x : enumerate_elements(Type::bang(b), 6, atoms)) {
    Image want = oracle(cb.cod(), 6, [&](const Element& y) { return bag_union(y.items()[0], y.items()[1]) == x; });
    CHECK(cb.image(x, 6) == want);
  }
}

TEST_CASE("weakening and dereliction") {
  RelMor w = rel::weakening(a);
  CHECK(w.image(bag({}), 4) == Image{Element::star()});
  CHECK(w.image(bag({at("x")}), 4).empty());
  RelMor d = rel::dereliction(a);
  CHECK(d.image(bag({at("x")}), 4) == Image{at("x")});
  CHECK(d.image(bag({}), 4).empty());
  CHECK(d.image(bag({at("x"), at("x")}), 4).empty());
}

TEST_CASE("digging enumerates multiset partitions") {
  RelMor p = rel::comult(b);
  for (const auto& x : enumerate_elements(Type::bang(b), 4, atoms)) {
    Image want = oracle(p.cod(), 6, [&](const Element& y) { return flatten(y) == x; });
    CHECK(p.image(x, 6) == want);
  }
  Image at_x = p.image(bag({at("0")}), 6);
  CHECK(std::find(at_x.begin(), at_x.end(), bag({bag({at("0")})})) != at_x.end());
  CHECK(std::find(at_x.begin(), at_x.end(), bag({bag({}), bag({at("0")})})) != at_x.end());
}

TEST_CASE("promotion at the empty bag") {
  RelMor d = rel::dereliction(b);
  CHECK(rel::promote(d).image(bag({}), 6) == Image{bag({})});
  RelMor prom = rel::promote(rel::weakening(b));
  // every bag of stars, each star reached from an empty sub-bag
  Image img = prom.image(bag({}), 4);
  CHECK(img == oracle(prom.cod(), 4, [](const Element&) { return true; }));
}

TEST_CASE("promotion of dereliction is the identity") {
  Budget budget{5, 1u << 16, 1};
  Comparison c = mor_equal(rel::promote(rel::dereliction(b)), rel::id(Type::bang(b)), atoms, budget);
  CHECK(c.outcome != Outcome::Distinct);
}

TEST_CASE("seely isomorphism sorts by tag") {
  RelMor s = rel::seely(a, b);
  Element m = bag({Element::tag(1, at("x")), Element::tag(2, at("1")), Element::tag(2, at("0"))});
  CHECK(s.image(m, 10) == Image{Element::tuple({bag({at("x")}), bag({at("0"), at("1")})})});
  Budget budget{4, 1u << 16, 1};
  CHECK(mor_equal(rel::compose(s, rel::seely_inv(a, b)), rel::id(s.dom()), atoms, budget).outcome != Outcome::Distinct);
  CHECK(mor_equal(rel::compose(rel::seely_inv(a, b), s), rel::id(s.cod()), atoms, budget).outcome != Outcome::Distinct);
}

TEST_CASE("composition matches a hand table") {
  RelMor f = rel::table(b, b, {{at("0"), at("1")}, {at("1"), at("0")}, {at("1"), at("1")}}, "f");
  RelMor g = rel::table(b, a, {{at("1"), at("x")}}, "g");
  RelMor fg = rel::compose(f, g);
  CHECK(fg.image(at("0"), 3) == Image{at("x")});
  CHECK(fg.image(at("1"), 3) == Image{at("x")});
  RelMor ff = rel::compose(f, f);
  CHECK(ff.image(at("0"), 3) == sorted({at("0"), at("1")}));
  CHECK(rel::compose(rel::id(b), f).image(at("1"), 3) == f.image(at("1"), 3));
}

TEST_CASE("maps into the unit through weakening only see the empty bag") {
  RelMor dw = rel::compose(rel::dereliction(a), rel::table(a, Type::unit(), {{at("x"), Element::star()}}));
  CHECK(dw.image(bag({at("x")}), 4) == Image{Element::star()});
  CHECK(rel::compose(rel::deriving(a), rel::weakening(a)).image(Element::tuple({bag({}), at("x")}), 4).empty());
  RelMor ww = rel::compose(rel::contraction(a), rel::tensor(rel::weakening(a), rel::weakening(a)));
  CHECK(ww.image(bag({at("x")}), 4).empty());
  CHECK(ww.image(bag({}), 4) == Image{Element::star()});
}

TEST_CASE("sum and zero") {
  RelMor z = rel::zero(b, b);
  CHECK(rel::sum(z, z).image(at("0"), 3).empty());
  RelMor f = rel::table(b, b, {{at("0"), at("1")}});
  CHECK(rel::sum(f, rel::id(b)).image(at("0"), 3) == sorted({at("0"), at("1")}));
}

TEST_CASE("tensor and biproduct plumbing") {
  RelMor f = rel::table(b, b, {{at("0"), at("1")}, {at("1"), at("0")}});
  RelMor t = rel::tensor(f, rel::id(a));
  CHECK(t.image(Element::tuple({at("0"), at("x")}), 4) == Image{Element::tuple({at("1"), at("x")})});
  RelMor s = rel::sym(a, b);
  CHECK(s.image(Element::tuple({at("x"), at("0")}), 4) == Image{Element::tuple({at("0"), at("x")})});
  CHECK(rel::inj(2, a, b).image(at("1"), 4) == Image{Element::tag(2, at("1"))});
  CHECK(rel::proj(1, a, b).image(Element::tag(2, at("1")), 4).empty());
  RelMor dist = rel::dist(a, a, b);
  CHECK(dist.image(Element::tuple({at("x"), Element::tag(2, at("0"))}), 4) ==
        Image{Element::tag(2, Element::tuple({at("x"), at("0")}))});
}

TEST_CASE("bounded equality finds the smallest witness") {
  Budget budget{4, 1u << 16, 1};
  RelMor lhs = rel::compose(rel::deriving(a), rel::dereliction(a));
  RelMor rhs = rel::tensor(rel::weakening(a), rel::id(a));
  CHECK(mor_equal(lhs, rhs, atoms, budget).outcome == Outcome::EqualUpToBudget);

  RelMor zero = rel::compose(rel::deriving(a), rel::weakening(a));
  RelMor nonzero = rel::tensor(rel::weakening(a), rel::table(a, Type::unit(), {{at("x"), Element::star()}}));
  Comparison c = mor_equal(zero, nonzero, atoms, budget);
  REQUIRE(c.outcome == Outcome::Distinct);
  CHECK(c.witness->input == Element::tuple({bag({}), at("x")}));
  CHECK(c.witness->lhs.empty());
  CHECK(c.witness->rhs == Image{Element::star()});

  CHECK(mor_equal(rel::id(a), rel::compose(rel::id(a), rel::id(a)), atoms, budget).outcome == Outcome::Equal);
}

TEST_CASE("mutants differ from the real maps") {
  Budget budget{4, 1u << 16, 1};
  CHECK(mor_equal(rel::mutant_deriving(a), rel::deriving(a), atoms, budget).outcome == Outcome::Distinct);
  CHECK(mor_equal(rel::mutant_dereliction(b), rel::dereliction(b), atoms, budget).outcome == Outcome::Distinct);
  CHECK(mor_equal(rel::mutant_contraction(a), rel::contraction(a), atoms, budget).outcome == Outcome::Distinct);
}
