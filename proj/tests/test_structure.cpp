#include <doctest.h>

#include <algorithm>

#include "dill/gdsc.hpp"
#include "dill/verify.hpp"

using namespace dill;

namespace {

const AtomTable atoms = {{"a", {"x"}}, {"b", {"0", "1"}}};
const Type a = Type::atom("a");
const Type b = Type::atom("b");
const Budget budget{4, 1u << 16, 1};

Element bag(std::vector<Element> items) { return Element::bag(std::move(items)); }
Element at(const char* s) { return Element::atom(s); }

bool same(const Comparison& c) { return c.outcome != Outcome::Distinct; }

}  // namespace

TEST_CASE("Kleisli adjunction basics") {
  auto m = rel_lnl(atoms);
  CHECK(m->F(a) == Type::bang(a));
  CHECK(m->terminal() == Type::zero());
  CHECK(same(mor_equal(m->eta(a).rel, rel::id(Type::bang(a)), atoms, budget)));
  CHECK(same(mor_equal(m->counit(a), rel::dereliction(a), atoms, budget)));
  // dagger of the counit is the identity on U(a)
  CHECK(same(cmor_equal(*m, m->dagger(m->counit(a)), m->c_id(m->U(a)), budget)));
  CHECK(same(mor_equal(m->bang(rel::id(b)), rel::id(Type::bang(b)), atoms, budget)));
}

TEST_CASE("derived comonoid in the Kleisli model") {
  auto m = rel_lnl(atoms);
  Element xx = bag({at("x"), at("x")});
  Image img = m->contraction(a).image(xx, 6);
  CHECK(img.size() == 3);
  CHECK(std::find(img.begin(), img.end(), Element::tuple({bag({at("x")}), bag({at("x")})})) != img.end());
  CHECK(m->weakening(a).image(bag({}), 4) == Image{Element::star()});
  CHECK(m->weakening(a).image(bag({at("x")}), 4).empty());
  CHECK(same(mor_equal(m->contraction(b), m->contraction_derived(b), atoms, budget)));
  CHECK(same(mor_equal(m->weakening(b), m->weakening_derived(b), atoms, budget)));
  CHECK(same(mor_equal(m->comult(b), m->comult_derived(b), atoms, budget)));
}

TEST_CASE("lax and colax structure are inverse") {
  auto m = rel_lnl(atoms);
  RelMor p = m->colax_p(a, b);
  CHECK(same(mor_equal(rel::compose(m->m(a, b), p), rel::id(p.cod()), atoms, budget)));
  CHECK(same(mor_equal(rel::compose(p, m->m(a, b)), rel::id(p.dom()), atoms, budget)));
  CHECK(same(cmor_equal(*m, m->lax_from_colax(a, b), m->n(a, b), budget)));
  CHECK(same(cmor_equal(*m, m->lax_from_colax_unit(), m->n_unit(), budget)));
}

TEST_CASE("trivial model collapses the adjunction") {
  auto m = trivial_lnl(atoms);
  CHECK(m->F(b) == b);
  CHECK(same(mor_equal(m->colax_p(a, b), rel::id(Type::tensor(a, b)), atoms, budget)));
  CHECK(same(mor_equal(m->contraction(b), rel::copy(b), atoms, budget)));
  CHECK(m->contraction(b).image(at("1"), 4) == Image{Element::tuple({at("1"), at("1")})});
}

TEST_CASE("linear simple category identities and lifts") {
  auto m = rel_lnl(atoms);
  Fib fib(m);
  LSObj o{b, a};
  LSMor id = fib.ls_id(o);
  CHECK(same(lsmor_equal(*m, fib.ls_compose(id, id), id, budget)));
  CMor f{b, b, rel::table(Type::bang(b), b, {{bag({at("0")}), at("1")}, {bag({at("1")}), at("0")}})};
  LSMor l = fib.lift(f, a);
  CHECK(same(lsmor_equal(*m, fib.ls_compose(id, l), l, budget)));
  CHECK(same(lsmor_equal(*m, fib.ls_compose(l, fib.ls_id(l.cod)), l, budget)));

  VMor v = fib.v_id(b, a);
  VMor r = fib.reindex(m->c_id(b), v);
  CHECK(same(vmor_equal(*m, r, v, budget)));
  CHECK(same(vmor_equal(*m, fib.fibre_tensor(v, fib.v_id(b, b)), fib.v_id(b, Type::tensor(a, b)), budget)));
}

TEST_CASE("fibred adjunction on identities") {
  auto m = rel_lnl(atoms);
  Fib fib(m);
  LSObj o{b, a};
  SObj so = fib.U_S(o);
  CHECK(same(smor_equal(*m, fib.U_S(fib.ls_id(o)), fib.s_id(so), budget)));
  CHECK(same(lsmor_equal(*m, fib.F_S(fib.s_id(so)), fib.ls_id(fib.F_S(so)), budget)));
  CHECK(same(cmor_equal(*m, fib.comprehension(fib.s_id(so)), m->c_id(m->prod(so.base, so.fibre)), budget)));
  CHECK(same(lsmor_equal(*m, fib.bang_S(fib.ls_id(o)), fib.ls_id(fib.bang_S(o)), budget)));
}

TEST_CASE("weakening functor") {
  auto m = rel_lnl(atoms);
  Fib fib(m);
  // over the unit base the context is I × U(a), here 0 ⊕ a
  LSObj over_unit{m->terminal(), a};
  CHECK(fib.W(over_unit) == LSObj{m->prod(m->terminal(), m->U(a)), a});
  LSObj triv = Fib(trivial_lnl(atoms)).W(LSObj{Type::unit(), a});
  CHECK(triv.fibre == a);
  LSObj o{b, a};
  CHECK(same(lsmor_equal(*m, fib.W(fib.ls_id(o)), fib.ls_id(fib.W(o)), budget)));
}

TEST_CASE("sigma counit on identities") {
  auto m = rel_lnl(atoms);
  Fib fib(m);
  VMor s = fib.sigma(b, a, fib.v_id(m->prod(b, a), b));
  VMor mu = fib.mu(b, a, b);
  CHECK(same(vmor_equal(*m, fib.v_compose(s, mu), mu, budget)));
}

TEST_CASE("tangent of identities satisfies the linear rule") {
  auto m = rel_lnl(atoms);
  auto t = tangent_from_dsc(m, budget);
  LSMor ti = t->T(m->c_id(a));
  RelMor rhs = rel::tensor(rel::weakening(a), rel::id(a));
  CHECK(same(mor_equal(ti.u, rhs, atoms, budget)));
  // a constant Kleisli map has a zero tangent
  CMor constant{a, Type::unit(), rel::weakening(a)};
  CHECK(t->T(constant).u.image(Element::tuple({bag({}), at("x")}), 6).empty());
  CHECK(t->T(constant).u.image(Element::tuple({bag({at("x")}), at("x")}), 6).empty());
}

TEST_CASE("dual-number style derivative of a Kleisli map") {
  auto m = rel_lnl(atoms);
  auto t = tangent_from_dsc(m, budget);
  // reads a two-point bag
  CMor f{b, b, rel::table(Type::bang(b), b, {{bag({at("0"), at("1")}), at("1")}})};
  CMor lhs = t->d_times(f);
  CMor rhs = t->d_times_kleisli(f);
  CHECK(same(cmor_equal(*m, lhs, rhs, budget)));
}

TEST_CASE("trivial model passes its structural suites") {
  SuiteReport rep = run_suites(trivial_lnl({{"a", {"x"}}}), {"lnl", "fibration"}, Budget{3, 1u << 16, 1}, 1);
  CHECK(rep.count(Verdict::Fail) == 0);
  CHECK(rep.count(Verdict::Pass) > 0);
}

TEST_CASE("mutants fail with small witnesses") {
  AtomTable one = {{"a", {"0"}}, {"b", {"0", "1"}}};
  Budget small{4, 1u << 16, 1};
  auto first_fail = [&](Mutation mut, const std::string& law) -> nlohmann::json {
    SuiteReport rep = run_suites(rel_lnl(one, mut), {"dsc"}, small, 1);
    for (const auto& c : rep.cases) {
      if (c.law == law && c.result.verdict == Verdict::Fail) return c.result.witness;
    }
    return nullptr;
  };
  nlohmann::json w = first_fail(Mutation::Deriving, "d.3");
  REQUIRE(!w.is_null());
  CHECK(w["input"] == nlohmann::json::parse(R"([{"bag": []}, "0"])"));
  CHECK(!first_fail(Mutation::Dereliction, "d.3").is_null());
  CHECK(!first_fail(Mutation::Contraction, "d.2").is_null());
}
