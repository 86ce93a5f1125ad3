#include "dill/lnl.hpp"

#include "dill/error.hpp"

namespace dill {

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::Deriving: return "deriving";
    case Mutation::Dereliction: return "dereliction";
    case Mutation::Contraction: return "contraction";
  }
  return "none";
}

Mutation mutation_from_name(const std::string& s) {
  for (auto m : {Mutation::None, Mutation::Deriving, Mutation::Dereliction, Mutation::Contraction}) {
    if (s == mutation_name(m)) return m;
  }
  throw Error(ErrorKind::Parse, "unknown mutation '" + s + "'");
}

RelMor Exponential::d(const Type& a) const {
  return mutation == Mutation::Dereliction ? rel::mutant_dereliction(a) : rel::dereliction(a);
}
RelMor Exponential::w(const Type& a) const { return rel::weakening(a); }
RelMor Exponential::c(const Type& a) const {
  return mutation == Mutation::Contraction ? rel::mutant_contraction(a) : rel::contraction(a);
}
RelMor Exponential::p(const Type& a) const { return rel::comult(a); }
RelMor Exponential::deriving(const Type& a) const {
  return mutation == Mutation::Deriving ? rel::mutant_deriving(a) : rel::deriving(a);
}

RelMor LnlModel::deriving(const Type&) const {
  throw Error(ErrorKind::UnsupportedConstructor, "model '" + id() + "' has no deriving transform");
}

CMor LnlModel::c_chain(std::initializer_list<CMor> chain) const {
  auto it = chain.begin();
  CMor acc = *it++;
  for (; it != chain.end(); ++it) acc = c_compose(acc, *it);
  return acc;
}

CMor LnlModel::diag(const Type& x) const { return pair(c_id(x), c_id(x)); }

CMor LnlModel::c_prod(const CMor& f, const CMor& g) const {
  return pair(c_compose(proj1(f.dom, g.dom), f), c_compose(proj2(f.dom, g.dom), g));
}

CMor LnlModel::c_sym(const Type& x, const Type& y) const { return pair(proj2(x, y), proj1(x, y)); }

RelMor LnlModel::contraction(const Type& x) const { return contraction_derived(x); }
RelMor LnlModel::weakening(const Type& x) const { return weakening_derived(x); }
RelMor LnlModel::comult(const Type& a) const { return comult_derived(a); }
RelMor LnlModel::bang(const RelMor& u) const { return bang_derived(u); }
RelMor LnlModel::bang_lax(const Type& a, const Type& b) const { return bang_lax_derived(a, b); }

RelMor LnlModel::bang_lax_unit() const { return rel::compose(m_unit(), F(n_unit())); }

RelMor LnlModel::contraction_derived(const Type& x) const { return rel::compose(F(diag(x)), m_inv(x, x)); }

RelMor LnlModel::weakening_derived(const Type& x) const {
  return rel::compose(F(terminal_map(x)), m_unit_inv());
}

RelMor LnlModel::comult_derived(const Type& a) const { return F(eta(U(a))); }

RelMor LnlModel::bang_derived(const RelMor& u) const { return F(U(u)); }

RelMor LnlModel::bang_lax_derived(const Type& a, const Type& b) const {
  return rel::compose(m(U(a), U(b)), F(n(a, b)));
}

RelMor LnlModel::colax_p(const Type& x, const Type& y) const {
  CMor etas = c_prod(eta(x), eta(y));
  CMor lax = n(F(x), F(y));
  return rel::compose(F(c_compose(etas, lax)), counit(Type::tensor(F(x), F(y))));
}

RelMor LnlModel::colax_p_unit() const { return rel::compose(F(n_unit()), counit(Type::unit())); }

CMor LnlModel::lax_from_colax(const Type& a, const Type& b) const {
  Type ua = U(a), ub = U(b);
  return c_chain({eta(prod(ua, ub)), U(colax_p(ua, ub)), U(rel::tensor(counit(a), counit(b)))});
}

CMor LnlModel::lax_from_colax_unit() const { return c_compose(eta(terminal()), U(colax_p_unit())); }

CMor LnlModel::dagger(const RelMor& f) const {
  auto x = unF(f.dom());
  if (!x) throw Error(ErrorKind::DomainNotFree, "dagger needs a domain F(X), got " + f.dom().str());
  return c_compose(eta(*x), U(f));
}

namespace {

class KleisliRel final : public LnlModel {
 public:
  KleisliRel(AtomTable atoms, Mutation mutation) : LnlModel(std::move(atoms)) { exp_.mutation = mutation; }

  std::string id() const override {
    return exp_.mutation == Mutation::None ? "kleisli-of-rel"
                                           : std::string("kleisli-of-rel/mutant-") + mutation_name(exp_.mutation);
  }

  Type prod(const Type& x, const Type& y) const override { return Type::biproduct(x, y); }
  Type terminal() const override { return Type::zero(); }
  CMor c_id(const Type& x) const override { return {x, x, exp_.d(x)}; }
  CMor c_compose(const CMor& f, const CMor& g) const override {
    if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "C-compose " + f.cod.str() + " vs " + g.dom.str());
    return {f.dom, g.cod, rel::compose(rel::promote(f.rel), g.rel)};
  }
  CMor pair(const CMor& f, const CMor& g) const override {
    return {f.dom, prod(f.cod, g.cod), rel::pairing(f.rel, g.rel)};
  }
  CMor proj1(const Type& x, const Type& y) const override {
    return {prod(x, y), x, rel::compose(exp_.d(prod(x, y)), rel::proj(1, x, y))};
  }
  CMor proj2(const Type& x, const Type& y) const override {
    return {prod(x, y), y, rel::compose(exp_.d(prod(x, y)), rel::proj(2, x, y))};
  }
  CMor terminal_map(const Type& x) const override { return {x, terminal(), rel::zero(Type::bang(x), terminal())}; }

  Type F(const Type& x) const override { return Type::bang(x); }
  Type U(const Type& a) const override { return a; }
  std::optional<Type> unF(const Type& a) const override {
    if (a.kind() == TypeKind::Bang) return a.inner();
    return std::nullopt;
  }
  RelMor F(const CMor& f) const override { return rel::promote(f.rel); }
  CMor U(const RelMor& u) const override { return {u.dom(), u.cod(), rel::compose(exp_.d(u.dom()), u)}; }
  RelMor m(const Type& x, const Type& y) const override { return rel::seely_inv(x, y); }
  RelMor m_inv(const Type& x, const Type& y) const override { return rel::seely(x, y); }
  RelMor m_unit() const override { return rel::coweakening(Type::zero()); }
  RelMor m_unit_inv() const override { return exp_.w(Type::zero()); }
  CMor n(const Type& a, const Type& b) const override {
    return {prod(a, b), Type::tensor(a, b), rel::compose(rel::seely(a, b), rel::tensor(exp_.d(a), exp_.d(b)))};
  }
  CMor n_unit() const override { return {terminal(), Type::unit(), exp_.w(Type::zero())}; }
  CMor eta(const Type& x) const override { return {x, Type::bang(x), rel::id(Type::bang(x))}; }
  RelMor counit(const Type& a) const override { return exp_.d(a); }
  bool additive() const override { return true; }
  bool has_deriving() const override { return true; }
  RelMor deriving(const Type& a) const override { return exp_.deriving(a); }
  const Exponential* exponential() const override { return &exp_; }

  RelMor contraction(const Type& x) const override { return exp_.c(x); }
  RelMor weakening(const Type& x) const override { return exp_.w(x); }
  RelMor comult(const Type& a) const override { return exp_.p(a); }
  RelMor bang(const RelMor& u) const override {
    // !u = prom(𝐝;u) only while 𝐝 is the genuine dereliction
    if (exp_.mutation == Mutation::Dereliction) return bang_derived(u);
    return rel::bang_map(u);
  }

 private:
  Exponential exp_;
};

class TrivialFinSet final : public LnlModel {
 public:
  explicit TrivialFinSet(AtomTable atoms) : LnlModel(std::move(atoms)) {}

  std::string id() const override { return "trivial"; }

  Type prod(const Type& x, const Type& y) const override { return Type::tensor(x, y); }
  Type terminal() const override { return Type::unit(); }
  CMor c_id(const Type& x) const override { return {x, x, rel::id(x)}; }
  CMor c_compose(const CMor& f, const CMor& g) const override {
    if (f.cod != g.dom) throw Error(ErrorKind::TypeMismatch, "C-compose " + f.cod.str() + " vs " + g.dom.str());
    return {f.dom, g.cod, rel::compose(f.rel, g.rel)};
  }
  CMor pair(const CMor& f, const CMor& g) const override {
    return {f.dom, prod(f.cod, g.cod), rel::compose(rel::copy(f.dom), rel::tensor(f.rel, g.rel))};
  }
  CMor proj1(const Type& x, const Type& y) const override {
    return {prod(x, y), x, rel::tensor(rel::id(x), rel::discard(y))};
  }
  CMor proj2(const Type& x, const Type& y) const override {
    return {prod(x, y), y, rel::tensor(rel::discard(x), rel::id(y))};
  }
  CMor terminal_map(const Type& x) const override { return {x, terminal(), rel::discard(x)}; }

  Type F(const Type& x) const override { return x; }
  Type U(const Type& a) const override { return a; }
  std::optional<Type> unF(const Type& a) const override { return a; }
  RelMor F(const CMor& f) const override { return f.rel; }
  CMor U(const RelMor& u) const override { return {u.dom(), u.cod(), u}; }
  RelMor m(const Type& x, const Type& y) const override { return rel::id(Type::tensor(x, y)); }
  RelMor m_inv(const Type& x, const Type& y) const override { return rel::id(Type::tensor(x, y)); }
  RelMor m_unit() const override { return rel::id(Type::unit()); }
  RelMor m_unit_inv() const override { return rel::id(Type::unit()); }
  CMor n(const Type& a, const Type& b) const override { return c_id(Type::tensor(a, b)); }
  CMor n_unit() const override { return c_id(Type::unit()); }
  CMor eta(const Type& x) const override { return c_id(x); }
  RelMor counit(const Type& a) const override { return rel::id(a); }
};

}  // namespace

std::shared_ptr<LnlModel> rel_lnl(AtomTable atoms, Mutation mutation) {
  return std::make_shared<KleisliRel>(std::move(atoms), mutation);
}

std::shared_ptr<LnlModel> trivial_lnl(AtomTable atoms) { return std::make_shared<TrivialFinSet>(std::move(atoms)); }

}  // namespace dill
