#include "dill/fib.hpp"

#include "dill/error.hpp"

namespace dill {

namespace {

void same_base(const Type& a, const Type& b, const char* ctx) {
  if (a != b) throw Error(ErrorKind::BaseMismatch, std::string(ctx) + ": " + a.str() + " vs " + b.str());
}

Comparison both(Comparison first, Comparison second) {
  if (first.outcome == Outcome::Distinct) return first;
  if (second.outcome == Outcome::Distinct) return second;
  second.checked += first.checked;
  if (first.outcome == Outcome::EqualUpToBudget) second.outcome = Outcome::EqualUpToBudget;
  return second;
}

}  // namespace

LSMor Fib::ls_compose(const LSMor& a, const LSMor& b) const {
  if (!(a.cod == b.dom)) {
    throw Error(ErrorKind::TypeMismatch, "LS compose: (" + a.cod.base.str() + ", " + a.cod.fibre.str() + ") vs (" +
                                             b.dom.base.str() + ", " + b.dom.fibre.str() + ")");
  }
  const Type& x = a.dom.base;
  RelMor u = rel::compose({rel::tensor(m_->contraction(x), rel::id(a.dom.fibre)), rel::tensor(m_->F(a.f), a.u), b.u});
  return {a.dom, b.cod, m_->c_compose(a.f, b.f), u};
}

LSMor Fib::ls_id(const LSObj& o) const {
  return {o, o, m_->c_id(o.base), rel::tensor(m_->weakening(o.base), rel::id(o.fibre))};
}

LSMor Fib::lift(const CMor& f, const Type& b) const {
  return {{f.dom, b}, {f.cod, b}, f, rel::tensor(m_->weakening(f.dom), rel::id(b))};
}

LSMor Fib::as_ls(const VMor& v) const { return {{v.base, v.dom}, {v.base, v.cod}, m_->c_id(v.base), v.u}; }

VMor Fib::as_vertical(const LSMor& g, const Budget& budget) const {
  if (g.f.dom != g.f.cod ||
      cmor_equal(*m_, g.f, m_->c_id(g.f.dom), budget).outcome == Outcome::Distinct) {
    throw Error(ErrorKind::NotVertical, "base map is not the identity on " + g.f.dom.str());
  }
  return {g.dom.base, g.dom.fibre, g.cod.fibre, g.u};
}

VMor Fib::v_id(const Type& x, const Type& a) const {
  return {x, a, a, rel::tensor(m_->weakening(x), rel::id(a))};
}

VMor Fib::v_compose(const VMor& a, const VMor& b) const {
  same_base(a.base, b.base, "vertical compose");
  LSMor g = ls_compose(as_ls(a), as_ls(b));
  return {a.base, a.dom, b.cod, g.u};
}

VMor Fib::reindex(const CMor& w, const VMor& v) const {
  same_base(w.cod, v.base, "reindex");
  return {w.dom, v.dom, v.cod, rel::compose(rel::tensor(m_->F(w), rel::id(v.dom)), v.u)};
}

VMor Fib::lift_vertical(const Type& x, const RelMor& l) const {
  return {x, l.dom(), l.cod(), rel::tensor(m_->weakening(x), l)};
}

VMor Fib::fibre_tensor(const VMor& a, const VMor& b) const {
  same_base(a.base, b.base, "fibre tensor");
  Type fx = m_->F(a.base);
  RelMor u = rel::compose({rel::tensor({m_->contraction(a.base), rel::id(a.dom), rel::id(b.dom)}),
                           rel::tensor({rel::id(fx), rel::sym(fx, a.dom), rel::id(b.dom)}), rel::tensor(a.u, b.u)});
  return {a.base, Type::tensor(a.dom, b.dom), Type::tensor(a.cod, b.cod), u};
}

VMor Fib::fibre_with(const VMor& a, const VMor& b) const {
  same_base(a.base, b.base, "fibre with");
  Type fx = m_->F(a.base);
  RelMor u = rel::compose(rel::dist(fx, a.dom, b.dom), rel::biprod(a.u, b.u));
  return {a.base, Type::biproduct(a.dom, b.dom), Type::biproduct(a.cod, b.cod), u};
}

VMor Fib::fibre_pair(const VMor& a, const VMor& b) const {
  same_base(a.base, b.base, "fibre pair");
  return {a.base, a.dom, Type::biproduct(a.cod, b.cod), rel::pairing(a.u, b.u)};
}

VMor Fib::fibre_proj(int i, const Type& x, const Type& a, const Type& b) const {
  return lift_vertical(x, rel::proj(i, a, b));
}

VMor Fib::fibre_inj(int i, const Type& x, const Type& a, const Type& b) const {
  return lift_vertical(x, rel::inj(i, a, b));
}

VMor Fib::fibre_sum(const VMor& a, const VMor& b) const {
  same_base(a.base, b.base, "fibre sum");
  return {a.base, a.dom, a.cod, rel::sum(a.u, b.u)};
}

VMor Fib::fibre_zero(const Type& x, const Type& a, const Type& b) const {
  return {x, a, b, rel::zero(Type::tensor(m_->F(x), a), b)};
}

VMor Fib::fibre_sym(const Type& x, const Type& a, const Type& b) const {
  return lift_vertical(x, rel::sym(a, b));
}

SMor Fib::s_compose(const SMor& a, const SMor& b) const {
  if (!(a.cod == b.dom)) throw Error(ErrorKind::TypeMismatch, "S compose: codomain and domain differ");
  const Type& x = a.dom.base;
  const Type& j = a.dom.fibre;
  const LnlModel& m = *m_;
  Type xx = m.prod(x, x);
  // (X×X)×J -> X×(X×J)
  CMor assoc = m.pair(m.c_compose(m.proj1(xx, j), m.proj1(x, x)),
                      m.pair(m.c_compose(m.proj1(xx, j), m.proj2(x, x)), m.proj2(xx, j)));
  CMor u = m.c_chain({m.c_prod(m.diag(x), m.c_id(j)), assoc, m.c_prod(a.f, a.u), b.u});
  return {a.dom, b.cod, m.c_compose(a.f, b.f), u};
}

SMor Fib::s_compose_direct(const SMor& a, const SMor& b) const {
  const LnlModel& m = *m_;
  CMor u = m.c_compose(m.pair(m.c_compose(m.proj1(a.dom.base, a.dom.fibre), a.f), a.u), b.u);
  return {a.dom, b.cod, m.c_compose(a.f, b.f), u};
}

SMor Fib::s_id(const SObj& o) const { return {o, o, m_->c_id(o.base), m_->proj2(o.base, o.fibre)}; }

SMor Fib::s_lift(const CMor& f, const Type& k) const {
  return {{f.dom, k}, {f.cod, k}, f, m_->proj2(f.dom, k)};
}

SMor Fib::s_reindex(const CMor& w, const SMor& v) const {
  same_base(w.cod, v.dom.base, "S reindex");
  const LnlModel& m = *m_;
  CMor u = m.c_compose(m.c_prod(w, m.c_id(v.dom.fibre)), v.u);
  return {{w.dom, v.dom.fibre}, {w.dom, v.cod.fibre}, m.c_id(w.dom), u};
}

SObj Fib::U_S(const LSObj& o) const { return {o.base, m_->U(o.fibre)}; }

LSObj Fib::F_S(const SObj& o) const { return {o.base, m_->F(o.fibre)}; }

SMor Fib::U_S(const LSMor& g) const {
  const LnlModel& m = *m_;
  const Type& x = g.dom.base;
  const Type& a = g.dom.fibre;
  CMor u = m.c_chain({m.c_prod(m.eta(x), m.c_id(m.U(a))), m.n(m.F(x), a), m.U(g.u)});
  return {U_S(g.dom), U_S(g.cod), g.f, u};
}

LSMor Fib::F_S(const SMor& g) const {
  return {F_S(g.dom), F_S(g.cod), g.f, rel::compose(m_->m(g.dom.base, g.dom.fibre), m_->F(g.u))};
}

SMor Fib::eta_S(const SObj& o) const {
  const LnlModel& m = *m_;
  return {o, {o.base, m.U(m.F(o.fibre))}, m.c_id(o.base), m.c_compose(m.proj2(o.base, o.fibre), m.eta(o.fibre))};
}

VMor Fib::counit_S(const Type& x, const Type& a) const {
  return {x, m_->bang_obj(a), a, rel::tensor(m_->weakening(x), m_->counit(a))};
}

LSObj Fib::bang_S(const LSObj& o) const { return {o.base, m_->bang_obj(o.fibre)}; }

LSMor Fib::bang_S(const LSMor& g) const {
  const LnlModel& m = *m_;
  const Type& x = g.dom.base;
  const Type& a = g.dom.fibre;
  if (m.F(x).kind() == TypeKind::Bang && m.bang_obj(a) == Type::bang(a) && m.bang_obj(g.cod.fibre) == Type::bang(g.cod.fibre)) {
    return {bang_S(g.dom), bang_S(g.cod), g.f, rel::bang_in_context(g.u, m.F(x), a)};
  }
  return bang_S_derived(g);
}

LSMor Fib::bang_S_derived(const LSMor& g) const {
  const LnlModel& m = *m_;
  const Type& x = g.dom.base;
  const Type& a = g.dom.fibre;
  RelMor u = rel::compose({rel::tensor(m.F(m.eta(x)), rel::id(m.bang_obj(a))), m.bang_lax(m.F(x), a), m.bang(g.u)});
  return {bang_S(g.dom), bang_S(g.cod), g.f, u};
}

VMor Fib::comult_S(const Type& x, const Type& a) const { return lift_vertical(x, m_->comult(a)); }

VMor Fib::contraction_S(const Type& x, const Type& j) const { return lift_vertical(x, m_->contraction(j)); }

VMor Fib::weakening_S(const Type& x, const Type& j) const { return lift_vertical(x, m_->weakening(j)); }

CMor Fib::comprehension(const SMor& g) const {
  const LnlModel& m = *m_;
  return m.pair(m.c_compose(m.proj1(g.dom.base, g.dom.fibre), g.f), g.u);
}

CMor Fib::banana(const LSMor& g) const { return comprehension(U_S(g)); }

VMor Fib::sigma(const Type& x, const Type& j, const VMor& v) const {
  const LnlModel& m = *m_;
  same_base(v.base, m.prod(x, j), "Σ");
  Type fx = m.F(x), fj = m.F(j);
  RelMor u = rel::compose({
      rel::tensor({rel::id(fx), m.contraction(j), rel::id(v.dom)}),
      rel::tensor(rel::sym(fx, fj), rel::id(Type::tensor(fj, v.dom))),
      rel::tensor(rel::id(fj), rel::compose(rel::tensor(m.m(x, j), rel::id(v.dom)), v.u)),
  });
  return {x, Type::tensor(fj, v.dom), Type::tensor(fj, v.cod), u};
}

VMor Fib::nu(const Type& x, const Type& j, const Type& a) const {
  const LnlModel& m = *m_;
  Type fj = m.F(j);
  RelMor u = rel::compose(rel::tensor(m.m_inv(x, j), rel::id(a)),
                          rel::tensor(m.weakening(x), rel::id(Type::tensor(fj, a))));
  return {m.prod(x, j), a, Type::tensor(fj, a), u};
}

VMor Fib::mu(const Type& x, const Type& j, const Type& a) const {
  const LnlModel& m = *m_;
  return {x, Type::tensor(m.F(j), a), a, rel::tensor({m.weakening(x), m.weakening(j), rel::id(a)})};
}

VMor Fib::pi1_star(const Type& x, const Type& j, const VMor& v) const { return reindex(m_->proj1(x, j), v); }

VMor Fib::delta(const Type& x, const Type& j, const Type& a) const { return sigma(x, j, nu(x, j, a)); }

LSObj Fib::W(const LSObj& o) const { return {m_->prod(o.base, m_->U(o.fibre)), o.fibre}; }

LSMor Fib::W(const LSMor& g) const {
  const LnlModel& m = *m_;
  const Type& x = g.dom.base;
  const Type& a = g.dom.fibre;
  RelMor u = rel::compose(rel::tensor(m.F(m.proj1(x, m.U(a))), rel::id(a)), g.u);
  return {W(g.dom), W(g.cod), banana(g), u};
}

Comparison cmor_equal(const LnlModel& m, const CMor& a, const CMor& b, const Budget& budget) {
  return mor_equal(a.rel, b.rel, m.atoms(), budget);
}

Comparison vmor_equal(const LnlModel& m, const VMor& a, const VMor& b, const Budget& budget) {
  same_base(a.base, b.base, "vertical equality");
  return mor_equal(a.u, b.u, m.atoms(), budget);
}

Comparison lsmor_equal(const LnlModel& m, const LSMor& a, const LSMor& b, const Budget& budget) {
  auto first = cmor_equal(m, a.f, b.f, budget);
  if (first.outcome == Outcome::Distinct) return first;
  return both(first, mor_equal(a.u, b.u, m.atoms(), budget));
}

Comparison smor_equal(const LnlModel& m, const SMor& a, const SMor& b, const Budget& budget) {
  auto first = cmor_equal(m, a.f, b.f, budget);
  if (first.outcome == Outcome::Distinct) return first;
  return both(first, cmor_equal(m, a.u, b.u, budget));
}

}  // namespace dill
