#include "dill/gdsc.hpp"

#include "dill/error.hpp"

namespace dill {

Tangent::Tangent(std::shared_ptr<const Fib> fib, Budget budget) : fib_(std::move(fib)), budget_(budget) {
  if (!model().has_deriving()) {
    throw Error(ErrorKind::UnsupportedConstructor, "model '" + model().id() + "' has no deriving transform");
  }
}

Type Tangent::lambda(const Type& x) const { return x; }

LSMor Tangent::T(const CMor& f) const {
  return {T(f.dom), T(f.cod), f, rel::compose(model().deriving(f.dom), f.rel)};
}

VMor Tangent::phi(const Type& x, const Type& y) const {
  const LnlModel& m = model();
  LSMor t1 = T(m.proj1(x, y));
  LSMor t2 = T(m.proj2(x, y));
  return {m.prod(x, y), lambda(m.prod(x, y)), Type::biproduct(lambda(x), lambda(y)), rel::pairing(t1.u, t2.u)};
}

VMor Tangent::phi_inv(const Type& x, const Type& y) const {
  VMor p = phi(x, y);
  // read the linear part at the empty context and invert it
  auto inputs = enumerate_elements(p.dom, budget_.n, model().atoms(), budget_.max_elements);
  std::size_t la = p.dom.arity();
  RelMor u = p.u;
  RelMor at_empty(
      p.dom, p.cod,
      [u, la](const Element& a, std::size_t b) { return u.image(join_pair(Element::bag({}), 1, a, la), b); },
      u.back_table(), "φ|[]");
  RelMor inv = rel::converse(at_empty, inputs, budget_.n + kImageSlack);
  return fib_->lift_vertical(p.base, inv);
}

VMor Tangent::i(int j, const Type& x, const Type& y) const {
  Type base = model().prod(x, y);
  VMor inj = fib_->fibre_inj(j, base, lambda(x), lambda(y));
  return fib_->v_compose(inj, phi_inv(x, y));
}

LSMor Tangent::T_partial(int j, const CMor& f, const Type& x, const Type& y) const {
  return fib_->ls_compose(fib_->as_ls(i(j, x, y)), T(f));
}

VMor Tangent::D(const CMor& f) const {
  LSMor t = T(f);
  return {f.dom, t.dom.fibre, t.cod.fibre, t.u};
}

VMor Tangent::D_partial(int j, const CMor& f, const Type& x, const Type& y) const {
  return fib_->v_compose(i(j, x, y), D(f));
}

VMor Tangent::script_D(const Type& x, const Type& y) const {
  const LnlModel& m = model();
  CMor h = m.c_compose(fib_->comprehension(fib_->eta_S({x, y})), m.proj2(x, m.U(m.F(y))));
  return D_partial(2, h, x, y);
}

VMor Tangent::fibre_deriving(const Type& x, const Type& a) const {
  return generalized_fibre_deriving(x, model().U(a));
}

VMor Tangent::generalized_fibre_deriving(const Type& x, const Type& y) const {
  VMor s = fib_->sigma(x, y, script_D(x, y));
  return fib_->v_compose(s, fib_->mu(x, y, model().F(y)));
}

CMor Tangent::d_times(const CMor& f) const {
  const LnlModel& m = model();
  CMor b = fib_->banana(T(f));
  return m.c_compose(b, m.proj2(f.cod, m.U(lambda(f.cod))));
}

CMor Tangent::d_times_kleisli(const CMor& f) const {
  const LnlModel& m = model();
  const Type& x = f.dom;
  RelMor r = rel::compose({rel::seely(x, x), rel::tensor(rel::id(Type::bang(x)), m.counit(x)), m.deriving(x), f.rel});
  return {m.prod(x, x), f.cod, r};
}

std::shared_ptr<Tangent> tangent_from_dsc(std::shared_ptr<const LnlModel> model, Budget budget) {
  return std::make_shared<Tangent>(std::make_shared<Fib>(std::move(model)), budget);
}

}  // namespace dill
