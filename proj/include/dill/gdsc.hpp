#pragma once

#include <memory>

#include "dill/fib.hpp"

namespace dill {

// A linear tangent functor T : C -> LS(C) together with the differential
// calculus it induces. Built from a deriving transform on a Kleisli model:
// λ(X) = X and T(f) = (f, ∂_X;f).
class Tangent {
 public:
  Tangent(std::shared_ptr<const Fib> fib, Budget budget);

  const Fib& fib() const { return *fib_; }
  const LnlModel& model() const { return fib_->model(); }
  const Budget& budget() const { return budget_; }

  Type lambda(const Type& x) const;
  LSObj T(const Type& x) const { return {x, lambda(x)}; }
  LSMor T(const CMor& f) const;

  // φ_{X,Y} = ⟨T π1, T π2⟩ : (X×Y, λ(X×Y)) -> (X×Y, λX & λY)
  VMor phi(const Type& x, const Type& y) const;
  // inverse of φ; the relational part is solved as a converse table and the
  // caller checks both round trips
  VMor phi_inv(const Type& x, const Type& y) const;
  VMor i(int j, const Type& x, const Type& y) const;  // ι_j;φ⁻¹
  LSMor T_partial(int j, const CMor& f, const Type& x, const Type& y) const;

  VMor D(const CMor& f) const;
  VMor D_partial(int j, const CMor& f, const Type& x, const Type& y) const;

  // 𝒟^X_Y = D₂({η_(X,Y)};π₂) over X×Y : λ(Y) -> F(Y)
  VMor script_D(const Type& x, const Type& y) const;
  // ∂^X_A = Σ 𝒟^X_A ; μ over X : !A⊗A -> !A
  VMor fibre_deriving(const Type& x, const Type& a) const;
  // Σ 𝒟^X_Y ; μ over X : F(Y)⊗λ(Y) -> F(Y)
  VMor generalized_fibre_deriving(const Type& x, const Type& y) const;

  // D_×[f] = ⦇T f⦈;π₂ : X×X -> Y
  CMor d_times(const CMor& f) const;
  // s;id⊗𝐝;∂;f, the same operator read directly in the Kleisli category
  CMor d_times_kleisli(const CMor& f) const;

 private:
  std::shared_ptr<const Fib> fib_;
  Budget budget_;
};

std::shared_ptr<Tangent> tangent_from_dsc(std::shared_ptr<const LnlModel> model, Budget budget);

}  // namespace dill
