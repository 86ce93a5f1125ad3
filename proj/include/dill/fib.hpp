#pragma once

#include <memory>

#include "dill/equal.hpp"
#include "dill/lnl.hpp"

namespace dill {

struct LSObj {
  Type base, fibre;
  friend bool operator==(const LSObj&, const LSObj&) = default;
};

// (f, u) : (X,A) -> (Y,B) with f : X -> Y in C and u : F(X)⊗A -> B in L.
struct LSMor {
  LSObj dom, cod;
  CMor f;
  RelMor u;
};

// (id_X, u) : (X,A) -> (X,B)
struct VMor {
  Type base, dom, cod;
  RelMor u;
};

using SObj = LSObj;

// (f, u) : (X,J) -> (Y,K) with f : X -> Y and u : X×J -> K, both in C.
struct SMor {
  SObj dom, cod;
  CMor f, u;
};

// The linear simple fibration ls and the simple fibration s of a model,
// with the fibred adjunction, Σ-coproducts, comprehension and W.
class Fib {
 public:
  explicit Fib(std::shared_ptr<const LnlModel> model) : m_(std::move(model)) {}
  const LnlModel& model() const { return *m_; }

  // LS(C)
  LSMor ls_compose(const LSMor& a, const LSMor& b) const;
  LSMor ls_id(const LSObj& o) const;
  LSMor lift(const CMor& f, const Type& b) const;  // (f, 𝐰⊗id) : (X,B) -> (Y,B)
  LSMor as_ls(const VMor& v) const;
  VMor as_vertical(const LSMor& g, const Budget& budget) const;  // NotVertical unless f = id

  // fibres
  VMor v_id(const Type& x, const Type& a) const;
  VMor v_compose(const VMor& a, const VMor& b) const;
  VMor reindex(const CMor& w, const VMor& v) const;
  VMor lift_vertical(const Type& x, const RelMor& l) const;  // (id, 𝐰_X⊗l)
  VMor fibre_tensor(const VMor& a, const VMor& b) const;
  VMor fibre_with(const VMor& a, const VMor& b) const;  // &_X, & = ⊕
  VMor fibre_pair(const VMor& a, const VMor& b) const;
  VMor fibre_proj(int i, const Type& x, const Type& a, const Type& b) const;
  VMor fibre_inj(int i, const Type& x, const Type& a, const Type& b) const;
  VMor fibre_sum(const VMor& a, const VMor& b) const;
  VMor fibre_zero(const Type& x, const Type& a, const Type& b) const;
  VMor fibre_sym(const Type& x, const Type& a, const Type& b) const;

  // S(C)
  SMor s_compose(const SMor& a, const SMor& b) const;
  SMor s_compose_direct(const SMor& a, const SMor& b) const;  // ⟨π1;f, u⟩;v
  SMor s_id(const SObj& o) const;
  SMor s_lift(const CMor& f, const Type& k) const;
  SMor s_reindex(const CMor& w, const SMor& v) const;

  // the fibred adjunction F^S ⊣ U^S
  SObj U_S(const LSObj& o) const;
  LSObj F_S(const SObj& o) const;
  SMor U_S(const LSMor& g) const;
  LSMor F_S(const SMor& g) const;
  SMor eta_S(const SObj& o) const;
  VMor counit_S(const Type& x, const Type& a) const;
  LSObj bang_S(const LSObj& o) const;
  LSMor bang_S(const LSMor& g) const;
  LSMor bang_S_derived(const LSMor& g) const;  // F(η)⊗id;m⊗;!u
  VMor comult_S(const Type& x, const Type& a) const;
  VMor contraction_S(const Type& x, const Type& j) const;  // (X,FJ) -> (X,FJ⊗FJ)
  VMor weakening_S(const Type& x, const Type& j) const;    // (X,FJ) -> (X,1)

  // comprehension
  CMor comprehension(const SMor& g) const;  // {g} = ⟨π_X;f, u⟩
  CMor banana(const LSMor& g) const;        // ⦇g⦈ = {U^S g}

  // Σ ⊣ π1*
  VMor sigma(const Type& x, const Type& j, const VMor& v) const;
  VMor nu(const Type& x, const Type& j, const Type& a) const;  // over X×J : A -> FJ⊗A
  VMor mu(const Type& x, const Type& j, const Type& a) const;  // over X : FJ⊗A -> A
  VMor pi1_star(const Type& x, const Type& j, const VMor& v) const;
  VMor delta(const Type& x, const Type& j, const Type& a) const;  // Σ(ν_{π1*N})

  // weakening functor
  LSObj W(const LSObj& o) const;
  LSMor W(const LSMor& g) const;

 private:
  std::shared_ptr<const LnlModel> m_;
};

// Equality helpers returning the comparison of the relational components.
Comparison cmor_equal(const LnlModel& m, const CMor& a, const CMor& b, const Budget& budget);
Comparison vmor_equal(const LnlModel& m, const VMor& a, const VMor& b, const Budget& budget);
// LS equality: base maps first, then second components.
Comparison lsmor_equal(const LnlModel& m, const LSMor& a, const LSMor& b, const Budget& budget);
Comparison smor_equal(const LnlModel& m, const SMor& a, const SMor& b, const Budget& budget);

}  // namespace dill
