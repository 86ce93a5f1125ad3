#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dill/element.hpp"
#include "dill/rel.hpp"
#include "dill/type.hpp"

namespace dill {

// A morphism of the cartesian category. Its relation has type F-ish domain as
// the model dictates: !dom -> cod in the Kleisli model, dom -> cod in FinSet.
struct CMor {
  Type dom, cod;
  RelMor rel;
};

enum class Mutation { None, Deriving, Dereliction, Contraction };
const char* mutation_name(Mutation m);
Mutation mutation_from_name(const std::string& s);

// The relational exponential with an optional corruption.
struct Exponential {
  Mutation mutation = Mutation::None;
  RelMor d(const Type& a) const;
  RelMor w(const Type& a) const;
  RelMor c(const Type& a) const;
  RelMor p(const Type& a) const;
  RelMor deriving(const Type& a) const;
};

// A linear-non-linear adjunction F -| U : L -> C where L is always Rel.
// Derived structure follows the construction order of the theory; models may
// override it and the lnl suite checks the override against the derivation.
class LnlModel {
 public:
  explicit LnlModel(AtomTable atoms) : atoms_(std::move(atoms)) {}
  virtual ~LnlModel() = default;

  virtual std::string id() const = 0;
  const AtomTable& atoms() const { return atoms_; }

  // cartesian category
  virtual Type prod(const Type& x, const Type& y) const = 0;
  virtual Type terminal() const = 0;
  virtual CMor c_id(const Type& x) const = 0;
  virtual CMor c_compose(const CMor& f, const CMor& g) const = 0;
  virtual CMor pair(const CMor& f, const CMor& g) const = 0;
  virtual CMor proj1(const Type& x, const Type& y) const = 0;
  virtual CMor proj2(const Type& x, const Type& y) const = 0;
  virtual CMor terminal_map(const Type& x) const = 0;

  // the adjunction
  virtual Type F(const Type& x) const = 0;
  virtual Type U(const Type& a) const = 0;
  virtual std::optional<Type> unF(const Type& a) const = 0;  // X with F(X) = a
  virtual RelMor F(const CMor& f) const = 0;
  virtual CMor U(const RelMor& u) const = 0;
  virtual RelMor m(const Type& x, const Type& y) const = 0;      // FX⊗FY -> F(X×Y)
  virtual RelMor m_inv(const Type& x, const Type& y) const = 0;  // F(X×Y) -> FX⊗FY
  virtual RelMor m_unit() const = 0;                             // 1 -> F(I)
  virtual RelMor m_unit_inv() const = 0;                         // F(I) -> 1
  virtual CMor n(const Type& a, const Type& b) const = 0;        // UA×UB -> U(A⊗B)
  virtual CMor n_unit() const = 0;                               // I -> U(1)
  virtual CMor eta(const Type& x) const = 0;                     // X -> UFX
  virtual RelMor counit(const Type& a) const = 0;                // FUA -> A
  virtual bool additive() const { return false; }
  virtual bool has_deriving() const { return false; }
  virtual RelMor deriving(const Type& a) const;  // !A⊗A -> !A
  virtual const Exponential* exponential() const { return nullptr; }

  // cartesian structure derived from the primitives
  CMor c_chain(std::initializer_list<CMor> chain) const;
  CMor diag(const Type& x) const;
  CMor c_prod(const CMor& f, const CMor& g) const;  // f × g
  CMor c_sym(const Type& x, const Type& y) const;

  // derived linear structure
  virtual RelMor contraction(const Type& x) const;  // FX -> FX⊗FX
  virtual RelMor weakening(const Type& x) const;    // FX -> 1
  virtual RelMor comult(const Type& a) const;       // !A -> !!A
  virtual RelMor bang(const RelMor& u) const;       // !u
  virtual RelMor bang_lax(const Type& a, const Type& b) const;  // !A⊗!B -> !(A⊗B)
  RelMor bang_lax_unit() const;                                 // 1 -> !1
  RelMor contraction_derived(const Type& x) const;
  RelMor weakening_derived(const Type& x) const;
  RelMor comult_derived(const Type& a) const;
  RelMor bang_derived(const RelMor& u) const;
  RelMor bang_lax_derived(const Type& a, const Type& b) const;
  RelMor colax_p(const Type& x, const Type& y) const;  // F(X×Y) -> FX⊗FY
  RelMor colax_p_unit() const;                         // F(I) -> 1
  CMor lax_from_colax(const Type& a, const Type& b) const;
  CMor lax_from_colax_unit() const;
  CMor dagger(const RelMor& f) const;  // f : F(X) -> A gives X -> U(A)
  Type bang_obj(const Type& a) const { return F(U(a)); }

 private:
  AtomTable atoms_;
};

// Kleisli category of the relational exponential: C-objects are linear
// objects, X -> Y is a relation !X -> Y, × is ⊕ and the terminal object is 0.
std::shared_ptr<LnlModel> rel_lnl(AtomTable atoms, Mutation mutation = Mutation::None);
// FinSet adjoined to itself: F = U = Id, × = ⊗ on finite carriers.
std::shared_ptr<LnlModel> trivial_lnl(AtomTable atoms);

}  // namespace dill
