#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dill/lnl.hpp"
#include "dill/poly.hpp"
#include "dill/type.hpp"

namespace dill {

enum class Op {
  Id,
  Compose,
  Tensor,
  Sym,
  Sum,
  Zero,
  Pair,
  Proj,
  TerminalTo,
  Diag,
  Inj,
  BiProj,
  Dist,
  Eta,
  Counit,
  FunF,
  FunU,
  LaxN,
  LaxNUnit,
  StrongM,
  StrongMUnit,
  Contr,
  Weak,
  Promote,
  BangLax,
  Deriving,
  Seely,
  SeelyInv,
  Generator,
  Dx,  // D_×[t] : X×X -> Y for t : X -> Y
};

const char* op_name(Op op);

// Combinator terms. Type arguments, an index for Proj/Inj/BiProj and a name
// for generators; subterms for the composite constructors.
class Term {
 public:
  static Term make(Op op, std::vector<Type> types = {}, std::vector<Term> args = {}, int index = 0,
                   std::string name = {});

  static Term id(const Type& t) { return make(Op::Id, {t}); }
  static Term compose(const Term& a, const Term& b) { return make(Op::Compose, {}, {a, b}); }
  static Term compose(std::initializer_list<Term> chain);
  static Term tensor(const Term& a, const Term& b) { return make(Op::Tensor, {}, {a, b}); }
  static Term sym(const Type& a, const Type& b) { return make(Op::Sym, {a, b}); }
  static Term sum(const Term& a, const Term& b) { return make(Op::Sum, {}, {a, b}); }
  static Term zero(const Type& d, const Type& c) { return make(Op::Zero, {d, c}); }
  static Term pair(const Term& a, const Term& b) { return make(Op::Pair, {}, {a, b}); }
  static Term proj(int i, const Type& x, const Type& y) { return make(Op::Proj, {x, y}, {}, i); }
  static Term terminal_to(const Type& x) { return make(Op::TerminalTo, {x}); }
  static Term diag(const Type& x) { return make(Op::Diag, {x}); }
  static Term inj(int i, const Type& a, const Type& b) { return make(Op::Inj, {a, b}, {}, i); }
  static Term biproj(int i, const Type& a, const Type& b) { return make(Op::BiProj, {a, b}, {}, i); }
  static Term dist(const Type& a, const Type& b, const Type& c) { return make(Op::Dist, {a, b, c}); }
  static Term eta(const Type& x) { return make(Op::Eta, {x}); }
  static Term counit(const Type& a) { return make(Op::Counit, {a}); }
  static Term fun_f(const Term& t) { return make(Op::FunF, {}, {t}); }
  static Term fun_u(const Term& t) { return make(Op::FunU, {}, {t}); }
  static Term lax_n(const Type& a, const Type& b) { return make(Op::LaxN, {a, b}); }
  static Term lax_n_unit() { return make(Op::LaxNUnit); }
  static Term strong_m(const Type& x, const Type& y) { return make(Op::StrongM, {x, y}); }
  static Term strong_m_unit() { return make(Op::StrongMUnit); }
  static Term contr(const Type& x) { return make(Op::Contr, {x}); }
  static Term weak(const Type& x) { return make(Op::Weak, {x}); }
  static Term promote(const Type& a) { return make(Op::Promote, {a}); }
  static Term bang_lax(const Type& a, const Type& b) { return make(Op::BangLax, {a, b}); }
  static Term deriving(const Type& a) { return make(Op::Deriving, {a}); }
  static Term seely(const Type& a, const Type& b) { return make(Op::Seely, {a, b}); }
  static Term seely_inv(const Type& a, const Type& b) { return make(Op::SeelyInv, {a, b}); }
  static Term generator(std::string name, const Type& d, const Type& c) {
    return make(Op::Generator, {d, c}, {}, 0, std::move(name));
  }
  static Term dx(const Term& t) { return make(Op::Dx, {}, {t}); }

  Op op() const { return n_->op; }
  const std::vector<Type>& types() const { return n_->types; }
  const std::vector<Term>& args() const { return n_->args; }
  int index() const { return n_->index; }
  const std::string& name() const { return n_->name; }

  std::string str() const;
  nlohmann::json to_json() const;
  static Term from_json(const nlohmann::json& j);

 private:
  struct Node {
    Op op;
    std::vector<Type> types;
    std::vector<Term> args;
    int index;
    std::string name;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Generator {
  std::string name;
  Type dom, cod;
};
using Signature = std::map<std::string, Generator>;

struct Typing {
  Type dom, cod;
};

// Model-free typing. Cartesian objects live in the CartAtom/CartProd/CartUnit/
// Forget world, linear ones in the Atom/Unit/Zero/Tensor/Biproduct/Bang/Free
// world. Throws UnknownGenerator or TypeMismatch naming the offending subterm.
Typing typecheck(const Term& t, const Signature& sig);

// The interpretation of a term in an LNL model: a relation for linear terms,
// a C-morphism for cartesian ones.
using Value = std::variant<RelMor, CMor>;

// Relations for generators, already over interpreted objects. A cartesian
// generator X -> Y is given by its relation F(X) -> Y.
using GeneratorEnv = std::map<std::string, RelMor>;

Type interpret(const LnlModel& m, const Type& t);
Value eval(const Term& t, const LnlModel& m, const GeneratorEnv& env = {});
RelMor eval_linear(const Term& t, const LnlModel& m, const GeneratorEnv& env = {});
CMor eval_cartesian(const Term& t, const LnlModel& m, const GeneratorEnv& env = {});

// The cartesian fragment over the polynomial model: a CartAtom is R, products
// add dimensions and CartUnit is R^0. Terms are typechecked first.
using PolyEnv = std::map<std::string, PolyMap>;
std::size_t poly_arity(const Type& t);
PolyMap eval_poly(const Term& t, const PolyEnv& env = {});

}  // namespace dill
