#include "dill/term.hpp"

#include <array>

#include "dill/error.hpp"
#include "dill/gdsc.hpp"

namespace dill {

namespace {

struct OpInfo {
  Op op;
  const char* name;
};

constexpr std::array<OpInfo, 30> kOps{{
    {Op::Id, "Id"},
    {Op::Compose, "Compose"},
    {Op::Tensor, "Tensor"},
    {Op::Sym, "Sym"},
    {Op::Sum, "Sum"},
    {Op::Zero, "Zero"},
    {Op::Pair, "Pair"},
    {Op::Proj, "Proj"},
    {Op::TerminalTo, "TerminalTo"},
    {Op::Diag, "Diag"},
    {Op::Inj, "Inj"},
    {Op::BiProj, "BiProj"},
    {Op::Dist, "Dist"},
    {Op::Eta, "Eta"},
    {Op::Counit, "Counit"},
    {Op::FunF, "FunF"},
    {Op::FunU, "FunU"},
    {Op::LaxN, "LaxN"},
    {Op::LaxNUnit, "LaxNUnit"},
    {Op::StrongM, "StrongM"},
    {Op::StrongMUnit, "StrongMUnit"},
    {Op::Contr, "Contr"},
    {Op::Weak, "Weak"},
    {Op::Promote, "Promote"},
    {Op::BangLax, "BangLax"},
    {Op::Deriving, "Deriving"},
    {Op::Seely, "Seely"},
    {Op::SeelyInv, "SeelyInv"},
    {Op::Generator, "Generator"},
    {Op::Dx, "Dx"},
}};

// expected (types, args) arity per constructor
std::pair<std::size_t, std::size_t> shape_of(Op op) {
  switch (op) {
    case Op::Compose:
    case Op::Tensor:
    case Op::Sum:
    case Op::Pair:
      return {0, 2};
    case Op::FunF:
    case Op::FunU:
    case Op::Dx:
      return {0, 1};
    case Op::LaxNUnit:
    case Op::StrongMUnit:
      return {0, 0};
    case Op::Id:
    case Op::TerminalTo:
    case Op::Diag:
    case Op::Eta:
    case Op::Counit:
    case Op::Contr:
    case Op::Weak:
    case Op::Promote:
    case Op::Deriving:
      return {1, 0};
    case Op::Dist:
      return {3, 0};
    default:
      return {2, 0};
  }
}

bool indexed(Op op) { return op == Op::Proj || op == Op::Inj || op == Op::BiProj; }

[[noreturn]] void mismatch(const std::string& at, const std::string& what, const Type& expected,
                           const Type& found) {
  throw Error(ErrorKind::TypeMismatch,
              "at " + at + ": " + what + " expected " + expected.str() + ", found " + found.str());
}

void need_world(const std::string& at, const Type& t, World w) {
  if (t.world() != w) {
    throw Error(ErrorKind::TypeMismatch, "at " + at + ": " + t.str() + " is not a " +
                                             (w == World::Linear ? "linear" : "cartesian") + " object");
  }
}

void need_index(const std::string& at, int i) {
  if (i != 1 && i != 2) throw Error(ErrorKind::TypeMismatch, "at " + at + ": index must be 1 or 2");
}

Type free_of(const Type& x) { return Type::free(x); }
Type uf(const Type& x) { return Type::forget(Type::free(x)); }

Typing check(const Term& t, const Signature& sig, const std::string& at) {
  const auto& ty = t.types();
  auto sub = [&](std::size_t k) {
    return check(t.args()[k], sig, at + "." + op_name(t.op()) + "[" + std::to_string(k) + "]");
  };
  auto lin = [&](std::size_t k) {
    need_world(at, ty[k], World::Linear);
    return ty[k];
  };
  auto cart = [&](std::size_t k) {
    need_world(at, ty[k], World::Cartesian);
    return ty[k];
  };
  switch (t.op()) {
    case Op::Id: return {ty[0], ty[0]};
    case Op::Compose: {
      auto a = sub(0), b = sub(1);
      if (a.cod != b.dom) mismatch(at, "Compose middle object", a.cod, b.dom);
      return {a.dom, b.cod};
    }
    case Op::Tensor: {
      auto a = sub(0), b = sub(1);
      need_world(at, a.dom, World::Linear);
      need_world(at, b.dom, World::Linear);
      return {Type::tensor(a.dom, b.dom), Type::tensor(a.cod, b.cod)};
    }
    case Op::Sym: return {Type::tensor(lin(0), lin(1)), Type::tensor(ty[1], ty[0])};
    case Op::Sum: {
      auto a = sub(0), b = sub(1);
      if (a.dom != b.dom) mismatch(at, "Sum domain", a.dom, b.dom);
      if (a.cod != b.cod) mismatch(at, "Sum codomain", a.cod, b.cod);
      return a;
    }
    case Op::Zero:
      if (ty[0].world() != ty[1].world()) mismatch(at, "Zero codomain world", ty[0], ty[1]);
      return {ty[0], ty[1]};
    case Op::Pair: {
      auto a = sub(0), b = sub(1);
      need_world(at, a.dom, World::Cartesian);
      if (a.dom != b.dom) mismatch(at, "Pair domain", a.dom, b.dom);
      return {a.dom, Type::cart_prod(a.cod, b.cod)};
    }
    case Op::Proj:
      need_index(at, t.index());
      return {Type::cart_prod(cart(0), cart(1)), ty[t.index() - 1]};
    case Op::TerminalTo: return {cart(0), Type::cart_unit()};
    case Op::Diag: return {cart(0), Type::cart_prod(ty[0], ty[0])};
    case Op::Inj:
      need_index(at, t.index());
      return {lin(t.index() - 1), Type::biproduct(lin(0), lin(1))};
    case Op::BiProj:
      need_index(at, t.index());
      return {Type::biproduct(lin(0), lin(1)), ty[t.index() - 1]};
    case Op::Dist: {
      Type a = lin(0), b = lin(1), c = lin(2);
      return {Type::tensor(a, Type::biproduct(b, c)), Type::biproduct(Type::tensor(a, b), Type::tensor(a, c))};
    }
    case Op::Eta: return {cart(0), uf(ty[0])};
    case Op::Counit: return {Type::bang(lin(0)), ty[0]};
    case Op::FunF: {
      auto a = sub(0);
      need_world(at, a.dom, World::Cartesian);
      return {free_of(a.dom), free_of(a.cod)};
    }
    case Op::FunU: {
      auto a = sub(0);
      need_world(at, a.dom, World::Linear);
      return {Type::forget(a.dom), Type::forget(a.cod)};
    }
    case Op::LaxN:
      return {Type::cart_prod(Type::forget(lin(0)), Type::forget(lin(1))), Type::forget(Type::tensor(ty[0], ty[1]))};
    case Op::LaxNUnit: return {Type::cart_unit(), Type::forget(Type::unit())};
    case Op::StrongM:
      return {Type::tensor(free_of(cart(0)), free_of(cart(1))), free_of(Type::cart_prod(ty[0], ty[1]))};
    case Op::StrongMUnit: return {Type::unit(), free_of(Type::cart_unit())};
    case Op::Contr: return {free_of(cart(0)), Type::tensor(free_of(ty[0]), free_of(ty[0]))};
    case Op::Weak: return {free_of(cart(0)), Type::unit()};
    case Op::Promote: return {Type::bang(lin(0)), Type::bang(Type::bang(ty[0]))};
    case Op::BangLax:
      return {Type::tensor(Type::bang(lin(0)), Type::bang(lin(1))), Type::bang(Type::tensor(ty[0], ty[1]))};
    case Op::Deriving: return {Type::tensor(Type::bang(lin(0)), ty[0]), Type::bang(ty[0])};
    case Op::Seely:
      return {Type::bang(Type::biproduct(lin(0), lin(1))), Type::tensor(Type::bang(ty[0]), Type::bang(ty[1]))};
    case Op::SeelyInv:
      return {Type::tensor(Type::bang(lin(0)), Type::bang(lin(1))), Type::bang(Type::biproduct(ty[0], ty[1]))};
    case Op::Generator: {
      auto it = sig.find(t.name());
      if (it == sig.end()) throw Error(ErrorKind::UnknownGenerator, "at " + at + ": '" + t.name() + "'");
      if (it->second.dom != ty[0]) mismatch(at, "generator '" + t.name() + "' domain", it->second.dom, ty[0]);
      if (it->second.cod != ty[1]) mismatch(at, "generator '" + t.name() + "' codomain", it->second.cod, ty[1]);
      return {ty[0], ty[1]};
    }
    case Op::Dx: {
      auto a = sub(0);
      need_world(at, a.dom, World::Cartesian);
      return {Type::cart_prod(a.dom, a.dom), a.cod};
    }
  }
  throw Error(ErrorKind::TypeMismatch, "at " + at + ": unknown constructor");
}

[[noreturn]] void unsupported(const LnlModel& m, Op op) {
  throw Error(ErrorKind::UnsupportedConstructor,
              std::string(op_name(op)) + " is not available in model '" + m.id() + "'");
}

struct Evaluator {
  const LnlModel& m;
  const GeneratorEnv& env;

  Type I(const Type& t) const { return interpret(m, t); }

  RelMor lin(const Term& t) const { return std::get<RelMor>(run(t)); }
  CMor cart(const Term& t) const { return std::get<CMor>(run(t)); }

  Value run(const Term& t) const {
    const auto& ty = t.types();
    switch (t.op()) {
      case Op::Id:
        if (ty[0].world() == World::Linear) return rel::id(I(ty[0]));
        return m.c_id(I(ty[0]));
      case Op::Compose: {
        Value a = run(t.args()[0]), b = run(t.args()[1]);
        if (auto* r = std::get_if<RelMor>(&a)) return rel::compose(*r, std::get<RelMor>(b));
        return m.c_compose(std::get<CMor>(a), std::get<CMor>(b));
      }
      case Op::Tensor: return rel::tensor(lin(t.args()[0]), lin(t.args()[1]));
      case Op::Sym: return rel::sym(I(ty[0]), I(ty[1]));
      case Op::Sum: {
        Value a = run(t.args()[0]), b = run(t.args()[1]);
        if (auto* r = std::get_if<RelMor>(&a)) return rel::sum(*r, std::get<RelMor>(b));
        if (!m.additive()) unsupported(m, t.op());
        const auto& ca = std::get<CMor>(a);
        return CMor{ca.dom, ca.cod, rel::sum(ca.rel, std::get<CMor>(b).rel)};
      }
      case Op::Zero:
        if (ty[0].world() == World::Linear) return rel::zero(I(ty[0]), I(ty[1]));
        if (!m.additive()) unsupported(m, t.op());
        return CMor{I(ty[0]), I(ty[1]), rel::zero(m.F(I(ty[0])), I(ty[1]))};
      case Op::Pair: return m.pair(cart(t.args()[0]), cart(t.args()[1]));
      case Op::Proj:
        return t.index() == 1 ? m.proj1(I(ty[0]), I(ty[1])) : m.proj2(I(ty[0]), I(ty[1]));
      case Op::TerminalTo: return m.terminal_map(I(ty[0]));
      case Op::Diag: return m.diag(I(ty[0]));
      case Op::Inj: return rel::inj(t.index(), I(ty[0]), I(ty[1]));
      case Op::BiProj: return rel::proj(t.index(), I(ty[0]), I(ty[1]));
      case Op::Dist: return rel::dist(I(ty[0]), I(ty[1]), I(ty[2]));
      case Op::Eta: return m.eta(I(ty[0]));
      case Op::Counit: return m.counit(I(ty[0]));
      case Op::FunF: return m.F(cart(t.args()[0]));
      case Op::FunU: return m.U(lin(t.args()[0]));
      case Op::LaxN: return m.n(I(ty[0]), I(ty[1]));
      case Op::LaxNUnit: return m.n_unit();
      case Op::StrongM: return m.m(I(ty[0]), I(ty[1]));
      case Op::StrongMUnit: return m.m_unit();
      case Op::Contr: return m.contraction(I(ty[0]));
      case Op::Weak: return m.weakening(I(ty[0]));
      case Op::Promote: return m.comult(I(ty[0]));
      case Op::BangLax: return m.bang_lax(I(ty[0]), I(ty[1]));
      case Op::Deriving:
        if (!m.has_deriving()) unsupported(m, t.op());
        return m.deriving(I(ty[0]));
      case Op::Seely:
      case Op::SeelyInv: {
        const Exponential* e = m.exponential();
        if (!e) unsupported(m, t.op());
        return t.op() == Op::Seely ? rel::seely(I(ty[0]), I(ty[1])) : rel::seely_inv(I(ty[0]), I(ty[1]));
      }
      case Op::Generator: {
        auto it = env.find(t.name());
        if (it == env.end()) throw Error(ErrorKind::UnknownGenerator, "no interpretation for '" + t.name() + "'");
        if (ty[0].world() == World::Linear) return it->second;
        return CMor{I(ty[0]), I(ty[1]), it->second};
      }
      case Op::Dx: {
        if (!m.has_deriving()) unsupported(m, t.op());
        auto borrowed = std::shared_ptr<const LnlModel>(&m, [](const LnlModel*) {});
        return tangent_from_dsc(borrowed, Budget{})->d_times(cart(t.args()[0]));
      }
    }
    unsupported(m, t.op());
  }
};

}  // namespace

const char* op_name(Op op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i.name;
  }
  return "?";
}

Term Term::make(Op op, std::vector<Type> types, std::vector<Term> args, int index, std::string name) {
  auto [nt, na] = shape_of(op);
  if (types.size() != nt || args.size() != na) {
    throw Error(ErrorKind::Parse, std::string(op_name(op)) + " takes " + std::to_string(nt) + " types and " +
                                      std::to_string(na) + " subterms");
  }
  if (!indexed(op)) index = 0;
  return Term(std::make_shared<const Node>(Node{op, std::move(types), std::move(args), index, std::move(name)}));
}

Term Term::compose(std::initializer_list<Term> chain) {
  auto it = chain.begin();
  Term acc = *it++;
  for (; it != chain.end(); ++it) acc = compose(acc, *it);
  return acc;
}

std::string Term::str() const {
  std::string s = op_name(op());
  if (op() == Op::Generator) return name();
  if (op() == Op::Compose) return "(" + args()[0].str() + " ; " + args()[1].str() + ")";
  if (op() == Op::Tensor) return "(" + args()[0].str() + " ⊗ " + args()[1].str() + ")";
  if (op() == Op::Sum) return "(" + args()[0].str() + " + " + args()[1].str() + ")";
  if (indexed(op())) s += std::to_string(index());
  std::string inner;
  for (const auto& t : types()) inner += (inner.empty() ? "" : ", ") + t.str();
  for (const auto& a : args()) inner += (inner.empty() ? "" : ", ") + a.str();
  return s + "(" + inner + ")";
}

nlohmann::json Term::to_json() const {
  nlohmann::json body = nlohmann::json::object();
  if (!types().empty()) {
    body["types"] = nlohmann::json::array();
    for (const auto& t : types()) body["types"].push_back(t.to_json());
  }
  if (!args().empty()) {
    body["args"] = nlohmann::json::array();
    for (const auto& a : args()) body["args"].push_back(a.to_json());
  }
  if (indexed(op())) body["i"] = index();
  if (op() == Op::Generator) body["name"] = name();
  return {{op_name(op()), body}};
}

Term Term::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::Parse, "term must be a one-key object, got " + j.dump());
  auto first = j.begin();
  const std::string tag = first.key();
  const nlohmann::json& body = first.value();
  const OpInfo* info = nullptr;
  for (const auto& i : kOps) {
    if (tag == i.name) info = &i;
  }
  if (!info) throw Error(ErrorKind::Parse, "unknown term constructor " + tag);
  if (!body.is_object()) throw Error(ErrorKind::Parse, tag + " expects an object body");
  std::vector<Type> types;
  std::vector<Term> args;
  if (body.contains("types")) {
    for (const auto& t : body.at("types")) types.push_back(Type::from_json(t));
  }
  if (body.contains("args")) {
    for (const auto& a : body.at("args")) args.push_back(from_json(a));
  }
  int index = body.value("i", 0);
  std::string name = body.value("name", std::string{});
  if (indexed(info->op) && index != 1 && index != 2) throw Error(ErrorKind::Parse, tag + " needs i = 1 or 2");
  return make(info->op, std::move(types), std::move(args), index, std::move(name));
}

Typing typecheck(const Term& t, const Signature& sig) { return check(t, sig, "root"); }

Type interpret(const LnlModel& m, const Type& t) {
  switch (t.kind()) {
    case TypeKind::Atom:
    case TypeKind::CartAtom:
      if (!m.atoms().count(t.name())) throw Error(ErrorKind::UnknownAtom, "'" + t.name() + "'");
      return Type::atom(t.name());
    case TypeKind::Unit: return Type::unit();
    case TypeKind::Zero: return Type::zero();
    case TypeKind::Tensor: {
      std::vector<Type> fs;
      for (const auto& k : t.kids()) fs.push_back(interpret(m, k));
      return Type::tensor(fs);
    }
    case TypeKind::Biproduct: return Type::biproduct(interpret(m, t.left()), interpret(m, t.right()));
    case TypeKind::Bang: return m.bang_obj(interpret(m, t.inner()));
    case TypeKind::Free: return m.F(interpret(m, t.inner()));
    case TypeKind::CartProd: return m.prod(interpret(m, t.left()), interpret(m, t.right()));
    case TypeKind::CartUnit: return m.terminal();
    case TypeKind::Forget: return m.U(interpret(m, t.inner()));
  }
  throw Error(ErrorKind::TypeMismatch, "cannot interpret " + t.str());
}

Value eval(const Term& t, const LnlModel& m, const GeneratorEnv& env) { return Evaluator{m, env}.run(t); }

RelMor eval_linear(const Term& t, const LnlModel& m, const GeneratorEnv& env) {
  Value v = eval(t, m, env);
  if (auto* r = std::get_if<RelMor>(&v)) return *r;
  throw Error(ErrorKind::TypeMismatch, t.str() + " is a cartesian morphism");
}

CMor eval_cartesian(const Term& t, const LnlModel& m, const GeneratorEnv& env) {
  Value v = eval(t, m, env);
  if (auto* c = std::get_if<CMor>(&v)) return *c;
  throw Error(ErrorKind::TypeMismatch, t.str() + " is a linear morphism");
}

}  // namespace dill
