#include "dill/error.hpp"
#include "dill/term.hpp"

namespace dill {

std::size_t poly_arity(const Type& t) {
  switch (t.kind()) {
    case TypeKind::CartAtom: return 1;
    case TypeKind::CartUnit: return 0;
    case TypeKind::CartProd: return poly_arity(t.left()) + poly_arity(t.right());
    default:
      throw Error(ErrorKind::UnsupportedConstructor, "object " + t.str() + " has no polynomial interpretation");
  }
}

namespace {

PolyMap eval_at(const Term& t, const PolyEnv& env) {
  const auto& ty = t.types();
  auto sub = [&](std::size_t k) { return eval_at(t.args()[k], env); };
  switch (t.op()) {
    case Op::Id: return poly::id(poly_arity(ty[0]));
    case Op::Compose: return poly::compose(sub(0), sub(1));
    case Op::Pair: return poly::pair(sub(0), sub(1));
    case Op::Proj: return poly::proj(t.index(), poly_arity(ty[0]), poly_arity(ty[1]));
    case Op::TerminalTo: return poly::zero(poly_arity(ty[0]), 0);
    case Op::Diag: {
      std::size_t n = poly_arity(ty[0]);
      return poly::pair(poly::id(n), poly::id(n));
    }
    case Op::Sum: return poly::add(sub(0), sub(1));
    case Op::Zero: return poly::zero(poly_arity(ty[0]), poly_arity(ty[1]));
    case Op::Generator: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(ErrorKind::UnknownGenerator, "no polynomial for '" + t.name() + "'");
      if (it->second.dom != poly_arity(ty[0]) || it->second.cod() != poly_arity(ty[1])) {
        throw Error(ErrorKind::ArityMismatch, "generator '" + t.name() + "' is R^" + std::to_string(it->second.dom) +
                                                  " -> R^" + std::to_string(it->second.cod()));
      }
      return it->second;
    }
    case Op::Dx: return poly::d_times(sub(0));
    default:
      throw Error(ErrorKind::UnsupportedConstructor,
                  std::string(op_name(t.op())) + " is not available in model 'poly'");
  }
}

}  // namespace

PolyMap eval_poly(const Term& t, const PolyEnv& env) { return eval_at(t, env); }

}  // namespace dill
