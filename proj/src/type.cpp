#include "dill/type.hpp"

#include "dill/error.hpp"

namespace dill {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::UnsupportedConstructor: return "UnsupportedConstructor";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DomainNotBang: return "DomainNotBang";
    case ErrorKind::DomainNotFree: return "DomainNotFree";
    case ErrorKind::NotVertical: return "NotVertical";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Config: return "ConfigError";
  }
  return "Error";
}

struct Type::Node {
  TypeKind kind;
  std::string name;
  std::vector<Type> kids;
};

namespace {

const char* kind_tag(TypeKind k) {
  switch (k) {
    case TypeKind::Atom: return "Atom";
    case TypeKind::Unit: return "Unit";
    case TypeKind::Zero: return "Zero";
    case TypeKind::Tensor: return "Tensor";
    case TypeKind::Biproduct: return "Biproduct";
    case TypeKind::Bang: return "Bang";
    case TypeKind::Free: return "Free";
    case TypeKind::CartAtom: return "CartAtom";
    case TypeKind::CartProd: return "CartProd";
    case TypeKind::CartUnit: return "CartUnit";
    case TypeKind::Forget: return "Forget";
  }
  return "?";
}

void need_world(const Type& t, World w, const char* ctx) {
  if (t.world() != w) {
    throw Error(ErrorKind::TypeMismatch,
                std::string(ctx) + " expects a " + (w == World::Linear ? "linear" : "cartesian") +
                    " object, found " + t.str());
  }
}

}  // namespace

Type::Type() : Type(unit()) {}

Type Type::atom(std::string name) {
  return Type(std::make_shared<const Node>(Node{TypeKind::Atom, std::move(name), {}}));
}

Type Type::unit() {
  static const Type u(std::make_shared<const Node>(Node{TypeKind::Unit, "", {}}));
  return u;
}

Type Type::zero() {
  static const Type z(std::make_shared<const Node>(Node{TypeKind::Zero, "", {}}));
  return z;
}

Type Type::tensor(const std::vector<Type>& factors) {
  std::vector<Type> flat;
  for (const auto& f : factors) {
    need_world(f, World::Linear, "Tensor");
    if (f.kind() == TypeKind::Unit) continue;
    if (f.kind() == TypeKind::Tensor) {
      flat.insert(flat.end(), f.kids().begin(), f.kids().end());
    } else {
      flat.push_back(f);
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat.front();
  return Type(std::make_shared<const Node>(Node{TypeKind::Tensor, "", std::move(flat)}));
}

Type Type::biproduct(const Type& a, const Type& b) {
  need_world(a, World::Linear, "Biproduct");
  need_world(b, World::Linear, "Biproduct");
  return Type(std::make_shared<const Node>(Node{TypeKind::Biproduct, "", {a, b}}));
}

Type Type::bang(const Type& a) {
  need_world(a, World::Linear, "Bang");
  return Type(std::make_shared<const Node>(Node{TypeKind::Bang, "", {a}}));
}

Type Type::free(const Type& x) {
  need_world(x, World::Cartesian, "Free");
  if (x.kind() == TypeKind::Forget) return bang(x.inner());
  return Type(std::make_shared<const Node>(Node{TypeKind::Free, "", {x}}));
}

Type Type::cart_atom(std::string name) {
  return Type(std::make_shared<const Node>(Node{TypeKind::CartAtom, std::move(name), {}}));
}

Type Type::cart_prod(const Type& x, const Type& y) {
  need_world(x, World::Cartesian, "CartProd");
  need_world(y, World::Cartesian, "CartProd");
  return Type(std::make_shared<const Node>(Node{TypeKind::CartProd, "", {x, y}}));
}

Type Type::cart_unit() {
  static const Type u(std::make_shared<const Node>(Node{TypeKind::CartUnit, "", {}}));
  return u;
}

Type Type::forget(const Type& a) {
  need_world(a, World::Linear, "Forget");
  return Type(std::make_shared<const Node>(Node{TypeKind::Forget, "", {a}}));
}

TypeKind Type::kind() const { return n_->kind; }

World Type::world() const {
  switch (kind()) {
    case TypeKind::CartAtom:
    case TypeKind::CartProd:
    case TypeKind::CartUnit:
    case TypeKind::Forget:
      return World::Cartesian;
    default:
      return World::Linear;
  }
}

const std::string& Type::name() const { return n_->name; }
const std::vector<Type>& Type::kids() const { return n_->kids; }

std::size_t Type::arity() const {
  if (kind() == TypeKind::Unit) return 0;
  if (kind() == TypeKind::Tensor) return kids().size();
  return 1;
}

std::vector<Type> Type::factors() const {
  if (kind() == TypeKind::Unit) return {};
  if (kind() == TypeKind::Tensor) return kids();
  return {*this};
}

std::string Type::str() const {
  switch (kind()) {
    case TypeKind::Atom:
    case TypeKind::CartAtom:
      return name();
    case TypeKind::Unit: return "1";
    case TypeKind::Zero: return "0";
    case TypeKind::CartUnit: return "I";
    case TypeKind::Tensor: {
      std::string s = "(";
      for (std::size_t i = 0; i < kids().size(); ++i) {
        if (i) s += " ⊗ ";
        s += kids()[i].str();
      }
      return s + ")";
    }
    case TypeKind::Biproduct: return "(" + left().str() + " ⊕ " + right().str() + ")";
    case TypeKind::CartProd: return "(" + left().str() + " × " + right().str() + ")";
    case TypeKind::Bang: return "!" + inner().str();
    case TypeKind::Free: return "F" + inner().str();
    case TypeKind::Forget: return "U" + inner().str();
  }
  return "?";
}

nlohmann::json Type::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  const char* tag = kind_tag(kind());
  switch (kind()) {
    case TypeKind::Atom:
    case TypeKind::CartAtom:
      j[tag] = name();
      break;
    case TypeKind::Unit:
    case TypeKind::Zero:
    case TypeKind::CartUnit:
      j[tag] = nlohmann::json::array();
      break;
    case TypeKind::Bang:
    case TypeKind::Free:
    case TypeKind::Forget:
      j[tag] = inner().to_json();
      break;
    default: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& k : kids()) arr.push_back(k.to_json());
      j[tag] = arr;
    }
  }
  return j;
}

Type Type::from_json(const nlohmann::json& j) {
  if (j.is_string()) return atom(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) {
    throw Error(ErrorKind::Parse, "type must be a one-key object, got " + j.dump());
  }
  auto first = j.begin();
  const std::string tag = first.key();
  const nlohmann::json& body = first.value();
  auto pair_of = [&](auto make) {
    if (!body.is_array() || body.size() != 2) throw Error(ErrorKind::Parse, tag + " takes two operands");
    return make(from_json(body[0]), from_json(body[1]));
  };
  if (tag == "Atom") return atom(body.get<std::string>());
  if (tag == "CartAtom") return cart_atom(body.get<std::string>());
  if (tag == "Unit") return unit();
  if (tag == "Zero") return zero();
  if (tag == "CartUnit") return cart_unit();
  if (tag == "Bang") return bang(from_json(body));
  if (tag == "Free") return free(from_json(body));
  if (tag == "Forget") return forget(from_json(body));
  if (tag == "Biproduct") return pair_of([](const Type& a, const Type& b) { return biproduct(a, b); });
  if (tag == "CartProd") return pair_of([](const Type& a, const Type& b) { return cart_prod(a, b); });
  if (tag == "Tensor") {
    if (!body.is_array()) throw Error(ErrorKind::Parse, "Tensor takes a list");
    std::vector<Type> fs;
    for (const auto& b : body) fs.push_back(from_json(b));
    return tensor(fs);
  }
  throw Error(ErrorKind::Parse, "unknown type constructor " + tag);
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& ka = a.kids();
  const auto& kb = b.kids();
  for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return ka.size() <=> kb.size();
}

}  // namespace dill
