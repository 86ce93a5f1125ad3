#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace dill {

// Object expressions. Free(X) is F applied to a cartesian object and
// Forget(A) is U applied to a linear one; Free(Forget(A)) is !A.
// Zero is the empty biproduct unit, used as the Kleisli terminal object.
enum class TypeKind {
  Atom,
  Unit,
  Zero,
  Tensor,
  Biproduct,
  Bang,
  Free,
  CartAtom,
  CartProd,
  CartUnit,
  Forget,
};

enum class World { Linear, Cartesian };

class Type {
 public:
  Type();  // Unit

  static Type atom(std::string name);
  static Type unit();
  static Type zero();
  static Type tensor(const std::vector<Type>& factors);
  static Type tensor(const Type& a, const Type& b) { return tensor({a, b}); }
  static Type biproduct(const Type& a, const Type& b);
  static Type bang(const Type& a);
  static Type free(const Type& x);
  static Type cart_atom(std::string name);
  static Type cart_prod(const Type& x, const Type& y);
  static Type cart_unit();
  static Type forget(const Type& a);

  TypeKind kind() const;
  World world() const;
  const std::string& name() const;
  const std::vector<Type>& kids() const;
  const Type& left() const { return kids().at(0); }
  const Type& right() const { return kids().at(1); }
  const Type& inner() const { return kids().at(0); }

  // Number of flat tensor factors: 0 for Unit, k for a k-fold Tensor, else 1.
  std::size_t arity() const;
  std::vector<Type> factors() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Type from_json(const nlohmann::json& j);

  friend std::strong_ordering operator<=>(const Type& a, const Type& b);
  friend bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

}  // namespace dill
