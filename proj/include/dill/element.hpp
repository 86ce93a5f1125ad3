#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dill/type.hpp"

namespace dill {

// Inhabitants of linear object expressions. Tuples mirror flat tensors,
// bags are kept sorted so structural equality is multiset equality.
class Element {
 public:
  enum class Kind : std::uint8_t { Star, Atom, Tuple, Tag, Bag };

  Element() = default;  // Star
  static Element star() { return {}; }
  static Element atom(std::string name);
  static Element tuple(std::vector<Element> items);
  static Element tag(int side, Element inner);
  static Element bag(std::vector<Element> items);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int side() const { return side_; }
  const std::vector<Element>& items() const { return items_; }
  const Element& inner() const { return items_.at(0); }
  std::size_t size() const { return size_; }

  std::string str() const;
  nlohmann::json to_json() const;
  static Element from_json(const nlohmann::json& j);

  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return (a <=> b) == 0; }

 private:
  Kind kind_ = Kind::Star;
  std::int8_t side_ = 0;
  std::size_t size_ = 0;
  std::string name_;
  std::vector<Element> items_;
};

using Image = std::vector<Element>;  // sorted, duplicate free

void normalize(Image& img);

// Tensor plumbing: view an element of an arity-k object as its k factors.
std::vector<Element> factors_of(const Element& e, std::size_t arity);
Element from_factors(std::vector<Element> fs);
// Split an element of A ⊗ B given the arities of A and B.
std::pair<Element, Element> split_pair(const Element& e, std::size_t left_arity, std::size_t right_arity);
Element join_pair(const Element& a, std::size_t left_arity, const Element& b, std::size_t right_arity);

// Multiset helpers over sorted item lists.
Element bag_union(const Element& a, const Element& b);
// All ordered pairs (m1, m2) with m1 + m2 = m.
std::vector<std::pair<Element, Element>> bag_splittings(const Element& m);

using AtomTable = std::map<std::string, std::vector<std::string>>;

// Elements of t with size <= n, ordered by size and then canonically.
// Throws BudgetExhausted past max_elements.
std::vector<Element> enumerate_elements(const Type& t, std::size_t n, const AtomTable& atoms,
                                        std::size_t max_elements = 1u << 20);

// Membership in an interpreted linear object. Throws UnknownAtom.
bool element_of(const Element& e, const Type& t, const AtomTable& atoms);

// Is every element of t of size <= n (so enumeration at n is complete)?
bool finite_within(const Type& t, std::size_t n, const AtomTable& atoms);

}  // namespace dill
