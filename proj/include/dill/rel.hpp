#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dill/element.hpp"
#include "dill/type.hpp"

namespace dill {

// A relation dom -> cod given by a forward-image program. image(x, b) returns
// exactly the related outputs of size <= b. back(b) bounds the size of any
// input related to an output of size <= b; composition uses it to know how far
// the intermediate image has to be explored, which keeps infinitely branching
// maps such as promotion at [] exact under truncation.
class RelMor {
 public:
  static constexpr std::size_t kMaxBound = 64;
  static constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);

  using Forward = std::function<Image(const Element&, std::size_t)>;
  enum class Shape { General, Identity, Zero };

  RelMor(Type dom, Type cod, Forward fwd, std::vector<std::size_t> back, std::string label,
         Shape shape = Shape::General);

  const Type& dom() const { return p_->dom; }
  const Type& cod() const { return p_->cod; }
  const std::string& label() const { return p_->label; }
  Shape shape() const { return p_->shape; }

  Image image(const Element& x, std::size_t bound) const;
  std::size_t back(std::size_t bound) const;  // kUnknown past the table
  const std::vector<std::size_t>& back_table() const { return p_->back; }

 private:
  struct Impl {
    Type dom, cod;
    Forward fwd;
    std::vector<std::size_t> back;
    std::string label;
    Shape shape;
  };
  std::shared_ptr<const Impl> p_;
};

namespace rel {

RelMor id(const Type& a);
RelMor compose(const RelMor& r, const RelMor& s);
RelMor compose(std::initializer_list<RelMor> chain);
RelMor tensor(const RelMor& r, const RelMor& s);
RelMor tensor(std::initializer_list<RelMor> parts);
RelMor sum(const RelMor& r, const RelMor& s);
RelMor zero(const Type& dom, const Type& cod);
RelMor sym(const Type& a, const Type& b);

// biproduct A ⊕ B as tagged union
RelMor inj(int i, const Type& a, const Type& b);
RelMor proj(int i, const Type& a, const Type& b);
RelMor pairing(const RelMor& r, const RelMor& s);
RelMor copairing(const RelMor& r, const RelMor& s);
RelMor biprod(const RelMor& r, const RelMor& s);
RelMor dist(const Type& a, const Type& b, const Type& c);

// exponential structure on !A = finite multisets of A
RelMor dereliction(const Type& a);
RelMor weakening(const Type& a);
RelMor coweakening(const Type& a);
RelMor contraction(const Type& a);
RelMor comult(const Type& a);
RelMor deriving(const Type& a);
RelMor seely(const Type& a, const Type& b);
RelMor seely_inv(const Type& a, const Type& b);
RelMor promote(const RelMor& r);   // r : !X -> Y gives !X -> !Y
RelMor bang_map(const RelMor& r);  // r : A -> B gives !A -> !B
// u : !X⊗A -> B gives !X⊗!A -> !B, splitting the context among the copies
RelMor bang_in_context(const RelMor& u, const Type& ctx, const Type& a);

// deliberately broken structure maps used by the mutation suites
RelMor mutant_deriving(const Type& a);     // forgets to add the new point
RelMor mutant_dereliction(const Type& a);  // reads any member of the bag
RelMor mutant_contraction(const Type& a);  // only the two trivial splittings

// functions on finite carriers, the cartesian structure of FinSet inside Rel
RelMor copy(const Type& a);
RelMor discard(const Type& a);

// finite extensional relation; inputs outside the table have empty image
RelMor table(const Type& dom, const Type& cod, std::vector<std::pair<Element, Element>> rows,
             std::string label = "table");

// extensional restriction of r to inputs of size <= n and outputs of size <= m
std::vector<std::pair<Element, Element>> graph(const RelMor& r, const std::vector<Element>& inputs, std::size_t m);
// converse relation of r, tabulated on the given inputs
RelMor converse(const RelMor& r, const std::vector<Element>& inputs, std::size_t m);

}  // namespace rel

}  // namespace dill
