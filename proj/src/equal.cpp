#include "dill/equal.hpp"

#include "dill/error.hpp"

namespace dill {

namespace {

nlohmann::json image_json(const Image& img) {
  auto arr = nlohmann::json::array();
  for (const auto& e : img) arr.push_back(e.to_json());
  return arr;
}

}  // namespace

nlohmann::json Mismatch::to_json() const {
  return {{"input", input.to_json()}, {"lhs", image_json(lhs)}, {"rhs", image_json(rhs)}};
}

Comparison mor_equal(const RelMor& f, const RelMor& g, const AtomTable& atoms, const Budget& budget) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw Error(ErrorKind::TypeMismatch, "comparing " + f.dom().str() + " -> " + f.cod().str() + " with " +
                                             g.dom().str() + " -> " + g.cod().str());
  }
  std::size_t out_n = budget.n + kImageSlack;
  Comparison c;
  for (const auto& x : enumerate_elements(f.dom(), budget.n, atoms, budget.max_elements)) {
    auto a = f.image(x, out_n);
    auto b = g.image(x, out_n);
    ++c.checked;
    if (a != b) {
      c.outcome = Outcome::Distinct;
      c.witness = Mismatch{x, std::move(a), std::move(b)};
      return c;
    }
  }
  bool complete = finite_within(f.dom(), budget.n, atoms) && finite_within(f.cod(), out_n, atoms);
  c.outcome = complete ? Outcome::Equal : Outcome::EqualUpToBudget;
  return c;
}

}  // namespace dill
