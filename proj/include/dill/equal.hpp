#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "dill/element.hpp"
#include "dill/rel.hpp"

namespace dill {

struct Budget {
  std::size_t n = 4;
  std::size_t max_elements = 1u << 16;
  std::uint64_t seed = 1;
};

// Outputs are compared up to size n + kImageSlack so that witnesses whose
// images only differ in slightly larger elements are still seen.
inline constexpr std::size_t kImageSlack = 2;

struct Mismatch {
  Element input;
  Image lhs, rhs;
  nlohmann::json to_json() const;
};

enum class Outcome { Equal, EqualUpToBudget, Distinct };

struct Comparison {
  Outcome outcome = Outcome::Equal;
  std::optional<Mismatch> witness;
  std::size_t checked = 0;
};

// Bounded-extensional equality: every dom element of size <= budget.n, images
// up to size budget.n + kImageSlack. The first mismatch in enumeration order is
// reported, which is the smallest witness. Equal is returned only when both
// enumerations are complete.
Comparison mor_equal(const RelMor& f, const RelMor& g, const AtomTable& atoms, const Budget& budget);

}  // namespace dill
