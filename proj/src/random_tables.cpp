#include "dill/random_tables.hpp"

namespace dill {

RelMor TableGen::relation(const Type& dom, const Type& cod, std::size_t in_size, std::size_t out_size,
                          const std::string& label) {
  auto ins = enumerate_elements(dom, in_size, m_.atoms());
  auto outs = enumerate_elements(cod, out_size, m_.atoms());
  std::vector<std::pair<Element, Element>> rows;
  if (!outs.empty()) {
    if (!m_.additive()) {
      std::uniform_int_distribution<std::size_t> pick(0, outs.size() - 1);
      for (const auto& x : ins) rows.emplace_back(x, outs[pick(rng_)]);
    } else {
      std::bernoulli_distribution coin(0.5);
      for (const auto& x : ins) {
        for (const auto& y : outs) {
          if (coin(rng_)) rows.emplace_back(x, y);
        }
      }
    }
  }
  return rel::table(dom, cod, std::move(rows), label);
}

}  // namespace dill
