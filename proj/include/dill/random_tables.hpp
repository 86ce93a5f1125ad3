#pragma once

#include <random>

#include "dill/fib.hpp"

namespace dill {

// Seeded finite relations for catalogs and candidate searches. Models whose
// linear side is not additive get functions instead of arbitrary relations.
class TableGen {
 public:
  TableGen(const LnlModel& m, std::mt19937_64& rng) : m_(m), rng_(rng) {}

  // rows drawn over inputs of size <= in_size and outputs of size <= out_size
  RelMor relation(const Type& dom, const Type& cod, std::size_t in_size, std::size_t out_size,
                  const std::string& label = "table");
  CMor cmap(const Type& x, const Type& y) { return {x, y, relation(m_.F(x), y, 2, 1, "c")}; }
  RelMor linear(const Type& dom, const Type& cod, std::size_t in_size) {
    return relation(dom, cod, in_size, 2, "u");
  }
  VMor vertical(const Type& base, const Type& a, const Type& b, std::size_t in_size = 3) {
    return {base, a, b, linear(Type::tensor(m_.F(base), a), b, in_size)};
  }

 private:
  const LnlModel& m_;
  std::mt19937_64& rng_;
};

}  // namespace dill
