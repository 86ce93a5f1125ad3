#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dill/verify.hpp"

namespace dill {

// Case builder shared by the suites. Cases capture the builder by reference,
// so finish() ties its lifetime to the returned closures.
struct Suite {
  std::string id;
  std::shared_ptr<const LnlModel> m;
  std::shared_ptr<const Fib> fib;
  Budget budget;
  std::vector<PendingCase> cases;

  void add(std::string law, std::string inst, std::function<CheckResult()> fn) {
    cases.push_back({id, std::move(law), std::move(inst), std::move(fn)});
  }
  Comparison eq(const RelMor& a, const RelMor& b) const { return mor_equal(a, b, m->atoms(), budget); }
  Comparison ceq(const CMor& a, const CMor& b) const { return cmor_equal(*m, a, b, budget); }
  Comparison veq(const VMor& a, const VMor& b) const { return vmor_equal(*m, a, b, budget); }
  Comparison lseq(const LSMor& a, const LSMor& b) const { return lsmor_equal(*m, a, b, budget); }
  Comparison seq(const SMor& a, const SMor& b) const { return smor_equal(*m, a, b, budget); }
};

inline std::shared_ptr<Suite> make_suite(std::string id, std::shared_ptr<const LnlModel> m, const Budget& budget) {
  auto fib = std::make_shared<Fib>(m);
  return std::make_shared<Suite>(Suite{std::move(id), std::move(m), std::move(fib), budget, {}});
}

inline std::vector<PendingCase> finish(const std::shared_ptr<Suite>& s) {
  for (auto& c : s->cases) c.run = [s, f = std::move(c.run)] { return f(); };
  return std::move(s->cases);
}

inline CheckResult skipped(std::string reason) {
  CheckResult r;
  r.verdict = Verdict::Skipped;
  r.reason = std::move(reason);
  return r;
}

}  // namespace dill
