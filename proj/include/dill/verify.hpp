#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dill/equal.hpp"
#include "dill/fib.hpp"
#include "dill/lnl.hpp"

namespace dill {

enum class Verdict { Pass, PassUpToBudget, Fail, Skipped, Exploratory };
const char* verdict_name(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Pass;
  nlohmann::json witness;  // null unless Fail or Exploratory
  std::string reason;      // for Skipped
  bool budget_exhausted = false;
};

struct CheckCase {
  std::string suite, law, instance;
  CheckResult result;
  double millis = 0;
};

struct SuiteReport {
  std::string model;
  Budget budget;
  std::string catalog;
  std::vector<CheckCase> cases;

  std::size_t count(Verdict v) const;
  bool budget_exhausted() const;
  nlohmann::json to_json(bool timing = true) const;
  void append(const SuiteReport& other);
};

// Outcome of a bounded comparison as a verdict.
CheckResult from_comparison(const Comparison& c);
// Conjunction: first failure wins, otherwise the weaker pass.
Comparison both(Comparison a, const Comparison& b);

// A named, lazily evaluated check. The runner fans these out to a pool.
struct PendingCase {
  std::string suite, law, instance;
  std::function<CheckResult()> run;
};
SuiteReport run_cases(const std::string& model, const Budget& budget, const std::string& catalog,
                      std::vector<PendingCase> cases, unsigned workers = 0);

template <class T>
struct Named {
  std::string name;
  T value;
};

// The default catalog over a model's atoms: carrier-≤2 atoms, base objects
// 0, a, b, and Kleisli maps whose forward tables live on elements of size ≤ 2
// plus the named structure maps.
struct Catalog {
  std::vector<Type> atoms;
  std::vector<Type> objects;  // L-objects for the structural laws
  std::vector<Type> bases;    // C-objects with at most two points
  std::vector<Named<CMor>> cmaps;
  std::vector<Named<LSMor>> lsmaps;
  std::string describe() const;
};
Catalog default_catalog(const LnlModel& m, const Budget& budget);

std::vector<PendingCase> lnl_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget);
std::vector<PendingCase> fibration_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget);
std::vector<PendingCase> dsc_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget);
std::vector<PendingCase> fibre_dsc_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat,
                                         const Budget& budget);
std::vector<PendingCase> gdsc_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget);
std::vector<PendingCase> gcdc_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget);
std::vector<PendingCase> gcdc7_probe_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat,
                                           const Budget& budget);
// The polynomial model: monomial corpus plus seeded random maps.
struct CdcCorpus {
  std::size_t max_arity = 3;
  unsigned max_degree = 3;
  std::size_t random_maps = 100;
  unsigned random_degree = 4;
  int random_coeff = 9;
  std::size_t oracle_points = 1000;
};
std::vector<PendingCase> cdc_cases(const CdcCorpus& corpus, const Budget& budget);

// Every suite id understood by run_suites.
const std::vector<std::string>& suite_ids();
SuiteReport run_suites(std::shared_ptr<const LnlModel> m, const std::vector<std::string>& suites,
                       const Budget& budget, unsigned workers = 0);
SuiteReport run_poly_suites(const std::vector<std::string>& suites, const Budget& budget, const CdcCorpus& corpus,
                            unsigned workers = 0);

}  // namespace dill
