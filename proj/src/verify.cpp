#include "dill/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "dill/error.hpp"
#include "dill/random_tables.hpp"

namespace dill {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::PassUpToBudget: return "PassUpToBudget";
    case Verdict::Fail: return "Fail";
    case Verdict::Skipped: return "Skipped";
    case Verdict::Exploratory: return "Exploratory";
  }
  return "?";
}

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [v](const CheckCase& c) { return c.result.verdict == v; }));
}

bool SuiteReport::budget_exhausted() const {
  return std::any_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.result.budget_exhausted; });
}

nlohmann::json SuiteReport::to_json(bool timing) const {
  auto cs = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j = {{"suite", c.suite},
                        {"law", c.law},
                        {"instance", c.instance},
                        {"verdict", verdict_name(c.result.verdict)},
                        {"millis", timing ? c.millis : 0.0}};
    if (!c.result.witness.is_null()) j["witness"] = c.result.witness;
    if (!c.result.reason.empty()) j["reason"] = c.result.reason;
    cs.push_back(std::move(j));
  }
  return {{"model", model},
          {"catalog", catalog},
          {"budget", {{"N", budget.n}, {"maxElements", budget.max_elements}, {"seed", budget.seed}}},
          {"cases", cs},
          {"summary",
           {{"pass", count(Verdict::Pass)},
            {"passUpToBudget", count(Verdict::PassUpToBudget)},
            {"fail", count(Verdict::Fail)},
            {"skipped", count(Verdict::Skipped)},
            {"exploratory", count(Verdict::Exploratory)}}}};
}

void SuiteReport::append(const SuiteReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

CheckResult from_comparison(const Comparison& c) {
  CheckResult r;
  switch (c.outcome) {
    case Outcome::Equal: r.verdict = Verdict::Pass; break;
    case Outcome::EqualUpToBudget: r.verdict = Verdict::PassUpToBudget; break;
    case Outcome::Distinct:
      r.verdict = Verdict::Fail;
      if (c.witness) r.witness = c.witness->to_json();
      break;
  }
  return r;
}

Comparison both(Comparison a, const Comparison& b) {
  if (a.outcome == Outcome::Distinct) return a;
  if (b.outcome == Outcome::Distinct) return b;
  a.checked += b.checked;
  if (b.outcome == Outcome::EqualUpToBudget) a.outcome = Outcome::EqualUpToBudget;
  return a;
}

SuiteReport run_cases(const std::string& model, const Budget& budget, const std::string& catalog,
                      std::vector<PendingCase> cases, unsigned workers) {
  SuiteReport rep{model, budget, catalog, {}};
  rep.cases.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto& pc = cases[i];
      auto& out = rep.cases[i];
      out.suite = pc.suite;
      out.law = pc.law;
      out.instance = pc.instance;
      auto t0 = std::chrono::steady_clock::now();
      try {
        out.result = pc.run();
      } catch (const Error& e) {
        out.result.verdict = Verdict::Skipped;
        out.result.reason = e.what();
        out.result.budget_exhausted = e.kind() == ErrorKind::BudgetExhausted;
      }
      out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rep;
}

std::string Catalog::describe() const {
  auto names = [](const std::vector<Type>& ts) {
    std::string s;
    for (const auto& t : ts) s += (s.empty() ? "" : ",") + t.str();
    return s;
  };
  return "atoms{" + names(atoms) + "} objects{" + names(objects) + "} bases{" + names(bases) + "} cmaps " +
         std::to_string(cmaps.size()) + " lsmaps " + std::to_string(lsmaps.size());
}

Catalog default_catalog(const LnlModel& m, const Budget& budget) {
  Catalog cat;
  for (const auto& [name, carrier] : m.atoms()) {
    if (carrier.size() <= 2) cat.atoms.push_back(Type::atom(name));
  }
  cat.objects = cat.atoms;
  if (cat.atoms.size() >= 2) {
    const Type& a = cat.atoms[0];
    const Type& b = cat.atoms[1];
    cat.objects.push_back(Type::tensor(a, b));
    cat.objects.push_back(Type::biproduct(a, b));
  }
  cat.bases.push_back(m.terminal());
  for (const auto& a : cat.atoms) cat.bases.push_back(a);

  std::mt19937_64 rng(budget.seed);
  TableGen gen(m, rng);
  for (const auto& x : cat.atoms) {
    cat.cmaps.push_back({"id_" + x.str(), m.c_id(x)});
    cat.cmaps.push_back({"diag_" + x.str(), m.diag(x)});
    cat.cmaps.push_back({"bang_" + x.str(), m.terminal_map(x)});
    for (const auto& y : cat.atoms) {
      for (int k = 0; k < 3; ++k) {
        cat.cmaps.push_back({"t" + std::to_string(k) + "_" + x.str() + y.str(), gen.cmap(x, y)});
      }
    }
  }
  if (cat.atoms.size() >= 2) {
    const Type& a = cat.atoms[0];
    const Type& b = cat.atoms[1];
    cat.cmaps.push_back({"pi1_" + a.str() + b.str(), m.proj1(a, b)});
    cat.cmaps.push_back({"pi2_" + a.str() + b.str(), m.proj2(a, b)});
    cat.cmaps.push_back({"t_" + a.str() + b.str() + "_" + a.str(), gen.cmap(m.prod(a, b), a)});
  }

  for (const auto& nc : cat.cmaps) {
    const CMor& f = nc.value;
    if (f.dom.kind() != TypeKind::Atom || f.cod.kind() != TypeKind::Atom) continue;
    for (const auto& a : cat.atoms) {
      for (const auto& b : cat.atoms) {
        if (nc.name.rfind("t0", 0) == 0 || nc.name.rfind("id", 0) == 0) {
          LSMor g{{f.dom, a}, {f.cod, b}, f, gen.linear(Type::tensor(m.F(f.dom), a), b, 3)};
          cat.lsmaps.push_back({"(" + nc.name + ",u_" + a.str() + b.str() + ")", g});
        }
      }
      if (nc.name.rfind("t1", 0) == 0) {
        LSMor g{{f.dom, a}, {f.cod, a}, f, rel::tensor(m.weakening(f.dom), rel::id(a))};
        cat.lsmaps.push_back({"lift(" + nc.name + "," + a.str() + ")", g});
      }
    }
  }
  return cat;
}

}  // namespace dill
