#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dill/verify.hpp"

using namespace dill;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 for no time limit
  std::function<Result()> run;
};

const AtomTable kAtoms = {{"a", {"0"}}, {"b", {"0", "1"}}};

Budget budget_n(std::size_t n) { return Budget{n, 1u << 16, 1}; }

// Zero Fail, no exhausted budget, and every required law present.
Result clean(const SuiteReport& rep, const std::set<std::string>& required) {
  Result o;
  std::set<std::string> seen;
  std::size_t checked = 0;
  for (const auto& c : rep.cases) {
    if (c.result.verdict == Verdict::Fail) {
      o.ok = false;
      o.detail += " fail " + c.law + "[" + c.instance + "]";
    }
    if (c.result.verdict == Verdict::Pass || c.result.verdict == Verdict::PassUpToBudget) {
      seen.insert(c.law);
      ++checked;
    }
  }
  if (rep.budget_exhausted()) {
    o.ok = false;
    o.detail += " budget exhausted";
  }
  for (const auto& law : required) {
    if (!seen.count(law)) {
      o.ok = false;
      o.detail += " missing " + law;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " cases, " + std::to_string(seen.size()) + " laws";
  return o;
}

SuiteReport run_filtered(std::vector<PendingCase> cases, const std::set<std::string>& laws, const Budget& budget) {
  std::vector<PendingCase> keep;
  for (auto& c : cases) {
    if (laws.count(c.law)) keep.push_back(std::move(c));
  }
  return run_cases("rel", budget, "default", std::move(keep));
}

Result dsc_axioms() {
  SuiteReport rep = run_suites(rel_lnl(kAtoms), {"dsc"}, budget_n(5));
  return clean(rep, {"d.1", "d.2", "d.3", "d.4", "d.5"});
}

Result dsc_to_gdsc() {
  SuiteReport rep = run_suites(rel_lnl(kAtoms), {"gdsc"}, budget_n(4));
  return clean(rep, {"t.1", "t.2", "t.3", "t.key"});
}

Result fibres_are_dsc() {
  SuiteReport rep = run_suites(rel_lnl(kAtoms), {"fibre-dsc"}, budget_n(4));
  return clean(rep, {"fibre.d.1", "fibre.d.2", "fibre.d.3", "fibre.d.4", "fibre.d.5"});
}

Result fibration_structure() {
  std::set<std::string> laws = {"fib.split-id",         "fib.split-comp",       "fib.reindex-id",
                                "fib.reindex-compose",  "fib.lift-unique",      "fib.adj-triangle-F",
                                "fib.adj-triangle-U",   "fib.sigma-triangle-1", "fib.sigma-triangle-2",
                                "fib.F-sigma"};
  auto m = rel_lnl(kAtoms);
  Budget b = budget_n(4);
  Catalog cat = default_catalog(*m, b);
  return clean(run_filtered(fibration_cases(m, cat, b), laws, b), laws);
}

Result supporting_lemmas() {
  std::set<std::string> laws = {"lemma.seely-diff", "scriptD.natural", "scriptD.W-natural", "partial.split"};
  auto m = rel_lnl(kAtoms);
  Budget b = budget_n(5);
  Catalog cat = default_catalog(*m, b);
  return clean(run_filtered(gdsc_cases(m, cat, b), laws, b), laws);
}

Result cdc_polynomials() {
  CdcCorpus corpus;  // arity <= 3, degree <= 3, 100 random maps, 1000 oracle points
  SuiteReport rep = run_poly_suites({"cdc"}, budget_n(4), corpus);
  Result o = clean(rep, {"CDC.1", "CDC.2", "CDC.3", "CDC.4", "CDC.5", "CDC.6", "CDC.7", "dual-number"});
  for (const auto& c : rep.cases) {
    if (c.result.verdict == Verdict::PassUpToBudget) {
      o.ok = false;
      o.detail += " inexact " + c.law;
    }
  }
  return o;
}

Result gcdc_kleisli() {
  auto m = rel_lnl(kAtoms);
  SuiteReport rep = run_suites(m, {"gcdc"}, budget_n(4));
  Result o = clean(rep, {"GCDC.1", "GCDC.2", "GCDC.3", "GCDC.4", "GCDC.5", "GCDC.6"});
  SuiteReport probe = run_suites(m, {"gcdc7-probe"}, budget_n(4));
  std::size_t n = 0;
  for (const auto& c : probe.cases) {
    if (c.result.verdict != Verdict::Exploratory) {
      o.ok = false;
      o.detail += " probe emitted " + std::string(verdict_name(c.result.verdict));
    }
    ++n;
  }
  if (n == 0) {
    o.ok = false;
    o.detail += " probe emitted nothing";
  }
  if (o.ok) o.detail += ", probe " + std::to_string(n) + " exploratory";
  return o;
}

// The smallest budget at which the law fails; the reported witness has to
// live at exactly that size.
std::size_t first_failing_size(Mutation mut, const std::string& law, std::size_t up_to) {
  for (std::size_t n = 0; n <= up_to; ++n) {
    SuiteReport rep = run_suites(rel_lnl(kAtoms, mut), {"dsc"}, budget_n(n));
    for (const auto& c : rep.cases) {
      if (c.law == law && c.result.verdict == Verdict::Fail) return n;
    }
  }
  return up_to + 1;
}

Result mutation_sensitivity() {
  Result o;
  for (Mutation mut : {Mutation::Deriving, Mutation::Dereliction, Mutation::Contraction}) {
    std::string name = mutation_name(mut);
    SuiteReport rep = run_suites(rel_lnl(kAtoms, mut), {"dsc"}, budget_n(4));
    const CheckCase* hit = nullptr;
    for (const auto& c : rep.cases) {
      if (c.result.verdict == Verdict::Fail && c.result.witness.contains("input")) {
        hit = &c;
        break;
      }
    }
    if (!hit) {
      o.ok = false;
      o.detail += " " + name + ": no failing case";
      continue;
    }
    Element input = Element::from_json(hit->result.witness["input"]);
    std::size_t smallest = first_failing_size(mut, hit->law, 4);
    if (input.size() != smallest) {
      o.ok = false;
      o.detail += " " + name + ": witness of size " + std::to_string(input.size()) + " but " + hit->law +
                  " already fails at " + std::to_string(smallest);
      continue;
    }
    o.detail += " " + name + "->" + hit->law + "@" + input.str();
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "DSC axioms d.1-d.5 in Rel, carriers <= 2, N=5", 30, dsc_axioms},
      {2, "tangent from DSC: t.1-t.3 and the key equation, N=4", 30, dsc_to_gdsc},
      {3, "fibre deriving transforms satisfy d.1-d.5, N=4", 60, fibres_are_dsc},
      {4, "split fibration, unique lifts, triangles, Sigma, F-Sigma, N=4", 20, fibration_structure},
      {5, "Seely differential, script-D naturality, Sigma script-D splitting, N=5", 0, supporting_lemmas},
      {6, "CDC.1-7 on the polynomial corpus and the dual-number oracle", 10, cdc_polynomials},
      {7, "GCDC.1-6 on Kleisli D_x, N=4; GCDC.7 probe exploratory only", 0, gcdc_kleisli},
      {8, "each mutant fails with a minimal witness", 0, mutation_sensitivity},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = Clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::string limit = c.limit_s == 0 ? "" : " limit " + std::to_string(static_cast<int>(c.limit_s)) + "s";
    std::printf("%s criterion %d: %s (%.2fs%s) %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                limit.c_str(), o.detail.c_str(), in_time ? "" : " too slow");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
