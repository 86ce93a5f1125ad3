#include <algorithm>
#include <random>

#include "dill/error.hpp"
#include "dill/poly.hpp"
#include "suite.hpp"

namespace dill {

namespace {

// Coordinates [start, start+len) of R^n as a map.
PolyMap block(std::size_t n, std::size_t start, std::size_t len) {
  PolyMap p{n, {}};
  for (std::size_t i = 0; i < len; ++i) p.coords.push_back(Poly::var(n, start + i));
  return p;
}

CheckResult poly_check(const PolyMap& lhs, const PolyMap& rhs) {
  CheckResult r;
  if (lhs == rhs) return r;
  r.verdict = Verdict::Fail;
  r.witness = {{"lhs", lhs.str()}, {"rhs", rhs.str()}};
  return r;
}

CheckResult all_of(std::initializer_list<CheckResult> rs) {
  for (const auto& r : rs) {
    if (r.verdict == Verdict::Fail) return r;
  }
  return {};
}

struct PolyCase {
  std::string name;
  PolyMap f, g_same, g_next;  // g_same : dom -> cod, g_next : cod -> 2
};

void cdc_laws(std::vector<PendingCase>& out, const std::string& suite, const PolyCase& pc) {
  auto add = [&](std::string law, std::function<CheckResult()> fn) {
    out.push_back({suite, std::move(law), pc.name, std::move(fn)});
  };
  const PolyMap f = pc.f, g = pc.g_same, h = pc.g_next;
  const std::size_t n = f.dom, m = f.cod();
  add("CDC.1", [=] {
    return all_of({poly_check(poly::d_times(poly::add(f, g)), poly::add(poly::d_times(f), poly::d_times(g))),
                   poly_check(poly::d_times(poly::zero(n, m)), poly::zero(2 * n, m))});
  });
  // generic arguments as projections out of R^{3n}
  const PolyMap v = block(3 * n, 0, n), a = block(3 * n, n, n), b = block(3 * n, 2 * n, n);
  add("CDC.2", [=] {
    PolyMap df = poly::d_times(f);
    PolyMap lhs = poly::compose(poly::pair(v, poly::add(a, b)), df);
    PolyMap rhs = poly::add(poly::compose(poly::pair(v, a), df), poly::compose(poly::pair(v, b), df));
    PolyMap z = poly::compose(poly::pair(v, poly::zero(3 * n, n)), df);
    return all_of({poly_check(lhs, rhs), poly_check(z, poly::zero(3 * n, m))});
  });
  add("CDC.4", [=] {
    return poly_check(poly::d_times(poly::pair(f, g)), poly::pair(poly::d_times(f), poly::d_times(g)));
  });
  add("CDC.5", [=] {
    PolyMap lhs = poly::d_times(poly::compose(f, h));
    PolyMap rhs = poly::compose(poly::pair(poly::compose(poly::proj(1, n, n), f), poly::d_times(f)), poly::d_times(h));
    return poly_check(lhs, rhs);
  });
  add("CDC.6", [=] {
    PolyMap d2 = poly::d_times(poly::d_times(f));
    PolyMap lhs = poly::compose(poly::pair(poly::pair(v, a), poly::pair(poly::zero(3 * n, n), b)), d2);
    return poly_check(lhs, poly::compose(poly::pair(v, b), poly::d_times(f)));
  });
  add("CDC.7", [=] {
    PolyMap d2 = poly::d_times(poly::d_times(f));
    PolyMap z = poly::zero(3 * n, n);
    PolyMap lhs = poly::compose(poly::pair(poly::pair(v, a), poly::pair(b, z)), d2);
    PolyMap rhs = poly::compose(poly::pair(poly::pair(v, b), poly::pair(a, z)), d2);
    return poly_check(lhs, rhs);
  });
}

void cdc3_laws(std::vector<PendingCase>& out, const std::string& suite, std::size_t max_arity) {
  for (std::size_t n = 1; n <= max_arity; ++n) {
    out.push_back({suite, "CDC.3", "n=" + std::to_string(n), [n] {
                     // D[id] = π₂ and D[π_j] = π₂;π_j on R^n × R^n
                     CheckResult r = poly_check(poly::d_times(poly::id(n)), poly::proj(2, n, n));
                     for (std::size_t k = 1; k < n && r.verdict == Verdict::Pass; ++k) {
                       std::size_t l = n - k;
                       PolyMap p2 = poly::proj(2, n, n);
                       r = all_of({poly_check(poly::d_times(poly::proj(1, k, l)),
                                              poly::compose(p2, poly::proj(1, k, l))),
                                   poly_check(poly::d_times(poly::proj(2, k, l)),
                                              poly::compose(p2, poly::proj(2, k, l)))});
                     }
                     return r;
                   }});
  }
}

// λ(n) = n with the coordinatewise monoid.
void gcdc_poly_laws(std::vector<PendingCase>& out, std::size_t max_arity) {
  for (std::size_t n = 1; n <= max_arity; ++n) {
    std::string inst = "n=" + std::to_string(n);
    out.push_back({"gcdc", "GCDC.1", inst, [n] {
                     PolyMap plus = poly::plus(n);
                     CheckResult r = poly_check(poly::d_times(plus), poly::compose(poly::proj(2, 2 * n, 2 * n), plus));
                     PolyMap z = poly::zero(0, n);
                     return all_of({r, poly_check(poly::d_times(z), poly::compose(poly::proj(2, 0, 0), z))});
                   }});
    out.push_back({"gcdc", "GCDC.L", inst, [n] {
                     // +_{n×1} is +_n × +_1 after regrouping the coordinates
                     std::size_t k = n + 1;
                     PolyMap lhs = poly::plus(k);
                     PolyMap first = poly::compose(poly::pair(block(2 * k, 0, n), block(2 * k, k, n)), poly::plus(n));
                     PolyMap second =
                         poly::compose(poly::pair(block(2 * k, n, 1), block(2 * k, k + n, 1)), poly::plus(1));
                     return poly_check(lhs, poly::pair(first, second));
                   }});
  }
}

}  // namespace

std::vector<PendingCase> cdc_cases(const CdcCorpus& corpus, const Budget& budget) {
  std::vector<PendingCase> out;
  std::mt19937_64 rng(budget.seed);
  std::vector<PolyCase> corpus_maps;
  for (std::size_t n = 1; n <= corpus.max_arity; ++n) {
    for (const auto& f : poly::monomials(n, corpus.max_degree)) {
      PolyCase pc{"monomial " + f.str(), f, poly::random_map(rng, n, 1, corpus.max_degree, 3),
                  poly::random_map(rng, 1, 2, 2, 3)};
      corpus_maps.push_back(std::move(pc));
    }
  }
  std::uniform_int_distribution<std::size_t> arity(1, corpus.max_arity);
  for (std::size_t k = 0; k < corpus.random_maps; ++k) {
    std::size_t n = arity(rng), m = arity(rng);
    PolyMap f = poly::random_map(rng, n, m, corpus.random_degree, corpus.random_coeff);
    PolyCase pc{"random#" + std::to_string(k), f,
                poly::random_map(rng, n, m, corpus.random_degree, corpus.random_coeff),
                poly::random_map(rng, m, 2, 2, corpus.random_coeff)};
    corpus_maps.push_back(std::move(pc));
  }
  for (const auto& pc : corpus_maps) cdc_laws(out, "cdc", pc);
  cdc3_laws(out, "cdc", corpus.max_arity);

  // exact agreement of D_× with the dual-number oracle, batched by 100 points
  std::vector<PolyMap> random_only;
  for (const auto& pc : corpus_maps) {
    if (pc.name.rfind("random", 0) == 0) random_only.push_back(pc.f);
  }
  if (random_only.empty()) random_only.push_back(corpus_maps.front().f);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::uniform_int_distribution<std::size_t> which(0, random_only.size() - 1);
  constexpr std::size_t kBatch = 100;
  for (std::size_t start = 0; start < corpus.oracle_points; start += kBatch) {
    struct Point {
      PolyMap f;
      std::vector<Rational> x, v;
    };
    std::vector<Point> pts;
    for (std::size_t k = start; k < std::min(corpus.oracle_points, start + kBatch); ++k) {
      Point p{random_only[which(rng)], {}, {}};
      auto draw = [&] {
        int num = coord(rng);
        int den = 1 + std::abs(coord(rng));
        Rational q(num, den);
        q.canonicalize();
        return q;
      };
      for (std::size_t i = 0; i < p.f.dom; ++i) p.x.push_back(draw());
      for (std::size_t i = 0; i < p.f.dom; ++i) p.v.push_back(draw());
      pts.push_back(std::move(p));
    }
    std::string inst = "points " + std::to_string(start) + ".." + std::to_string(start + pts.size() - 1);
    out.push_back({"cdc", "dual-number", inst, [pts] {
                     for (const auto& p : pts) {
                       std::vector<Rational> xv = p.x;
                       xv.insert(xv.end(), p.v.begin(), p.v.end());
                       auto got = poly::apply(poly::d_times(p.f), xv);
                       auto want = poly::dual_number_oracle(p.f, p.x, p.v);
                       if (got != want) {
                         CheckResult r;
                         r.verdict = Verdict::Fail;
                         auto vec = [](const std::vector<Rational>& q) {
                           auto j = nlohmann::json::array();
                           for (const auto& c : q) j.push_back(c.get_str());
                           return j;
                         };
                         r.witness = {{"map", p.f.str()}, {"x", vec(p.x)}, {"v", vec(p.v)},
                                      {"d_times", vec(got)}, {"oracle", vec(want)}};
                         return r;
                       }
                     }
                     return CheckResult{};
                   }});
  }
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"lnl", "fibration", "dsc", "fibre-dsc", "gdsc", "gcdc", "gcdc7-probe",
                                               "cdc"};
  return ids;
}

namespace {

void check_suites(const std::vector<std::string>& suites) {
  for (const auto& s : suites) {
    if (std::find(suite_ids().begin(), suite_ids().end(), s) == suite_ids().end()) {
      throw Error(ErrorKind::Config, "unknown suite '" + s + "'");
    }
  }
}

bool wants(const std::vector<std::string>& suites, const std::string& id) {
  return std::find(suites.begin(), suites.end(), id) != suites.end();
}

}  // namespace

SuiteReport run_suites(std::shared_ptr<const LnlModel> m, const std::vector<std::string>& suites,
                       const Budget& budget, unsigned workers) {
  check_suites(suites);
  Catalog cat = default_catalog(*m, budget);
  std::vector<PendingCase> cases;
  auto take = [&](std::vector<PendingCase> more) {
    for (auto& c : more) cases.push_back(std::move(c));
  };
  if (wants(suites, "lnl")) take(lnl_cases(m, cat, budget));
  if (wants(suites, "fibration")) take(fibration_cases(m, cat, budget));
  if (wants(suites, "dsc")) take(dsc_cases(m, cat, budget));
  if (wants(suites, "fibre-dsc")) take(fibre_dsc_cases(m, cat, budget));
  if (wants(suites, "gdsc")) take(gdsc_cases(m, cat, budget));
  if (wants(suites, "gcdc")) take(gcdc_cases(m, cat, budget));
  if (wants(suites, "gcdc7-probe")) take(gcdc7_probe_cases(m, cat, budget));
  if (wants(suites, "cdc")) {
    cases.push_back({"cdc", "CDC.*", "model", [] { return skipped("CDC suites run on the polynomial model"); }});
  }
  return run_cases(m->id(), budget, cat.describe(), std::move(cases), workers);
}

SuiteReport run_poly_suites(const std::vector<std::string>& suites, const Budget& budget, const CdcCorpus& corpus,
                            unsigned workers) {
  check_suites(suites);
  std::vector<PendingCase> cases;
  if (wants(suites, "cdc")) cases = cdc_cases(corpus, budget);
  if (wants(suites, "gcdc")) gcdc_poly_laws(cases, corpus.max_arity);
  if (wants(suites, "gcdc7-probe")) {
    // in the polynomial model GCDC.7 is CDC.7, so the probe reports the CDC verdict
    std::mt19937_64 rng(budget.seed + 7);
    for (std::size_t k = 0; k < 10; ++k) {
      PolyMap f = poly::random_map(rng, 2, 1, corpus.random_degree, corpus.random_coeff);
      PolyCase pc{"random#" + std::to_string(k), f, f, poly::random_map(rng, 1, 2, 2, 3)};
      std::vector<PendingCase> tmp;
      cdc_laws(tmp, "gcdc7-probe", pc);
      for (auto& c : tmp) {
        if (c.law != "CDC.7") continue;
        c.law = "GCDC.7";
        c.run = [run = std::move(c.run)] {
          CheckResult r = run();
          CheckResult e;
          e.verdict = Verdict::Exploratory;
          e.witness = {{"holds", r.verdict != Verdict::Fail}};
          return e;
        };
        cases.push_back(std::move(c));
      }
    }
  }
  for (const auto& s : suites) {
    if (s != "cdc" && s != "gcdc" && s != "gcdc7-probe") {
      cases.push_back({s, "*", "model", [] { return skipped("suite needs an LNL model"); }});
    }
  }
  std::string cat = "monomials arity<=" + std::to_string(corpus.max_arity) + " degree<=" +
                    std::to_string(corpus.max_degree) + ", " + std::to_string(corpus.random_maps) +
                    " random maps degree<=" + std::to_string(corpus.random_degree) + " coeff<=" +
                    std::to_string(corpus.random_coeff) + ", seed " + std::to_string(budget.seed);
  return run_cases("poly", budget, cat, std::move(cases), workers);
}

}  // namespace dill
