#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dill/config.hpp"
#include "dill/error.hpp"
#include "dill/gdsc.hpp"

using namespace dill;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kConfigError = 2;
constexpr int kBudgetExhausted = 3;

// An inline JSON argument, or @path to read it from a file.
json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorKind::Config, "cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

json image_json(const Image& img) {
  auto arr = json::array();
  for (const auto& e : img) arr.push_back(e.to_json());
  return arr;
}

json dump_rel(const RelMor& r, const AtomTable& atoms, const Budget& budget) {
  auto rows = json::array();
  for (const auto& x : enumerate_elements(r.dom(), budget.n, atoms, budget.max_elements)) {
    Image img = r.image(x, budget.n);
    if (!img.empty()) rows.push_back({x.to_json(), image_json(img)});
  }
  return {{"dom", r.dom().to_json()}, {"cod", r.cod().to_json()}, {"N", budget.n}, {"graph", rows}};
}

std::vector<std::string> dx_names(std::size_t n) {
  if (n == 1) return {"x", "v"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

json poly_json(const PolyMap& f, const std::vector<std::string>& names = {}) {
  return {{"normalForm", f.str(names)}, {"map", f.to_json()}};
}

struct CheckOptions {
  std::string config;
  std::vector<std::string> suites;
  long long budget_n = -1;
  long long seed = -1;
  bool strict = false;
  bool allow_exploratory = false;
  bool no_timing = false;
  std::string out;
  unsigned workers = 0;
};

int cmd_check(const CheckOptions& o) {
  Config c = load_config(o.config);
  if (o.budget_n >= 0) c.budget.n = static_cast<std::size_t>(o.budget_n);
  if (o.seed >= 0) c.budget.seed = static_cast<std::uint64_t>(o.seed);
  std::vector<std::string> suites = o.suites.empty() ? c.suites : o.suites;
  if (suites.empty()) {
    for (const auto& id : suite_ids()) {
      if (id == "gcdc7-probe" && !o.allow_exploratory) continue;
      if ((id == "cdc") != c.is_poly() && id != "gcdc" && id != "gcdc7-probe") continue;
      suites.push_back(id);
    }
  }
  for (const auto& s : suites) {
    if (std::find(suite_ids().begin(), suite_ids().end(), s) == suite_ids().end()) {
      throw Error(ErrorKind::Config, "unknown suite '" + s + "'");
    }
    if (s == "gcdc7-probe" && !o.allow_exploratory) {
      throw Error(ErrorKind::Config, "the gcdc7-probe suite needs --allow-exploratory");
    }
  }
  SuiteReport rep = c.is_poly() ? run_poly_suites(suites, c.budget, c.corpus, o.workers)
                                : run_suites(c.lnl, suites, c.budget, o.workers);
  std::string text = rep.to_json(!o.no_timing).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) throw Error(ErrorKind::Config, "cannot write " + o.out);
    out << text;
  }

  for (const auto& cs : rep.cases) {
    if (cs.result.verdict == Verdict::Fail) {
      std::cerr << "FAIL " << cs.suite << " " << cs.law << " [" << cs.instance << "] witness "
                << cs.result.witness.dump() << "\n";
    }
  }
  std::cerr << rep.model << ": " << rep.count(Verdict::Pass) << " pass, " << rep.count(Verdict::PassUpToBudget)
            << " pass up to budget, " << rep.count(Verdict::Fail) << " fail, " << rep.count(Verdict::Skipped)
            << " skipped, " << rep.count(Verdict::Exploratory) << " exploratory\n";

  if (rep.count(Verdict::Fail) > 0) return kFail;
  if (rep.budget_exhausted()) return kBudgetExhausted;
  if (o.strict && rep.count(Verdict::PassUpToBudget) > 0) return kFail;
  return kOk;
}

int cmd_eval(const std::string& config, const std::string& term_arg, const std::string& element_arg,
             long long bound) {
  Config c = load_config(config);
  Term t = Term::from_json(read_json_arg(term_arg));
  Typing ty = typecheck(t, c.signature);
  json elem = read_json_arg(element_arg);

  if (c.is_poly()) {
    PolyMap f = eval_poly(t, c.poly_generators);
    if (!elem.is_array() || elem.size() != f.dom) {
      throw Error(ErrorKind::ArityMismatch, "expected a point of R^" + std::to_string(f.dom));
    }
    std::vector<Rational> x;
    for (const auto& v : elem) {
      try {
        x.emplace_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
        x.back().canonicalize();
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "cannot read coordinate " + v.dump());
      }
    }
    auto arr = json::array();
    for (const auto& q : poly::apply(f, x)) {
      if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        arr.push_back(q.get_num().get_si());
      } else {
        arr.push_back(q.get_str());
      }
    }
    std::cout << arr.dump() << "\n";
    return kOk;
  }

  Value v = eval(t, *c.lnl, c.rel_generators);
  RelMor r = std::holds_alternative<RelMor>(v) ? std::get<RelMor>(v) : std::get<CMor>(v).rel;
  Element x = Element::from_json(elem);
  if (!element_of(x, r.dom(), c.atoms)) {
    throw Error(ErrorKind::TypeMismatch, x.str() + " is not an element of " + r.dom().str() + " (term " +
                                             ty.dom.str() + " -> " + ty.cod.str() + ")");
  }
  std::size_t b = bound >= 0 ? static_cast<std::size_t>(bound) : c.budget.n + kImageSlack;
  std::cout << image_json(r.image(x, b)).dump() << "\n";
  return kOk;
}

int cmd_diff(const std::string& config, const std::string& name, const std::string& mode, long long split) {
  Config c = load_config(config);
  auto it = c.signature.find(name);
  if (it == c.signature.end()) throw Error(ErrorKind::UnknownGenerator, "no generator '" + name + "'");
  const Generator& g = it->second;

  if (c.is_poly()) {
    const PolyMap& f = c.poly_generators.at(name);
    std::size_t n = f.dom;
    json out;
    if (mode == "T") {
      out = {{"f", poly_json(f)}, {"D", poly_json(poly::d_times(f), dx_names(n))}};
    } else if (mode == "D" || mode == "Dx") {
      out = poly_json(poly::d_times(f), dx_names(n));
    } else {
      // the directions in the other factor are set to zero
      std::size_t k = split >= 0 ? static_cast<std::size_t>(split) : n / 2;
      if (k == 0 || k >= n) throw Error(ErrorKind::ArityMismatch, "D1/D2 need a split 0 < k < " + std::to_string(n));
      bool first = mode == "D1";
      std::size_t len = first ? k : n - k;
      std::size_t total = n + len;
      PolyMap embed{total, {}};
      for (std::size_t i = 0; i < n; ++i) embed.coords.push_back(Poly::var(total, i));
      for (std::size_t i = 0; i < n; ++i) {
        bool live = first ? i < k : i >= k;
        std::size_t j = first ? i : i - k;
        embed.coords.push_back(live ? Poly::var(total, n + j) : Poly(total));
      }
      std::vector<std::string> names = dx_names(n);
      names.resize(n);
      for (std::size_t j = 0; j < len; ++j) names.push_back("v" + std::to_string(j + 1));
      out = poly_json(poly::compose(embed, poly::d_times(f)), names);
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  if (g.dom.world() != World::Cartesian) {
    throw Error(ErrorKind::TypeMismatch, "'" + name + "' is linear; differentials apply to cartesian maps");
  }
  CMor f{interpret(*c.lnl, g.dom), interpret(*c.lnl, g.cod), c.rel_generators.at(name)};
  auto tangent = tangent_from_dsc(c.lnl, c.budget);
  json out;
  if (mode == "T") {
    LSMor t = tangent->T(f);
    out = {{"f", dump_rel(t.f.rel, c.atoms, c.budget)}, {"u", dump_rel(t.u, c.atoms, c.budget)}};
  } else if (mode == "D") {
    out = dump_rel(tangent->D(f).u, c.atoms, c.budget);
  } else if (mode == "Dx") {
    out = dump_rel(tangent->d_times(f).rel, c.atoms, c.budget);
  } else {
    if (g.dom.kind() != TypeKind::CartProd) {
      throw Error(ErrorKind::TypeMismatch, mode + " needs a domain X×Y, got " + g.dom.str());
    }
    Type x = interpret(*c.lnl, g.dom.left()), y = interpret(*c.lnl, g.dom.right());
    out = dump_rel(tangent->D_partial(mode == "D1" ? 1 : 2, f, x, y).u, c.atoms, c.budget);
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable checks for the fibrational semantics of differential linear logic"};
  app.require_subcommand(1);

  CheckOptions co;
  auto* check = app.add_subcommand("check", "run law suites and write a JSON report");
  check->add_option("config", co.config, "model configuration")->required();
  check->add_option("--suite", co.suites, "suite ids (comma separated)")->delimiter(',');
  check->add_option("--budget-n", co.budget_n, "element-size budget N");
  check->add_option("--seed", co.seed, "catalog and corpus seed");
  check->add_flag("--strict", co.strict, "treat PassUpToBudget as failure");
  check->add_flag("--allow-exploratory", co.allow_exploratory, "permit the GCDC.7 probe");
  check->add_flag("--no-timing", co.no_timing, "write zero timings for byte-stable reports");
  check->add_option("--out", co.out, "report path (default stdout)");
  check->add_option("--workers", co.workers, "worker threads (0 = hardware)");

  std::string config, term, element, name, mode = "D";
  long long bound = -1, split = -1;
  auto* ev = app.add_subcommand("eval", "forward image of a term at an element");
  ev->add_option("config", config)->required();
  ev->add_option("term", term, "term JSON or @file")->required();
  ev->add_option("element", element, "element JSON or @file")->required();
  ev->add_option("--bound", bound, "output size bound (default N + 2)");

  auto* df = app.add_subcommand("diff", "differentiate a named cartesian generator");
  df->add_option("config", config)->required();
  df->add_option("name", name)->required();
  df->add_option("--mode", mode)->check(CLI::IsMember({"T", "D", "D1", "D2", "Dx"}));
  df->add_option("--split", split, "poly only: size of the first factor for D1/D2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*check) return cmd_check(co);
    if (*ev) return cmd_eval(config, term, element, bound);
    if (*df) return cmd_diff(config, name, mode, split);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExhausted ? kBudgetExhausted : kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
