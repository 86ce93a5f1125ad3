#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dill/lnl.hpp"
#include "dill/term.hpp"
#include "dill/verify.hpp"

namespace dill {

// A model configuration as read from JSON:
//   {"model": "rel" | "kleisli-of-rel" | "trivial" | "poly",
//    "atoms": {"a": ["0"], ...},
//    "mutation": "none" | "deriving" | "dereliction" | "contraction",
//    "generators": {"f": {"dom": T, "cod": T, "table": [[x, y], ...]}}   (rel, trivial)
//    "generators": {"f": {"dom": n, "coords": [[term, ...], ...]}}       (poly)
//    "budget": {"N": 4, "maxElements": 65536, "seed": 1},
//    "suites": ["dsc", ...],
//    "corpus": {"maxArity": 3, "maxDegree": 3, "randomMaps": 100, ...}}
// Errors are ErrorKind::Config or the underlying parse/type error.
struct Config {
  std::string model = "rel";
  AtomTable atoms;
  Mutation mutation = Mutation::None;
  Budget budget;
  std::vector<std::string> suites;
  CdcCorpus corpus;
  Signature signature;
  GeneratorEnv rel_generators;
  PolyEnv poly_generators;
  std::shared_ptr<const LnlModel> lnl;  // null for poly

  bool is_poly() const { return model == "poly"; }
};

Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);

// The cartesian type R^n used to type polynomial generators.
Type poly_type(std::size_t n);

}  // namespace dill
