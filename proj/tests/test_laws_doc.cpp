#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "dill/verify.hpp"

using namespace dill;

namespace {

std::set<std::string> all_law_ids() {
  std::set<std::string> ids;
  Budget b{2, 1u << 16, 1};
  auto collect = [&](const std::vector<PendingCase>& cases) {
    for (const auto& c : cases) ids.insert(c.law);
  };
  for (auto m : {rel_lnl({{"a", {"0"}}, {"b", {"0", "1"}}}), trivial_lnl({{"a", {"0"}}})}) {
    Catalog cat = default_catalog(*m, b);
    collect(lnl_cases(m, cat, b));
    collect(fibration_cases(m, cat, b));
    collect(dsc_cases(m, cat, b));
    collect(fibre_dsc_cases(m, cat, b));
    collect(gdsc_cases(m, cat, b));
    collect(gcdc_cases(m, cat, b));
    collect(gcdc7_probe_cases(m, cat, b));
  }
  CdcCorpus small;
  small.random_maps = 2;
  small.oracle_points = 10;
  collect(cdc_cases(small, b));
  for (const auto& c : run_poly_suites({"gcdc", "gcdc7-probe"}, b, small, 1).cases) ids.insert(c.law);
  for (const auto& c : run_suites(trivial_lnl({{"a", {"0"}}}), {"cdc"}, b, 1).cases) ids.insert(c.law);
  return ids;
}

}  // namespace

TEST_CASE("every reported law id is documented") {
  std::ifstream in(DILL_SOURCE_DIR "/docs/laws.md");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string doc = ss.str();
  std::set<std::string> ids = all_law_ids();
  CHECK(ids.size() > 100);
  for (const auto& id : ids) {
    INFO("law " << id);
    CHECK(doc.find("`" + id + "`") != std::string::npos);
  }
}
