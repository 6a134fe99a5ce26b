#include "support.hpp"

#include <set>

#include "experiments.hpp"
#include "json_io.hpp"

using namespace mk;
using namespace mk::testing;

namespace {

bool has_tag(const CatalogEntry& e, const std::string& tag) {
  return std::find(e.tags.begin(), e.tags.end(), tag) != e.tags.end();
}

std::string dump(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) out += check_result_to_json(r).dump() + "\n";
  return out;
}

}  // namespace

TEST(Catalog, HoldsTheRequiredAlgebras) {
  for (const char* name : {"F2", "F3", "F5", "F4/F2", "F2+F2", "F3+F3", "F2[t]/(t^2)", "F2[t]/(t^3)", "F3[t]/(t^2-t)", "M2(F2)",
                           "M2(F3)", "M2(F5)", "M3(F2)", "M3(F3)", "M3(F5)", "opp(M2(F2))"}) {
    EXPECT_NO_THROW(catalog_entry(name)) << name;
  }
  EXPECT_THROW(catalog_entry("M9(F7)"), Error);
  std::set<std::string> names;
  for (const auto& e : catalog()) names.insert(e.name);
  EXPECT_EQ(names.size(), catalog().size());
}

TEST(Catalog, Tags) {
  EXPECT_TRUE(has_tag(catalog_entry("F4/F2"), "field_extension"));
  EXPECT_TRUE(has_tag(catalog_entry("F4/F2"), "local"));
  EXPECT_TRUE(has_tag(catalog_entry("F2+F2"), "direct_sum"));
  EXPECT_FALSE(has_tag(catalog_entry("F2+F2"), "local"));
  EXPECT_TRUE(has_tag(catalog_entry("F2[t]/(t^3)"), "local"));
  EXPECT_FALSE(has_tag(catalog_entry("F2[t]/(t^3)"), "simple"));
  EXPECT_TRUE(has_tag(catalog_entry("M2(F3)"), "matrix"));
  EXPECT_TRUE(has_tag(catalog_entry("M2(F3)"), "simple"));
  EXPECT_FALSE(has_tag(catalog_entry("M2(F3)"), "commutative"));
  EXPECT_TRUE(has_tag(catalog_entry("F3[t]/(t^2+1)"), "field_extension"));
  for (const auto& e : catalog()) {
    EXPECT_TRUE(std::is_sorted(e.tags.begin(), e.tags.end()));
    // Local means no nontrivial idempotent.
    if (e.algebra.dim() <= 4 && e.algebra.field().characteristic() <= 3) {
      EXPECT_EQ(has_tag(e, "local"), nontrivial_idempotents(e.algebra).empty()) << e.name;
    }
  }
}

TEST(Suites, CheapSuitesPass) {
  for (const char* name : {"lines", "stable", "quasi_stable", "strongly_simple"}) {
    const auto results = run_suite(name);
    EXPECT_FALSE(results.empty()) << name;
    for (const auto& r : results) {
      EXPECT_TRUE(r.pass) << r.suite << " " << r.check << " " << r.instance << " " << r.witness.value_or("");
      EXPECT_EQ(r.suite, name);
      EXPECT_EQ(r.millis, 0);
      EXPECT_EQ(r.seed, kDefaultSeed);
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
      const auto& a = results[i - 1];
      const auto& b = results[i];
      EXPECT_TRUE(std::tie(a.check, a.instance) <= std::tie(b.check, b.instance));
    }
  }
}

TEST(Suites, DeterministicPerSeed) {
  SuiteOptions opts;
  opts.seed = 99;
  const std::string first = dump(run_suite("closure_laws", opts));
  EXPECT_EQ(dump(run_suite("closure_laws", opts)), first);
  for (const auto& r : run_suite("closure_laws", opts)) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.instance;
    EXPECT_EQ(r.seed, 99u);
  }
}

TEST(Suites, UnknownName) {
  EXPECT_EQ(suite_names().size(), 8u);
  EXPECT_THROW(run_suite("nope"), Error);
}
