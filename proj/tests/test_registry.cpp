#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/registry.hpp"

using namespace prc;

namespace {
const Registry& reg() {
  static const Registry r = Registry::load(default_data_dir() + "/classification.tsv");
  return r;
}
}  // namespace

TEST_CASE("row counts match the manifest") {
  const auto m = load_manifest(default_data_dir() + "/classification_manifest.tsv");
  CHECK(reg().table_counts() == m);
  CHECK(m == std::map<int, int>{{1, 27}, {2, 24}, {3, 26}, {4, 10}});
  CHECK(reg().rows().size() == 87);
}

TEST_CASE("exactly one equivalent-summands row, I.16") {
  const auto eq = reg().filter([](const TripleEntry& e) { return e.has(kEquivalentSummands); });
  REQUIRE(eq.size() == 1);
  const auto& e = reg().lookup("I.16");
  CHECK(e.label == eq[0].label);
  CHECK(e.g == "so(m,7)");
  CHECK(e.h == "so(m)⊕g2");
  CHECK(e.family == Family::Orthogonal);
}

TEST_CASE("lookup ignores whitespace; unknown labels throw") {
  CHECK(reg().lookup("IV.28").label == "IV. 28");
  CHECK(reg().lookup(" I.16 ").label == "I.16");
  CHECK_THROWS_AS(reg().lookup("V.1"), UnknownLabel);
}

TEST_CASE("duplicate rows are both kept") {
  CHECK(reg().lookup_all("II.9").size() == 2);
  for (const auto& e : reg().lookup_all("II.10")) CHECK(e.has(kDuplicateRow));
}

TEST_CASE("print defects are flagged, not repaired") {
  CHECK(reg().lookup("I.2").has(kPrintDefect));
  CHECK(reg().lookup("I.2").h.empty());
  CHECK(reg().lookup("IV.corr1").table == 4);
}

TEST_CASE("families and flags round-trip through names") {
  for (int i = 0; i < 7; ++i) {
    const auto f = static_cast<Family>(i);
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
  CHECK(flags_string(0) == "-");
  CHECK(flags_string(kPrintDefect | kDuplicateRow) == "print_defect,duplicate_row");
}

TEST_CASE("missing files") {
  CHECK_THROWS(Registry::load("/nonexistent/classification.tsv"));
  CHECK_THROWS(load_manifest("/nonexistent/manifest.tsv"));
}
