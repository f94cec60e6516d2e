#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "flexcolor/witnesses.hpp"
#include "oracle.hpp"

using namespace flexcolor;

namespace {

std::string repo_file(const std::string& rel) {
  const char* root = std::getenv("FLEXCOLOR_SOURCE_DIR");
  std::string base = root ? root : ".";
  std::ifstream in(base + "/" + rel, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("every catalog entry verifies, quickly") {
  for (const WitnessEntry& e : catalog()) {
    VerificationReport rep = verify(e);
    INFO(e.name, ": ", rep.detail);
    CHECK(rep.pass);
    CHECK(rep.ms < 1000.0);
  }
}

TEST_CASE("expected catalog membership and measured values") {
  std::vector<std::string> names;
  for (const WitnessEntry& e : catalog()) names.push_back(e.name);
  for (const char* want :
       {"k37_32", "k45_32", "k46_23", "k2n_t2_2", "k2n_t2_3", "k3n_t3_flex_7",
        "k3n_t3_flex_8", "precolor_3_2_9", "precolor_2_2_4"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  CHECK(names.size() == 9);

  auto rep7 = verify(*find_witness("k3n_t3_flex_7"));
  REQUIRE(rep7.measured_best.has_value());
  CHECK(*rep7.measured_best == 1);
  auto rep8 = verify(*find_witness("k3n_t3_flex_8"));
  REQUIRE(rep8.measured_best.has_value());
  CHECK(*rep8.measured_best == 1);
  auto rep2 = verify(*find_witness("k2n_t2_3"));
  REQUIRE(rep2.measured_best.has_value());
  CHECK(*rep2.measured_best == 0);
}

TEST_CASE("catalog entries keep the printed 1-based labels") {
  const WitnessEntry* e = find_witness("k37_32");
  REQUIRE(e != nullptr);
  CHECK(e->assignment.label_of(0) == 1);
  CHECK(e->assignment.label_of(4) == 5);
  // x_2's printed list is {1,3,4}.
  std::vector<long long> labels;
  for (int c : e->assignment.list(1).to_vector())
    labels.push_back(e->assignment.label_of(c));
  CHECK(labels == std::vector<long long>{1, 3, 4});
}

TEST_CASE("catalog JSON round-trips byte-identically") {
  std::string text = catalog_json_text();
  auto reparsed = catalog_from_json(text);
  CHECK(reparsed.size() == catalog().size());
  // Re-serializing the catalog is stable.
  CHECK(catalog_json_text() == text);
  for (std::size_t i = 0; i < reparsed.size(); ++i) {
    CHECK(reparsed[i].name == catalog()[i].name);
    CHECK(reparsed[i].assignment.lists() == catalog()[i].assignment.lists());
    CHECK(diff_assignments(reparsed[i].shape, reparsed[i].assignment,
                           catalog()[i].assignment)
              .empty());
  }
}

TEST_CASE("the shipped corpus file matches the built-in catalog bytes") {
  CHECK(repo_file("data/witnesses.json") == catalog_json_text());
}

TEST_CASE("single-color mutations of k37_32 are all detected") {
  const WitnessEntry* e = find_witness("k37_32");
  REQUIRE(e != nullptr);
  const MultipartiteGraph& g = e->shape;
  int slots = 0;
  int claim_flips = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int c : e->assignment.list(v).to_vector()) {
      // Replace color c with a pot color outside the list.
      for (int replacement = 0; replacement < e->assignment.pot_size();
           ++replacement) {
        if (e->assignment.list(v).test(replacement)) continue;
        std::vector<ColorSet> lists = e->assignment.lists();
        lists[v].reset(c);
        lists[v].set(replacement);
        ListAssignment mutated(lists, e->assignment.labels());
        auto diff = diff_assignments(g, e->assignment, mutated);
        CHECK(diff.size() == 1);  // the tampered slot is reported
        if (is_colorable(g, mutated).colorable) ++claim_flips;
        break;  // one replacement per slot suffices for the control
      }
      ++slots;
    }
  }
  CHECK(slots == 3 * 3 + 7 * 2);
  // Some mutations must flip the claim outright (sanity of the control).
  CHECK(claim_flips > 0);
}

TEST_CASE("catalog hash is stable and mirrors the corpus file") {
  CHECK(catalog_hash().size() == 16);
  // FNV-1a over the shipped bytes equals the built-in hash.
  std::string text = repo_file("data/witnesses.json");
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  CHECK(catalog_hash() == std::string(buf));
}

TEST_CASE("precolor family members obey their claims against the naive oracle") {
  const WitnessEntry* e = find_witness("precolor_2_2_4");
  REQUIRE(e != nullptr);
  CHECK(!oracle::naive_is_colorable(e->shape, e->assignment));
}
