// Catalog of explicit list assignments with machine-checkable claims,
// stored with their printed (1-based) color labels and verified against the
// exact solver.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexcolor/exact.hpp"
#include "flexcolor/graph.hpp"

namespace flexcolor {

enum class ClaimType { NotColorable, MaxSatisfiedAtMost, MaxSatisfiedEquals };

struct Claim {
  ClaimType type = ClaimType::NotColorable;
  int value = 0;  // for the MaxSatisfied claims
};

struct WitnessEntry {
  std::string name;
  MultipartiteGraph shape;
  ListAssignment assignment;
  std::optional<Request> request;
  Claim claim;
};

struct VerificationReport {
  std::string name;
  bool pass = false;
  Claim claim;
  std::optional<int> measured_best;  // for MaxSatisfied claims
  long long nodes = 0;
  double ms = 0;
  std::string detail;
};

// The fixed catalog: k37_32, k45_32, k46_23, k2n_t2 (n in {2,3}),
// k3n_t3_flex (n in {7,8}), precolor(3,2,9), precolor(2,2,4).
const std::vector<WitnessEntry>& catalog();

const WitnessEntry* find_witness(const std::string& name);

// Runs the exact solver against the entry's claim.
VerificationReport verify(const WitnessEntry& entry);

// Canonical JSON serialization of the catalog (byte-stable; the repository
// ships data/witnesses.json with exactly these bytes).
nlohmann::ordered_json catalog_to_json();
std::string catalog_json_text();

// FNV-1a 64 over the canonical catalog bytes, as fixed-width hex.
std::string catalog_hash();

// Round-trips the canonical JSON text back into entries.
std::vector<WitnessEntry> catalog_from_json(const std::string& text);

// Slots where two assignments differ: "part/index: {..} vs {..}" lines.
std::vector<std::string> diff_assignments(const MultipartiteGraph& shape,
                                          const ListAssignment& a,
                                          const ListAssignment& b);

}  // namespace flexcolor
