#include "flexcolor/witnesses.hpp"

#include <chrono>
#include <map>

#include "flexcolor/constructive.hpp"
#include "flexcolor/json_io.hpp"

namespace flexcolor {

namespace {

using nlohmann::ordered_json;

// Builds an entry from 1-based printed labels, remapped to the dense pot.
WitnessEntry make_entry(const std::string& name, std::vector<int> sizes,
                        const std::vector<std::vector<std::vector<long long>>>&
                            labeled_lists,
                        const std::vector<std::tuple<int, int, long long>>&
                            request_entries,
                        Claim claim) {
  MultipartiteGraph g(sizes);
  ordered_json j;
  j["partite_sizes"] = sizes;
  j["lists"] = labeled_lists;
  if (!request_entries.empty()) {
    ordered_json req = ordered_json::array();
    for (auto& [part, index, color] : request_entries)
      req.push_back({{"part", part}, {"index", index}, {"color", color}});
    j["request"] = req;
  }
  Instance inst = parse_instance(j.dump());
  WitnessEntry e{name, std::move(inst.graph), std::move(inst.lists),
                 std::move(inst.request), claim};
  return e;
}

WitnessEntry precolor_entry(int t, int n, long long b) {
  ListAssignment bad = precolor_counterexample(t, n, b);
  MultipartiteGraph g({n, static_cast<int>(b)});
  return WitnessEntry{"precolor_" + std::to_string(t) + "_" +
                          std::to_string(n) + "_" + std::to_string(b),
                      std::move(g), std::move(bad), std::nullopt,
                      Claim{ClaimType::NotColorable, 0}};
}

std::vector<WitnessEntry> build_catalog() {
  std::vector<WitnessEntry> entries;

  entries.push_back(make_entry(
      "k37_32", {3, 7},
      {{{1, 2, 3}, {1, 3, 4}, {2, 4, 5}},
       {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}}},
      {}, Claim{ClaimType::NotColorable, 0}));

  entries.push_back(make_entry(
      "k45_32", {4, 5},
      {{{1, 2, 5}, {1, 2, 6}, {3, 4, 5}, {3, 4, 6}},
       {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 6}}},
      {}, Claim{ClaimType::NotColorable, 0}));

  entries.push_back(make_entry(
      "k46_23", {4, 6},
      {{{1, 2}, {1, 3}, {4, 5}, {6, 7}},
       {{1, 4, 6}, {1, 4, 7}, {1, 5, 6}, {1, 5, 7}, {2, 3, 4}, {2, 3, 5}}},
      {}, Claim{ClaimType::NotColorable, 0}));

  entries.push_back(make_entry(
      "k2n_t2_2", {2, 2}, {{{1, 2}, {3, 4}}, {{1, 3}, {1, 4}}},
      {{0, 0, 1}}, Claim{ClaimType::MaxSatisfiedEquals, 0}));

  entries.push_back(make_entry(
      "k2n_t2_3", {2, 3}, {{{1, 2}, {3, 4}}, {{1, 3}, {1, 4}, {1, 2}}},
      {{0, 0, 1}}, Claim{ClaimType::MaxSatisfiedEquals, 0}));

  entries.push_back(make_entry(
      "k3n_t3_flex_7", {3, 7},
      {{{1, 4, 5}, {2, 6, 7}, {3, 8, 9}},
       {{1, 2, 3},
        {1, 2, 8},
        {1, 2, 9},
        {1, 3, 6},
        {1, 3, 7},
        {2, 3, 4},
        {2, 3, 5}}},
      {{0, 0, 1}, {0, 1, 2}, {0, 2, 3}},
      Claim{ClaimType::MaxSatisfiedAtMost, 1}));

  entries.push_back(make_entry(
      "k3n_t3_flex_8", {3, 8},
      {{{1, 4, 5}, {2, 6, 7}, {3, 8, 9}},
       {{1, 2, 3},
        {1, 2, 8},
        {1, 2, 9},
        {1, 3, 6},
        {1, 3, 7},
        {2, 3, 4},
        {2, 3, 5},
        {1, 2, 3}}},
      {{0, 0, 1}, {0, 1, 2}, {0, 2, 3}},
      Claim{ClaimType::MaxSatisfiedAtMost, 1}));

  entries.push_back(precolor_entry(3, 2, 9));
  entries.push_back(precolor_entry(2, 2, 4));
  return entries;
}

std::string claim_type_name(ClaimType t) {
  switch (t) {
    case ClaimType::NotColorable:
      return "not-colorable";
    case ClaimType::MaxSatisfiedAtMost:
      return "max-satisfied-at-most";
    case ClaimType::MaxSatisfiedEquals:
      return "max-satisfied-equals";
  }
  return "?";
}

ClaimType claim_type_from(const std::string& s) {
  if (s == "not-colorable") return ClaimType::NotColorable;
  if (s == "max-satisfied-at-most") return ClaimType::MaxSatisfiedAtMost;
  if (s == "max-satisfied-equals") return ClaimType::MaxSatisfiedEquals;
  throw InputError("unknown claim type: " + s);
}

}  // namespace

const std::vector<WitnessEntry>& catalog() {
  static const std::vector<WitnessEntry> entries = build_catalog();
  return entries;
}

const WitnessEntry* find_witness(const std::string& name) {
  for (const WitnessEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

VerificationReport verify(const WitnessEntry& entry) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = entry.name;
  rep.claim = entry.claim;
  switch (entry.claim.type) {
    case ClaimType::NotColorable: {
      ColorableResult res = is_colorable(entry.shape, entry.assignment);
      rep.nodes = res.nodes;
      rep.pass = !res.colorable;
      rep.detail = res.colorable ? "unexpected proper coloring exists"
                                 : "no proper coloring";
      break;
    }
    case ClaimType::MaxSatisfiedAtMost:
    case ClaimType::MaxSatisfiedEquals: {
      if (!entry.request) {
        rep.pass = false;
        rep.detail = "claim needs a request";
        break;
      }
      MaxSatResult res =
          max_satisfied(entry.shape, entry.assignment, *entry.request);
      rep.nodes = res.nodes;
      if (res.status == SatStatus::NotColorable) {
        rep.pass = false;
        rep.detail = "instance unexpectedly not colorable";
        break;
      }
      rep.measured_best = res.best;
      if (entry.claim.type == ClaimType::MaxSatisfiedAtMost)
        rep.pass = res.best <= entry.claim.value;
      else
        rep.pass = res.best == entry.claim.value;
      rep.detail = "measured best = " + std::to_string(res.best);
      break;
    }
  }
  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rep;
}

ordered_json catalog_to_json() {
  ordered_json root;
  root["version"] = 1;
  ordered_json entries = ordered_json::array();
  for (const WitnessEntry& e : catalog()) {
    ordered_json j;
    j["name"] = e.name;
    ordered_json inst = instance_to_json(e.shape, e.assignment,
                                         e.request ? &*e.request : nullptr);
    j["partite_sizes"] = inst["partite_sizes"];
    j["lists"] = inst["lists"];
    j["request"] = inst.contains("request") ? inst["request"]
                                            : ordered_json(nullptr);
    ordered_json claim;
    claim["type"] = claim_type_name(e.claim.type);
    if (e.claim.type != ClaimType::NotColorable) claim["value"] = e.claim.value;
    j["claim"] = claim;
    entries.push_back(j);
  }
  root["entries"] = entries;
  return root;
}

std::string catalog_json_text() { return catalog_to_json().dump(2) + "\n"; }

std::string catalog_hash() {
  std::string text = catalog_json_text();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::vector<WitnessEntry> catalog_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("catalog parse error: ") + e.what());
  }
  if (!root.contains("entries") || !root["entries"].is_array())
    throw InputError("catalog needs an entries array");
  std::vector<WitnessEntry> out;
  for (const auto& j : root["entries"]) {
    ordered_json inst;
    inst["partite_sizes"] = j.at("partite_sizes");
    inst["lists"] = j.at("lists");
    if (j.contains("request") && !j["request"].is_null())
      inst["request"] = j["request"];
    Instance parsed = parse_instance(inst.dump());
    Claim claim;
    claim.type = claim_type_from(j.at("claim").at("type").get<std::string>());
    if (claim.type != ClaimType::NotColorable)
      claim.value = j.at("claim").at("value").get<int>();
    out.push_back(WitnessEntry{j.at("name").get<std::string>(),
                               std::move(parsed.graph),
                               std::move(parsed.lists),
                               std::move(parsed.request), claim});
  }
  return out;
}

std::vector<std::string> diff_assignments(const MultipartiteGraph& shape,
                                          const ListAssignment& a,
                                          const ListAssignment& b) {
  std::vector<std::string> out;
  if (a.size() != b.size()) {
    out.push_back("different vertex counts");
    return out;
  }
  for (int v = 0; v < a.size(); ++v) {
    // Compare by original labels so the diff is human-auditable.
    std::vector<long long> la, lb;
    for (int c : a.list(v).to_vector()) la.push_back(a.label_of(c));
    for (int c : b.list(v).to_vector()) lb.push_back(b.label_of(c));
    if (la != lb) {
      Vertex vx = shape.vertex_at(v);
      std::string line = std::to_string(vx.part) + "/" +
                         std::to_string(vx.index) + ": {";
      for (std::size_t i = 0; i < la.size(); ++i)
        line += (i ? "," : "") + std::to_string(la[i]);
      line += "} vs {";
      for (std::size_t i = 0; i < lb.size(); ++i)
        line += (i ? "," : "") + std::to_string(lb[i]);
      line += "}";
      out.push_back(line);
    }
  }
  return out;
}

}  // namespace flexcolor
