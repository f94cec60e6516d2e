#include "flexcolor/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace flexcolor {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw InputError("invalid instance: field '" + field + "': " + why);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("<root>", "expected an object");
  if (!j.contains("partite_sizes")) fail("partite_sizes", "missing");
  if (!j["partite_sizes"].is_array() || j["partite_sizes"].empty())
    fail("partite_sizes", "expected a nonempty array of positive integers");
  std::vector<int> sizes;
  for (const auto& s : j["partite_sizes"]) {
    if (!s.is_number_integer() || s.get<long long>() < 1)
      fail("partite_sizes", "entries must be positive integers");
    sizes.push_back(s.get<int>());
  }
  MultipartiteGraph g(sizes);

  if (!j.contains("lists")) fail("lists", "missing");
  const auto& jl = j["lists"];
  if (!jl.is_array() || static_cast<int>(jl.size()) != g.num_parts())
    fail("lists", "expected one array per part");

  // First pass: collect labels; dense ids follow ascending label order.
  std::map<long long, int> dense;
  for (int p = 0; p < g.num_parts(); ++p) {
    const auto& part = jl[p];
    if (!part.is_array() || static_cast<int>(part.size()) != g.part_size(p))
      fail("lists[" + std::to_string(p) + "]",
           "expected one list per vertex of the part");
    for (const auto& lst : part) {
      if (!lst.is_array() || lst.empty())
        fail("lists[" + std::to_string(p) + "]", "lists must be nonempty arrays");
      for (const auto& c : lst) {
        if (!c.is_number_integer() || c.get<long long>() < 0)
          fail("lists[" + std::to_string(p) + "]",
               "colors must be nonnegative integers");
        dense.emplace(c.get<long long>(), 0);
      }
    }
  }
  if (static_cast<int>(dense.size()) > ColorSet::kMaxColors)
    fail("lists", "more than " + std::to_string(ColorSet::kMaxColors) +
                      " distinct colors");
  std::vector<long long> labels;
  for (auto& [label, id] : dense) {
    id = static_cast<int>(labels.size());
    labels.push_back(label);
  }

  std::vector<ColorSet> lists(g.num_vertices());
  for (int p = 0; p < g.num_parts(); ++p)
    for (int i = 0; i < g.part_size(p); ++i) {
      ColorSet cs;
      for (const auto& c : jl[p][i]) cs.set(dense[c.get<long long>()]);
      if (cs.count() != static_cast<int>(jl[p][i].size()))
        fail("lists[" + std::to_string(p) + "][" + std::to_string(i) + "]",
             "duplicate color in a list");
      lists[g.flat_index(Vertex{p, i})] = cs;
    }
  ListAssignment L(std::move(lists), std::move(labels));

  std::optional<Request> req;
  if (j.contains("request") && !j["request"].is_null()) {
    const auto& jr = j["request"];
    if (!jr.is_array()) fail("request", "expected an array of entries");
    Request r(g.num_vertices());
    for (const auto& e : jr) {
      if (!e.is_object() || !e.contains("part") || !e.contains("index") ||
          !e.contains("color"))
        fail("request", "entries need part, index, color");
      Vertex v{e["part"].get<int>(), e["index"].get<int>()};
      if (!g.valid(v)) fail("request", "vertex out of range");
      long long label = e["color"].get<long long>();
      auto it = dense.find(label);
      if (it == dense.end())
        fail("request", "requested color " + std::to_string(label) +
                            " does not appear in any list");
      try {
        r.add(g.flat_index(v), it->second);
      } catch (const InputError& err) {
        fail("request", err.what());
      }
    }
    validate_request(g, L, r);
    req = std::move(r);
  }
  return Instance{std::move(g), std::move(L), std::move(req)};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

ordered_json instance_to_json(const MultipartiteGraph& g,
                              const ListAssignment& L, const Request* r) {
  ordered_json j;
  j["partite_sizes"] = g.partite_sizes();
  ordered_json parts = ordered_json::array();
  for (int p = 0; p < g.num_parts(); ++p) {
    ordered_json part = ordered_json::array();
    for (int i = 0; i < g.part_size(p); ++i) {
      ordered_json lst = ordered_json::array();
      for (int c : L.list(g.flat_index(Vertex{p, i})).to_vector())
        lst.push_back(L.label_of(c));
      part.push_back(lst);
    }
    parts.push_back(part);
  }
  j["lists"] = parts;
  if (r != nullptr && !r->empty()) {
    ordered_json entries = ordered_json::array();
    for (int flat : r->domain()) {
      Vertex v = g.vertex_at(flat);
      entries.push_back({{"part", v.part},
                         {"index", v.index},
                         {"color", L.label_of(r->color(flat))}});
    }
    j["request"] = entries;
  }
  return j;
}

std::string instance_dump(const MultipartiteGraph& g, const ListAssignment& L,
                          const Request* r) {
  return instance_to_json(g, L, r).dump(2);
}

ordered_json coloring_to_json(const MultipartiteGraph& g,
                              const ListAssignment& L, const Coloring& f) {
  ordered_json parts = ordered_json::array();
  for (int p = 0; p < g.num_parts(); ++p) {
    ordered_json part = ordered_json::array();
    for (int i = 0; i < g.part_size(p); ++i)
      part.push_back(L.label_of(f.color(g.flat_index(Vertex{p, i}))));
    parts.push_back(part);
  }
  return parts;
}

}  // namespace flexcolor
