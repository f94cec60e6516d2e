// JSON instance schema shared by all tools:
//   { "partite_sizes": [3,7],
//     "lists": [ [[1,4,5],[2,6,7],[3,8,9]], [[1,2,3], ...] ],
//     "request": [ {"part":0,"index":0,"color":1}, ... ] }   (optional)
// Lists carry arbitrary integer labels; they are remapped to a dense pot
// 0..p-1 on ingestion with the original labels retained for reporting.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "flexcolor/graph.hpp"

namespace flexcolor {

struct Instance {
  MultipartiteGraph graph;
  ListAssignment lists;
  std::optional<Request> request;
};

// Parses an instance; throws InputError with a field diagnostic on schema
// violations and nlohmann parse errors rewrapped with position info.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Serializes with original color labels; inverse of parse_instance.
nlohmann::ordered_json instance_to_json(const MultipartiteGraph& g,
                                        const ListAssignment& L,
                                        const Request* r = nullptr);

std::string instance_dump(const MultipartiteGraph& g, const ListAssignment& L,
                          const Request* r = nullptr);

nlohmann::ordered_json coloring_to_json(const MultipartiteGraph& g,
                                        const ListAssignment& L,
                                        const Coloring& f);

}  // namespace flexcolor
