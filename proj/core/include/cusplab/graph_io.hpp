#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cusplab/boundary_tree.hpp"
#include "cusplab/cusped_space.hpp"
#include "cusplab/group_model.hpp"
#include "cusplab/hyperbolicity.hpp"
#include "cusplab/qi.hpp"
#include "cusplab/sphere_approx.hpp"

namespace cusplab {

// All JSON output is canonical: object keys alphabetical, arrays in the
// structures' deterministic orders, two-space indentation. Parsers accept
// extra keys (in particular the "run" block the CLI adds).

std::string graph_to_json(const MetricGraph& g, int indent = 2);
MetricGraph graph_from_json_text(const std::string& text);
std::string graph_to_dot(const MetricGraph& g);

std::string cusped_to_json(const CuspedSpace& x, int indent = 2);
CuspedSpace cusped_from_json_text(const std::string& text);
std::string cusped_to_dot(const CuspedSpace& x);

std::string coned_to_json(const ConedSpace& x, int indent = 2);
ConedSpace coned_from_json_text(const std::string& text);

std::string tree_to_json(const CombinedTree& t, int indent = 2);
CombinedTree tree_from_json_text(const std::string& text);
std::string tree_to_dot(const CombinedTree& t);

std::string delta_to_json(const DeltaReport& r, int indent = 2);
std::string scan_to_csv(const std::vector<ScanPoint>& rows);

std::string sphere_to_json(const SphereGraph& s, int indent = 2);
std::string pipeline_to_json(const BoundaryPipeline& p, int indent = 2);

std::string bound_report_to_json(const BoundReport& r, const Rational& k, const Rational& c,
                                 int density, int indent = 2);

// Group description: {"family": "free" | "free_abelian" | "finite",
//   "rank": int, "table": [[...]], "names": [...], "generator_elements": [...],
//   "generators": ["a", "b", "ab"],             (ball generating words)
//   "peripherals": [{"name": "P", "generators": ["aba-b-"]}],
//   "peripherals_not_properly_relatively_hyperbolic": bool}
// The last field is a user assertion recorded into outputs, never verified.
struct GroupSpecFile {
  GroupModel model;
  std::vector<Word> ball_generators;  // empty = model default
  std::vector<PeripheralSpec> peripherals;
  bool peripherals_flag = false;
};

GroupSpecFile group_spec_from_json_text(const std::string& text);

// Map file for the QI commands: {"map": [ints, -1 = undefined],
//   "k": [num, den], "lambda": [num, den],
//   "correspondence": [int per source piece],
//   "base_maps": [[ints] per source piece]}
// correspondence omitted means "infer (exact containment only)"; base_maps
// are only consumed by the cusped check.
struct MapFile {
  VertexMap map;
  bool has_k = false;
  Rational k{1};
  bool has_lambda = false;
  Rational lambda{1};
  bool has_correspondence = false;
  CosetCorrespondence correspondence;
  std::vector<VertexMap> base_maps;
};

MapFile map_from_json_text(const std::string& text);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace cusplab
