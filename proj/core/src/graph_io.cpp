#include "cusplab/graph_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cusplab {

using nlohmann::json;

namespace {

json graph_to_json_obj(const MetricGraph& g) {
  json j;
  j["n"] = g.num_vertices();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    json labels = json::object();
    for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
    j["labels"] = std::move(labels);
  }
  return j;
}

MetricGraph graph_from_json_obj(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: required keys 'n' and 'edges'");
  MetricGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: edges must be [u, v] pairs");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels"))
    for (const auto& [key, value] : j.at("labels").items())
      g.set_label(std::stoi(key), value.get<std::string>());
  return g;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);  // allow comments, throw on error
  return j;
}

json rational_to_json(const Rational& r) { return json::array({r.num, r.den}); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational json: expected [num, den]");
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

json cusped_to_json_obj(const CuspedSpace& x) {
  json j;
  j["graph"] = graph_to_json_obj(x.graph);
  j["cayley_size"] = x.cayley_size;
  j["max_depth"] = x.max_depth;
  j["depth"] = x.depth;
  j["horoball_of"] = x.horoball_of;
  json pieces = json::array();
  for (const auto& p : x.pieces) {
    json pj;
    pj["peripheral"] = p.peripheral;
    pj["rep"] = p.rep;
    pj["members"] = p.members;
    pj["first_vertex"] = p.first_vertex;
    pj["intrinsic"] = p.intrinsic;
    json be = json::array();
    for (const auto& [a, b] : p.base_edges) be.push_back({a, b});
    pj["base_edges"] = std::move(be);
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

json tree_to_json_obj(const CombinedTree& t) {
  json j;
  json vertices = json::array();
  for (const auto& v : t.vertices) {
    json vj;
    vj["type"] = tree_type_name(v.type);
    vj["set"] = v.set;
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

CombinedTree tree_from_json_obj(const json& j) {
  CombinedTree t;
  for (const auto& vj : j.at("vertices")) {
    const std::string type = vj.at("type").get<std::string>();
    CombinedTree::Vertex v;
    if (type == "cutpoint")
      v.type = TreeVertexType::CutPoint;
    else if (type == "pair")
      v.type = TreeVertexType::Pair;
    else if (type == "necklace")
      v.type = TreeVertexType::Necklace;
    else if (type == "rigid")
      v.type = TreeVertexType::Rigid;
    else
      throw std::invalid_argument("tree json: unknown vertex type '" + type + "'");
    v.set = vj.at("set").get<std::vector<int>>();
    t.vertices.push_back(std::move(v));
  }
  for (const auto& e : j.at("edges")) t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return t;
}

json sphere_to_json_obj(const SphereGraph& s) {
  json j;
  j["diagnostic"] = true;
  j["graph"] = graph_to_json_obj(s.graph);
  j["base"] = s.base;
  j["radius"] = s.radius;
  j["threshold"] = s.threshold;
  j["source"] = s.source;
  j["horoball_tag"] = s.horoball_tag;
  return j;
}

json delta_to_json_obj(const DeltaReport& r) {
  json j;
  j["delta_doubled"] = r.delta_doubled;
  j["witness"] = r.witness;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  if (!r.exhaustive) {
    j["seed"] = r.seed;
    j["samples"] = r.samples;
  }
  return j;
}

}  // namespace

std::string graph_to_json(const MetricGraph& g, int indent) {
  return graph_to_json_obj(g).dump(indent) + "\n";
}

MetricGraph graph_from_json_text(const std::string& text) {
  const json j = parse(text);
  // accept either a bare graph or any wrapper carrying a "graph" key
  return graph_from_json_obj(j.contains("graph") ? j.at("graph") : j);
}

std::string graph_to_dot(const MetricGraph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (const std::string* l = g.label(v)) out << " [label=\"" << *l << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string cusped_to_json(const CuspedSpace& x, int indent) {
  return cusped_to_json_obj(x).dump(indent) + "\n";
}

CuspedSpace cusped_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("pieces") || !j.contains("depth"))
    throw std::invalid_argument("cusped json: not a cusped space file");
  CuspedSpace x;
  x.graph = graph_from_json_obj(j.at("graph"));
  x.cayley_size = j.at("cayley_size").get<int>();
  x.max_depth = j.at("max_depth").get<int>();
  x.depth = j.at("depth").get<std::vector<int>>();
  x.horoball_of = j.at("horoball_of").get<std::vector<int>>();
  if (static_cast<int>(x.depth.size()) != x.graph.num_vertices() ||
      static_cast<int>(x.horoball_of.size()) != x.graph.num_vertices())
    throw std::invalid_argument("cusped json: depth annotation size mismatch");
  for (const auto& pj : j.at("pieces")) {
    CuspedSpace::Piece p;
    p.peripheral = pj.at("peripheral").get<std::string>();
    p.rep = pj.at("rep").get<std::string>();
    p.members = pj.at("members").get<std::vector<int>>();
    p.first_vertex = pj.at("first_vertex").get<int>();
    p.intrinsic = pj.at("intrinsic").get<bool>();
    for (const auto& e : pj.at("base_edges"))
      p.base_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    x.pieces.push_back(std::move(p));
  }
  return x;
}

std::string cusped_to_dot(const CuspedSpace& x) {
  std::ostringstream out;
  out << "graph cusped {\n  node [shape=circle, style=filled];\n";
  for (int v = 0; v < x.graph.num_vertices(); ++v) {
    const int shade = x.max_depth > 0 ? 100 - (60 * x.depth[v]) / x.max_depth : 100;
    out << "  " << v << " [fillcolor=\"gray" << shade << "\"";
    if (const std::string* l = x.graph.label(v)) out << ", label=\"" << *l << "\"";
    out << "];\n";
  }
  for (const auto& [u, v] : x.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string coned_to_json(const ConedSpace& x, int indent) {
  json j;
  j["graph"] = graph_to_json_obj(x.graph);
  j["cayley_size"] = x.cayley_size;
  j["first_cone"] = x.first_cone;
  json cones = json::array();
  for (const auto& c : x.cones) {
    json cj;
    cj["peripheral"] = c.peripheral;
    cj["rep"] = c.rep;
    cj["members"] = c.members;
    cones.push_back(std::move(cj));
  }
  j["cones"] = std::move(cones);
  return j.dump(indent) + "\n";
}

ConedSpace coned_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("cones")) throw std::invalid_argument("coned json: not a coned space file");
  ConedSpace x;
  x.graph = graph_from_json_obj(j.at("graph"));
  x.cayley_size = j.at("cayley_size").get<int>();
  x.first_cone = j.at("first_cone").get<int>();
  for (const auto& cj : j.at("cones")) {
    ConedSpace::Cone c;
    c.peripheral = cj.at("peripheral").get<std::string>();
    c.rep = cj.at("rep").get<std::string>();
    c.members = cj.at("members").get<std::vector<int>>();
    x.cones.push_back(std::move(c));
  }
  return x;
}

std::string tree_to_json(const CombinedTree& t, int indent) {
  return tree_to_json_obj(t).dump(indent) + "\n";
}

CombinedTree tree_from_json_text(const std::string& text) {
  return tree_from_json_obj(parse(text));
}

std::string tree_to_dot(const CombinedTree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i) {
    const auto& v = t.vertices[i];
    const char* shape = "box";
    switch (v.type) {
      case TreeVertexType::CutPoint: shape = "circle"; break;
      case TreeVertexType::Pair: shape = "diamond"; break;
      case TreeVertexType::Necklace: shape = "doublecircle"; break;
      case TreeVertexType::Rigid: shape = "box"; break;
    }
    out << "  " << i << " [shape=" << shape << ", label=\"{";
    for (size_t k = 0; k < v.set.size(); ++k) out << (k ? "," : "") << v.set[k];
    out << "}\", tooltip=\"" << jsj_label(v.type) << "\"];\n";
  }
  for (const auto& [a, b] : t.edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string delta_to_json(const DeltaReport& r, int indent) {
  return delta_to_json_obj(r).dump(indent) + "\n";
}

std::string scan_to_csv(const std::vector<ScanPoint>& rows) {
  std::ostringstream out;
  out << "param,delta_doubled,w0,w1,w2,w3,mode,seed,samples\n";
  for (const ScanPoint& p : rows) {
    const DeltaReport& r = p.report;
    out << p.param << ',' << r.delta_doubled << ',' << r.witness[0] << ',' << r.witness[1] << ','
        << r.witness[2] << ',' << r.witness[3] << ',' << (r.exhaustive ? "exhaustive" : "sampled")
        << ',' << r.seed << ',' << r.samples << '\n';
  }
  return out.str();
}

std::string sphere_to_json(const SphereGraph& s, int indent) {
  return sphere_to_json_obj(s).dump(indent) + "\n";
}

std::string pipeline_to_json(const BoundaryPipeline& p, int indent) {
  json j;
  j["diagnostic"] = true;
  j["sphere"] = sphere_to_json_obj(p.sphere);
  j["connected"] = p.connected;
  j["components"] = p.components;
  json trees = json::array();
  for (const auto& t : p.trees) trees.push_back(tree_to_json_obj(t));
  j["trees"] = std::move(trees);
  return j.dump(indent) + "\n";
}

std::string bound_report_to_json(const BoundReport& r, const Rational& k, const Rational& c,
                                 int density, int indent) {
  json j;
  j["k"] = rational_to_json(k);
  j["c"] = rational_to_json(c);
  j["density"] = density;
  json b;
  b["pass"] = r.pass;
  b["lambda"] = rational_to_json(r.lambda);
  b["worst_ratio"] = rational_to_json(r.worst_ratio);
  b["witness"] = r.witness;
  b["pairs_checked"] = r.pairs_checked;
  b["pairs_skipped"] = r.pairs_skipped;
  b["saw_unreachable"] = r.saw_unreachable;
  j["bound_checked"] = std::move(b);
  return j.dump(indent) + "\n";
}

GroupSpecFile group_spec_from_json_text(const std::string& text) {
  const json j = parse(text);
  const std::string family = j.at("family").get<std::string>();
  GroupSpecFile out;
  if (family == "free") {
    out.model = GroupModel::free_group(j.at("rank").get<int>());
  } else if (family == "free_abelian") {
    out.model = GroupModel::free_abelian(j.at("rank").get<int>());
  } else if (family == "finite") {
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::vector<int> gens;
    if (j.contains("generator_elements"))
      gens = j.at("generator_elements").get<std::vector<int>>();
    out.model = GroupModel::finite(j.at("table").get<std::vector<std::vector<int>>>(),
                                   std::move(names), std::move(gens));
  } else {
    throw std::invalid_argument("group spec: unknown family '" + family + "'");
  }
  if (j.contains("generators"))
    for (const auto& g : j.at("generators"))
      out.ball_generators.push_back(out.model.parse_word(g.get<std::string>()));
  if (j.contains("peripherals")) {
    for (const auto& pj : j.at("peripherals")) {
      PeripheralSpec spec;
      spec.name = pj.at("name").get<std::string>();
      for (const auto& g : pj.at("generators")) spec.generator_words.push_back(g.get<std::string>());
      out.peripherals.push_back(std::move(spec));
    }
  }
  if (j.contains("peripherals_not_properly_relatively_hyperbolic"))
    out.peripherals_flag = j.at("peripherals_not_properly_relatively_hyperbolic").get<bool>();
  return out;
}

MapFile map_from_json_text(const std::string& text) {
  const json j = parse(text);
  MapFile out;
  out.map = VertexMap(j.at("map").get<std::vector<int>>());
  if (j.contains("k")) {
    out.has_k = true;
    out.k = rational_from_json(j.at("k"));
  }
  if (j.contains("lambda")) {
    out.has_lambda = true;
    out.lambda = rational_from_json(j.at("lambda"));
  }
  if (j.contains("correspondence")) {
    out.has_correspondence = true;
    out.correspondence.target_of = j.at("correspondence").get<std::vector<int>>();
  }
  if (j.contains("base_maps"))
    for (const auto& bm : j.at("base_maps"))
      out.base_maps.emplace_back(bm.get<std::vector<int>>());
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cusplab
