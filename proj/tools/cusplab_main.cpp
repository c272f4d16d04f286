// cusplab: build cusped and coned spaces over small group models, measure
// four-point hyperbolicity constants, check quasi-isometry distance bounds,
// and cut boundary-approximation trees out of distance spheres.
//
// Every JSON output carries a "run" block (command, resolved options, input
// hashes, tool version) so results can be traced back to their inputs; CSV
// outputs carry the same block in a leading comment line. Exit codes:
//   0  success
//   1  a requested check ran and failed (qi bound violated)
//   2  usage or input errors

#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusplab/boundary_tree.hpp"
#include "cusplab/cusped_space.hpp"
#include "cusplab/graph_io.hpp"
#include "cusplab/group_model.hpp"
#include "cusplab/horoball.hpp"
#include "cusplab/hyperbolicity.hpp"
#include "cusplab/metric_graph.hpp"
#include "cusplab/qi.hpp"
#include "cusplab/rational.hpp"
#include "cusplab/sphere_approx.hpp"

#ifndef CUSPLAB_VERSION
#define CUSPLAB_VERSION "dev"
#endif

namespace {

using nlohmann::json;
using namespace cusplab;

struct Loaded {
  std::string path;
  std::string text;
  std::string hash;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.path = path;
  l.text = read_file(path);
  l.hash = fnv1a64_hex(l.text);
  return l;
}

json run_block(const std::string& command, json options, const std::vector<const Loaded*>& inputs) {
  json in = json::object();
  for (const Loaded* l : inputs) in[l->path] = l->hash;
  json run;
  run["command"] = command;
  run["options"] = std::move(options);
  run["inputs"] = std::move(in);
  run["version"] = CUSPLAB_VERSION;
  return run;
}

// Payloads come out of the serializers already canonical; reparse, attach the
// run block and dump again so the keys stay alphabetical.
std::string with_run(const std::string& payload, const json& run) {
  json j = json::parse(payload);
  j["run"] = run;
  return j.dump(2) + "\n";
}

std::string csv_with_run(const std::string& csv, const json& run) {
  return "# run " + run.dump() + "\n" + csv;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

json rational_json(const Rational& r) { return json::array({r.num, r.den}); }

std::vector<long long> parse_params(const std::string& text) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(std::stoll(item));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("scan: empty parameter list");
  return out;
}

struct BuildOpts {
  std::string group, out, dot;
  int radius = 0;
  int depth = -1;
  bool coned = false;
};

int cmd_build(const BuildOpts& opt) {
  const Loaded g = load(opt.group);
  const GroupSpecFile spec = group_spec_from_json_text(g.text);
  const CayleyBall ball = cayley_ball(spec.model, opt.radius, spec.ball_generators);

  json options;
  options["radius"] = opt.radius;
  options["coned"] = opt.coned;
  if (spec.peripherals_flag) options["peripherals_not_properly_relatively_hyperbolic"] = true;

  std::string payload, dot;
  if (opt.coned) {
    const ConedSpace x = build_coned_space(ball, spec.model, spec.peripherals);
    payload = coned_to_json(x);
    if (!opt.dot.empty()) dot = graph_to_dot(x.graph);
  } else {
    const CuspedSpace x = build_cusped_space(ball, spec.model, spec.peripherals, opt.depth);
    options["depth"] = x.max_depth;
    payload = cusped_to_json(x);
    if (!opt.dot.empty()) dot = cusped_to_dot(x);
  }
  write_file_atomic(opt.out, with_run(payload, run_block("build", options, {&g})));
  if (!opt.dot.empty()) write_file_atomic(opt.dot, dot);
  return 0;
}

struct DeltaOpts {
  std::string input, out;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::int64_t samples = 100000;
};

int cmd_delta(const DeltaOpts& opt) {
  const Loaded in = load(opt.input);
  const MetricGraph g = graph_from_json_text(in.text);

  json options;
  options["mode"] = opt.mode;
  options["threads"] = thread_count_from_env();

  DeltaReport r;
  if (opt.mode == "sampled") {
    if (!opt.seed_set) throw std::invalid_argument("delta: sampled mode requires --seed");
    r = four_point_delta_sampled(distance_matrix(g), opt.seed, opt.samples);
    options["seed"] = opt.seed;
    options["samples"] = opt.samples;
  } else {
    r = four_point_delta(g);
  }
  write_file_atomic(opt.out, with_run(delta_to_json(r), run_block("delta", options, {&in})));
  return 0;
}

struct ScanOpts {
  std::string family, params, out;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::int64_t samples = 100000;
};

int cmd_scan(const ScanOpts& opt) {
  const std::vector<long long> params = parse_params(opt.params);
  const bool exhaustive = opt.mode != "sampled";
  if (!exhaustive && !opt.seed_set)
    throw std::invalid_argument("scan: sampled mode requires --seed");

  const std::vector<ScanPoint> rows = delta_growth_scan(
      [&](long long p) { return recipe_graph(opt.family, p); }, params, exhaustive, opt.seed,
      opt.samples);

  json options;
  options["family"] = opt.family;
  options["params"] = params;
  options["mode"] = opt.mode;
  options["threads"] = thread_count_from_env();
  if (!exhaustive) {
    options["seed"] = opt.seed;
    options["samples"] = opt.samples;
  }
  write_file_atomic(opt.out, csv_with_run(scan_to_csv(rows), run_block("scan", options, {})));
  return 0;
}

struct TreeOpts {
  std::string input, out, dot;
};

int cmd_tree(const TreeOpts& opt) {
  const Loaded in = load(opt.input);
  const MetricGraph g = graph_from_json_text(in.text);
  const CombinedTree t = combined_tree(g);
  write_file_atomic(opt.out, with_run(tree_to_json(t), run_block("tree", json::object(), {&in})));
  if (!opt.dot.empty()) write_file_atomic(opt.dot, tree_to_dot(t));
  return 0;
}

struct QiOpts {
  std::string source, target, map, out;
  std::string k, lambda;  // rationals as "n" or "n/d"; empty = not given
};

// Cone-space analogue of induce_correspondence: each source cone must land
// inside a single target cone over the same peripheral.
CosetCorrespondence infer_cone_correspondence(const VertexMap& q, const ConedSpace& X,
                                              const ConedSpace& Y) {
  std::map<std::pair<std::string, int>, int> where;
  for (int c = 0; c < static_cast<int>(Y.cones.size()); ++c)
    for (int member : Y.cones[c].members) where[{Y.cones[c].peripheral, member}] = c;

  CosetCorrespondence corr;
  for (const ConedSpace::Cone& cone : X.cones) {
    int target = -1;
    for (int member : cone.members) {
      if (!q.defined(member))
        throw std::runtime_error("correspondence: map undefined on a coset member");
      auto it = where.find({cone.peripheral, q[member]});
      if (it == where.end())
        throw std::runtime_error(
            "correspondence: image leaves every target coset; supply it explicitly");
      if (target < 0) target = it->second;
      if (target != it->second)
        throw std::runtime_error(
            "correspondence: image splits across cosets; supply it explicitly");
    }
    corr.target_of.push_back(target);
  }
  return corr;
}

int cmd_qi(const QiOpts& opt) {
  const Loaded src = load(opt.source);
  const Loaded dst = load(opt.target);
  const Loaded mp = load(opt.map);

  const json sj = json::parse(src.text);
  const json dj = json::parse(dst.text);
  const bool src_cusped = sj.contains("pieces");
  const bool dst_cusped = dj.contains("pieces");
  const bool src_coned = sj.contains("cones");
  const bool dst_coned = dj.contains("cones");
  if (src_cusped != dst_cusped || src_coned != dst_coned || src_cusped == src_coned)
    throw std::invalid_argument("qi: source and target must both be cusped or both coned spaces");

  const MapFile file = map_from_json_text(mp.text);
  const Rational k = !opt.k.empty() ? parse_rational(opt.k) : (file.has_k ? file.k : Rational(1));

  Rational lambda(1);
  std::string lambda_source;
  BoundReport report;
  Rational c(0);
  int density = 0;

  if (src_cusped) {
    const CuspedSpace X = cusped_from_json_text(src.text);
    const CuspedSpace Y = cusped_from_json_text(dst.text);

    CosetCorrespondence corr;
    std::vector<VertexMap> base_maps;
    if (file.has_correspondence) {
      corr = file.correspondence;
      base_maps = file.base_maps;
    } else {
      InducedCorrespondence ic = induce_correspondence(file.map, X, Y);
      corr = std::move(ic.corr);
      base_maps = std::move(ic.base_maps);
    }

    if (!opt.lambda.empty()) {
      lambda = parse_rational(opt.lambda);
      lambda_source = "option";
    } else if (file.has_lambda) {
      lambda = file.lambda;
      lambda_source = "file";
    } else {
      lambda = measure_cusped_lambda(file.map, corr, base_maps, X, Y);
      lambda_source = "measured";
    }

    const VertexMap Q = extend_to_cusped(file.map, corr, base_maps, X, Y);
    report = check_cusped_bound(Q, X, Y, lambda);

    const TruncationSafety sx = truncation_safety(X.graph, X.depth, X.max_depth);
    const TruncationSafety sy = truncation_safety(Y.graph, Y.depth, Y.max_depth);
    c = minimal_additive_filtered(Q, sx.full, sy.full, k, [&](int u, int v) {
      return sx.safe(u, v) && sy.safe(Q[u], Q[v]);
    });
    density = coarse_density(Q, sy.full);
  } else {
    const ConedSpace X = coned_from_json_text(src.text);
    const ConedSpace Y = coned_from_json_text(dst.text);

    const CosetCorrespondence corr = file.has_correspondence
                                         ? file.correspondence
                                         : infer_cone_correspondence(file.map, X, Y);
    const VertexMap Q = assemble_cone_map(file.map, corr, X, Y);
    const DistanceMatrix dx = distance_matrix(X.graph);
    const DistanceMatrix dy = distance_matrix(Y.graph);

    if (!opt.lambda.empty()) {
      lambda = parse_rational(opt.lambda);
      lambda_source = "option";
    } else if (file.has_lambda) {
      lambda = file.lambda;
      lambda_source = "file";
    } else {
      lambda = rational_max(Rational(1), minimal_additive(Q, dx, dy, Rational(1)));
      lambda_source = "measured";
    }

    report = cone_extension_check(file.map, corr, X, Y, lambda);
    c = minimal_additive(Q, dx, dy, k);
    density = coarse_density(Q, dy);
  }

  json options;
  options["kind"] = src_cusped ? "cusped" : "cone";
  options["k"] = rational_json(k);
  options["lambda"] = rational_json(lambda);
  options["lambda_source"] = lambda_source;

  write_file_atomic(opt.out, with_run(bound_report_to_json(report, k, c, density),
                                      run_block("qi", options, {&src, &dst, &mp})));
  return report.pass ? 0 : 1;
}

struct SphereOpts {
  std::string space, out;
  int base = 0;
  int radius = 0;
  int threshold = -1;  // -1: use the measured doubled delta of the space
  bool pipeline = false;
};

int cmd_sphere(const SphereOpts& opt) {
  const Loaded in = load(opt.space);
  const CuspedSpace x = cusped_from_json_text(in.text);

  int threshold = opt.threshold;
  std::string threshold_source = "option";
  if (threshold < 0) {
    threshold = four_point_delta(x.graph).delta_doubled;
    threshold_source = "measured";
  }

  json options;
  options["base"] = opt.base;
  options["radius"] = opt.radius;
  options["threshold"] = threshold;
  options["threshold_source"] = threshold_source;
  options["pipeline"] = opt.pipeline;

  std::string payload;
  if (opt.pipeline) {
    const BoundaryPipeline p = boundary_pipeline(x, opt.base, opt.radius, threshold);
    if (!p.connected)
      std::fprintf(stderr, "warning: sphere at radius %d is disconnected (%zu components)\n",
                   opt.radius, p.components.size());
    payload = pipeline_to_json(p);
  } else {
    payload = sphere_to_json(sphere_graph(x, opt.base, opt.radius, threshold));
  }
  write_file_atomic(opt.out, with_run(payload, run_block("sphere", options, {&in})));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cusped spaces, hyperbolicity constants and boundary trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CUSPLAB_VERSION));

  BuildOpts build_opts;
  CLI::App* build = app.add_subcommand("build", "build a cusped or coned space from a group file");
  build->add_option("--group", build_opts.group, "group description (JSON)")->required();
  build->add_option("--radius", build_opts.radius, "Cayley ball radius")->required();
  build->add_option("--depth", build_opts.depth, "horoball depth (default: from base diameters)");
  build->add_flag("--coned", build_opts.coned, "cone the coset pieces instead of gluing horoballs");
  build->add_option("--out", build_opts.out, "output JSON path")->required();
  build->add_option("--dot", build_opts.dot, "also write a Graphviz rendering");

  DeltaOpts delta_opts;
  CLI::App* delta = app.add_subcommand("delta", "four-point hyperbolicity constant of a graph");
  delta->add_option("--input", delta_opts.input, "graph or space file (JSON)")->required();
  delta->add_option("--mode", delta_opts.mode, "exhaustive (default) or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  delta->add_option("--seed", delta_opts.seed, "RNG seed (required for sampled mode)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { delta_opts.seed_set = true; });
  delta->add_option("--samples", delta_opts.samples, "sample count (default 100000)");
  delta->add_option("--out", delta_opts.out, "output JSON path")->required();

  ScanOpts scan_opts;
  CLI::App* scan = app.add_subcommand("scan", "delta growth scan over a graph family");
  scan->add_option("--family", scan_opts.family,
                   "cycle, path, horoball_cycle, horoball_path, ball_free2, ball_free_abelian2")
      ->required();
  scan->add_option("--params", scan_opts.params, "comma-separated parameter list")->required();
  scan->add_option("--mode", scan_opts.mode, "exhaustive (default) or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  scan->add_option("--seed", scan_opts.seed, "RNG seed (required for sampled mode)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { scan_opts.seed_set = true; });
  scan->add_option("--samples", scan_opts.samples, "sample count (default 100000)");
  scan->add_option("--out", scan_opts.out, "output CSV path")->required();

  TreeOpts tree_opts;
  CLI::App* tree = app.add_subcommand("tree", "combined separation tree of a connected graph");
  tree->add_option("--input", tree_opts.input, "graph file (JSON)")->required();
  tree->add_option("--out", tree_opts.out, "output JSON path")->required();
  tree->add_option("--dot", tree_opts.dot, "also write a Graphviz rendering");

  QiOpts qi_opts;
  CLI::App* qi = app.add_subcommand("qi", "check the distance bound for a map between spaces");
  qi->add_option("--source", qi_opts.source, "source space file (JSON)")->required();
  qi->add_option("--target", qi_opts.target, "target space file (JSON)")->required();
  qi->add_option("--map", qi_opts.map, "map file (JSON)")->required();
  qi->add_option("--k", qi_opts.k, "multiplicative constant, as n or n/d (default 1)");
  qi->add_option("--lambda", qi_opts.lambda, "bound multiplier (default: from file, else measured)");
  qi->add_option("--out", qi_opts.out, "output JSON path")->required();

  SphereOpts sphere_opts;
  CLI::App* sphere = app.add_subcommand("sphere", "thresholded distance sphere in a cusped space");
  sphere->add_option("--space", sphere_opts.space, "cusped space file (JSON)")->required();
  sphere->add_option("--base", sphere_opts.base, "base vertex id (default 0, the identity)");
  sphere->add_option("--radius", sphere_opts.radius, "sphere radius")->required();
  sphere->add_option("--threshold", sphere_opts.threshold,
                     "join vertices at distance <= 2*threshold (default: measured doubled delta)");
  sphere->add_flag("--pipeline", sphere_opts.pipeline,
                   "also split into components and build a tree per component");
  sphere->add_option("--out", sphere_opts.out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(build)) return cmd_build(build_opts);
    if (app.got_subcommand(delta)) return cmd_delta(delta_opts);
    if (app.got_subcommand(scan)) return cmd_scan(scan_opts);
    if (app.got_subcommand(tree)) return cmd_tree(tree_opts);
    if (app.got_subcommand(qi)) return cmd_qi(qi_opts);
    if (app.got_subcommand(sphere)) return cmd_sphere(sphere_opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
