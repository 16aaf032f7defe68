#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "io.hpp"
#include "rctree/cut.hpp"
#include "rctree/euclid.hpp"
#include "rctree/hst.hpp"
#include "rctree/metric.hpp"
#include "rctree/oracles.hpp"

using nlohmann::json;

namespace rccli {

namespace {

using rcio::CliError;

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Synthetic inputs: "random:points:d=2,n=256" or "random:matrix:n=64",
// deterministic in --seed.

struct RandomSpec {
  std::string kind;
  int n = 16;
  int dim = 2;
};

bool is_random_input(const std::string& path) { return path.rfind("random:", 0) == 0; }

RandomSpec parse_random_spec(const std::string& path) {
  const auto parts = split_on(path, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw CliError("parse", "random input must look like random:points:d=2,n=256");
  RandomSpec spec;
  spec.kind = parts[1];
  if (spec.kind != "points" && spec.kind != "matrix")
    throw CliError("parse", "unknown random input kind '" + spec.kind + "'");
  if (parts.size() == 3 && !parts[2].empty()) {
    for (const auto& kv : split_on(parts[2], ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw CliError("parse", "bad random parameter '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      char* end = nullptr;
      const long long v = std::strtoll(kv.c_str() + eq + 1, &end, 10);
      if (end != kv.c_str() + kv.size())
        throw CliError("parse", "bad random parameter '" + kv + "'");
      if (key == "n")
        spec.n = static_cast<int>(v);
      else if (key == "d")
        spec.dim = static_cast<int>(v);
      else
        throw CliError("parse", "unknown random parameter '" + key + "'");
    }
  }
  if (spec.n < 1 || spec.n > 100000) throw CliError("parse", "random n must be in [1, 100000]");
  if (spec.dim < 1 || spec.dim > 16) throw CliError("parse", "random d must be in [1, 16]");
  return spec;
}

double next_uniform(std::mt19937_64& g) {
  return std::ldexp(static_cast<double>(g() >> 11), -53);
}

rctree::PointSet random_point_set(const RandomSpec& spec, long long seed) {
  std::mt19937_64 g(static_cast<std::uint64_t>(seed));
  rctree::PointSet ps;
  ps.dim = spec.dim;
  for (int i = 0; i < spec.n; ++i) {
    std::vector<double> p(static_cast<size_t>(spec.dim));
    for (double& c : p) c = 100.0 * next_uniform(g);
    ps.points.push_back(std::move(p));
  }
  return ps;
}

rctree::PointSet load_point_source(const std::string& input, long long seed) {
  if (is_random_input(input)) {
    const RandomSpec spec = parse_random_spec(input);
    if (spec.kind != "points")
      throw CliError("parse", "this command needs points; use random:points:...");
    return random_point_set(spec, seed);
  }
  const std::string text = rcio::read_file(input);
  if (!rcio::looks_like_point_file(text))
    throw CliError("parse", "expected a point file (header 'd n', then coordinates)");
  return rcio::parse_points(text);
}

rctree::Metric load_metric_source(const std::string& input, long long seed) {
  if (is_random_input(input)) {
    const RandomSpec spec = parse_random_spec(input);
    return rctree::metric_from_points(random_point_set(spec, seed));
  }
  const std::string text = rcio::read_file(input);
  if (rcio::looks_like_point_file(text))
    return rctree::metric_from_points(rcio::parse_points(text));
  return rctree::validate_metric(rcio::parse_csv_matrix(text));
}

// ---------------------------------------------------------------------------
// Report / tree serialization. Trees and reports are written in the input's
// original units; reports additionally carry the normalized costs.

json witness_json(const rctree::PairWitness& w, double inv) {
  return json{{"u", w.u}, {"v", w.v}, {"d", w.d * inv}, {"d_tree", w.d_tree * inv}};
}

json report_json(const rctree::StretchReport& rep, double inv) {
  return json{
      {"source_cost", rep.source_cost * inv},
      {"tree_cost", rep.tree_cost * inv},
      {"source_cost_normalized", rep.source_cost},
      {"tree_cost_normalized", rep.tree_cost},
      {"stretch", rep.stretch},
      {"stretch_bound", rep.stretch_bound},
      {"stretch_ok", rep.stretch_ok},
      {"max_cut_ratio", rep.max_cut_ratio},
      {"cut_ratio_bound", rep.cut_ratio_bound},
      {"cut_bound_ok", rep.cut_bound_ok},
      {"dominance_ok", rep.dominance_ok},
      {"worst_pair", witness_json(rep.worst_pair, inv)},
  };
}

json euclid_report_json(const rctree::EuclidReport& rep) {
  return json{
      {"source_cost", rep.source_cost},
      {"tree_cost", rep.tree_cost},
      {"stretch", rep.stretch},
      {"stretch_bound", rep.stretch_bound},
      {"stretch_ok", rep.stretch_ok},
      {"max_path", rep.max_path},
      {"box_longest", rep.box_longest},
      {"path_bound", rep.path_bound},
      {"path_ok", rep.path_ok},
      {"max_cut_ratio", rep.max_cut_ratio},
      {"cut_ratio_bound", rep.cut_ratio_bound},
      {"cut_bound_ok", rep.cut_bound_ok},
      {"dominance_ok", rep.dominance_ok},
      {"worst_pair", witness_json(rep.worst_pair, 1.0)},
  };
}

json embed_tree_json(const rctree::Metric& m, const rctree::WeightedTree& t, int delta) {
  const double inv = 1.0 / m.scale;
  const bool hst = t.kind == rctree::TreeKind::Hst;
  json nodes = json::array();
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const rctree::TreeNode& nd = t.nodes[i];
    json e{{"id", static_cast<int>(i)}, {"parent", nd.parent}, {"point", nd.point}};
    if (hst) {
      e["level"] = nd.level;
      e["edge_length"] = nd.edge_length * inv;
    } else {
      e["label"] = nd.label * inv;
    }
    nodes.push_back(std::move(e));
  }
  json tree{{"mode", hst ? "hst" : "ultra"},
            {"scale", m.scale},
            {"n", m.n},
            {"root", t.root},
            {"nodes", std::move(nodes)}};
  if (hst) tree["delta"] = delta;
  return tree;
}

json spantree_json(const rctree::PointSet& ps, const rctree::SpanningTree& t, double alpha) {
  json edges = json::array();
  for (const rctree::TreeEdge& e : t.edges)
    edges.push_back(json{{"u", e.u}, {"v", e.v}, {"length", e.length}});
  return json{{"mode", "spantree"}, {"alpha", alpha},    {"dim", ps.dim},
              {"n", t.n},           {"root", t.root},    {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------
// Tree files back in. Node values are stored in original units; the caller
// rescales against the freshly validated source metric.

struct LoadedTree {
  std::string mode;
  double alpha = 0.25;
  rctree::WeightedTree weighted;  // hst | ultra
  rctree::SpanningTree spanning;  // spantree
};

int require_int(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw CliError("parse", std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double require_real(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw CliError("parse", std::string("field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw CliError("parse", std::string("field '") + key + "' must be finite");
  return x;
}

LoadedTree parse_tree_document(const std::string& path) {
  json doc;
  try {
    doc = json::parse(rcio::read_file(path));
  } catch (const json::exception& e) {
    throw CliError("parse", std::string("tree file: ") + e.what());
  }
  const json& tree = doc.is_object() && doc.contains("tree") ? doc["tree"] : doc;
  if (!tree.is_object() || !tree.contains("mode"))
    throw CliError("parse", "tree file has no mode field");
  LoadedTree lt;
  lt.mode = tree.at("mode").get<std::string>();

  if (lt.mode == "spantree") {
    lt.alpha = require_real(tree, "alpha");
    if (!(lt.alpha > 0.0 && lt.alpha < 0.5))
      throw CliError("parse", "tree file alpha outside (0, 1/2)");
    lt.spanning.n = require_int(tree, "n");
    lt.spanning.root = require_int(tree, "root");
    if (!tree.contains("edges") || !tree.at("edges").is_array())
      throw CliError("parse", "spantree file needs an edges array");
    for (const json& e : tree.at("edges"))
      lt.spanning.edges.push_back(
          {require_int(e, "u"), require_int(e, "v"), require_real(e, "length")});
    return lt;
  }
  if (lt.mode != "hst" && lt.mode != "ultra")
    throw CliError("parse", "unknown tree mode '" + lt.mode + "'");

  const bool hst = lt.mode == "hst";
  const int n = require_int(tree, "n");
  if (n < 1) throw CliError("parse", "tree file n must be positive");
  lt.weighted.kind = hst ? rctree::TreeKind::Hst : rctree::TreeKind::Ultrametric;
  lt.weighted.root = require_int(tree, "root");
  if (!tree.contains("nodes") || !tree.at("nodes").is_array() || tree.at("nodes").empty())
    throw CliError("parse", "tree file needs a nonempty nodes array");
  const json& nodes = tree.at("nodes");
  lt.weighted.nodes.resize(nodes.size());
  lt.weighted.leaf_of_point.assign(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < nodes.size(); ++i) {
    const json& e = nodes[static_cast<size_t>(i)];
    if (require_int(e, "id") != static_cast<int>(i))
      throw CliError("parse", "node ids must be 0..N-1 in order");
    rctree::TreeNode& nd = lt.weighted.nodes[i];
    nd.parent = require_int(e, "parent");
    if (static_cast<int>(i) == lt.weighted.root) {
      if (nd.parent != -1) throw CliError("parse", "root node must have parent -1");
    } else if (nd.parent < 0 || nd.parent >= static_cast<int>(i)) {
      throw CliError("parse", "non-root nodes need a parent with a smaller id");
    }
    nd.point = require_int(e, "point");
    if (nd.point < -1 || nd.point >= n) throw CliError("parse", "node point index out of range");
    if (hst) {
      nd.level = require_int(e, "level");
      nd.edge_length = require_real(e, "edge_length");
      if (nd.edge_length < 0.0) throw CliError("parse", "edge lengths must be nonnegative");
    } else {
      nd.label = require_real(e, "label");
      if (nd.label < 0.0) throw CliError("parse", "labels must be nonnegative");
    }
    if (nd.parent >= 0) lt.weighted.nodes[static_cast<size_t>(nd.parent)].children.push_back(static_cast<int>(i));
    if (nd.point >= 0) {
      if (lt.weighted.leaf_of_point[static_cast<size_t>(nd.point)] != -1)
        throw CliError("parse", "two nodes claim point " + std::to_string(nd.point));
      lt.weighted.leaf_of_point[static_cast<size_t>(nd.point)] = static_cast<int>(i);
    }
  }
  for (int p = 0; p < n; ++p)
    if (lt.weighted.leaf_of_point[static_cast<size_t>(p)] < 0)
      throw CliError("parse", "no leaf for point " + std::to_string(p));
  return lt;
}

void warn_duplicates(const rctree::PointSet& ps) {
  std::vector<int> order(ps.points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ps.points[static_cast<size_t>(a)] < ps.points[static_cast<size_t>(b)]; });
  for (size_t i = 1; i < order.size(); ++i) {
    const int a = order[i - 1], b = order[i];
    if (ps.points[static_cast<size_t>(a)] == ps.points[static_cast<size_t>(b)]) {
      std::cerr << "warning: duplicate points (e.g. " << std::min(a, b) << " and "
                << std::max(a, b) << "); duplicates are chained with zero-length edges\n";
      return;
    }
  }
}

bool embed_ok(const rctree::StretchReport& rep) {
  return rep.dominance_ok && rep.stretch_ok && rep.cut_bound_ok;
}

bool euclid_ok(const rctree::EuclidReport& rep) {
  return rep.dominance_ok && rep.stretch_ok && rep.path_ok && rep.cut_bound_ok;
}

std::string kind_prefix(const std::string& message) {
  const auto pos = message.find_first_of(":(");
  if (pos == std::string::npos || pos == 0) return "internal";
  return message.substr(0, pos);
}

}  // namespace

int cmd_embed(const Options& opts) {
  const rctree::Metric m = load_metric_source(opts.input, opts.seed);
  rctree::WeightedTree tree;
  std::vector<rctree::CutRecord> cuts;
  int delta = 0;
  if (opts.mode == "hst") {
    rctree::Decomposition dec = rctree::hierarchical_decompose(m);
    delta = dec.delta;
    tree = rctree::build_hst(dec);
    cuts = std::move(dec.cuts);
  } else {
    rctree::UltrametricResult res = rctree::recursive_cut_tree(m);
    tree = std::move(res.tree);
    cuts = std::move(res.cuts);
  }
  const rctree::StretchReport rep = rctree::verify(m, tree, cuts);
  const json doc{{"tree", embed_tree_json(m, tree, delta)},
                 {"report", report_json(rep, 1.0 / m.scale)}};
  rcio::write_output(opts.out, rcio::dump_canonical(doc));
  return embed_ok(rep) ? 0 : 2;
}

int cmd_spantree(const Options& opts) {
  const rctree::PointSet ps = load_point_source(opts.input, opts.seed);
  warn_duplicates(ps);
  const rctree::EuclidBuild build = rctree::build_spanning_tree(ps, opts.alpha);
  const rctree::EuclidReport rep = rctree::verify_euclidean(ps, build.tree, opts.alpha, build.cuts);
  const json doc{{"tree", spantree_json(ps, build.tree, opts.alpha)},
                 {"report", euclid_report_json(rep)}};
  rcio::write_output(opts.out, rcio::dump_canonical(doc));
  return euclid_ok(rep) ? 0 : 2;
}

int cmd_verify(const Options& opts) {
  LoadedTree lt = parse_tree_document(opts.tree_path);

  if (lt.mode == "spantree") {
    const rctree::PointSet ps = load_point_source(opts.source_path, opts.seed);
    // The cut log is not serialized; rebuilding is deterministic, so the
    // fresh build's cuts are the ones that produced a well-formed file.
    const rctree::EuclidBuild rebuilt = rctree::build_spanning_tree(ps, lt.alpha);
    const rctree::EuclidReport rep =
        rctree::verify_euclidean(ps, lt.spanning, lt.alpha, rebuilt.cuts);
    rcio::write_output(opts.out, rcio::dump_canonical(json{{"report", euclid_report_json(rep)}}));
    return euclid_ok(rep) ? 0 : 2;
  }

  const rctree::Metric m = load_metric_source(opts.source_path, opts.seed);
  if (static_cast<int>(lt.weighted.leaf_of_point.size()) != m.n)
    throw CliError("mismatch", "tree covers " + std::to_string(lt.weighted.leaf_of_point.size()) +
                                   " points but the source has " + std::to_string(m.n));
  for (rctree::TreeNode& nd : lt.weighted.nodes) {
    nd.edge_length *= m.scale;
    nd.label *= m.scale;
  }
  std::vector<rctree::CutRecord> cuts;
  if (lt.mode == "hst")
    cuts = rctree::hierarchical_decompose(m).cuts;
  else
    cuts = rctree::recursive_cut_tree(m).cuts;
  const rctree::StretchReport rep = rctree::verify(m, lt.weighted, cuts);
  rcio::write_output(opts.out,
                     rcio::dump_canonical(json{{"report", report_json(rep, 1.0 / m.scale)}}));
  return embed_ok(rep) ? 0 : 2;
}

int cmd_lowerbound(const Options& opts) {
  if (opts.n < 2) throw CliError("parse", "lowerbound needs n >= 2");
  if (opts.n > 4096) throw CliError("parse", "lowerbound is capped at n = 4096 (cubic DP)");
  const rctree::PathCutCertificate cert = rctree::path_cut_certificate(opts.n);
  const std::vector<double> path = rctree::path_instance(opts.n);
  const rctree::OptimalCost dp = rctree::line_dp_optimal(path);
  const json doc{{"n", opts.n},
                 {"cut_ratio", cert.ratio},
                 {"dp_ratio", dp.ratio},
                 {"all_cuts_equal", cert.all_cuts_equal ? "PASS" : "FAIL"},
                 {"max_deviation", cert.max_deviation}};
  rcio::write_output(opts.out, rcio::dump_canonical(doc));
  return cert.all_cuts_equal ? 0 : 2;
}

int cmd_cutscan(const Options& opts) {
  std::vector<double> values = rcio::parse_value_list(rcio::read_file(opts.input));
  std::sort(values.begin(), values.end());
  const rctree::CutScan s = rctree::scan(values);
  json doc{{"n", static_cast<int>(values.size())},
           {"delta", s.delta},
           {"ls", s.ls},
           {"rs", s.rs},
           {"rc", s.rc}};
  rctree::CutResult cut{};
  if (!opts.interval.empty()) {
    const auto parts = split_on(opts.interval, ':');
    if (parts.size() != 2) throw CliError("parse", "--interval wants lo:hi");
    char* e1 = nullptr;
    char* e2 = nullptr;
    const double lo = std::strtod(parts[0].c_str(), &e1);
    const double hi = std::strtod(parts[1].c_str(), &e2);
    if (e1 != parts[0].c_str() + parts[0].size() || e2 != parts[1].c_str() + parts[1].size() ||
        parts[0].empty() || parts[1].empty())
      throw CliError("parse", "--interval wants lo:hi");
    doc["interval"] = json{{"lo", lo}, {"hi", hi}};
    cut = rctree::constrained_cut(values, lo, hi);
  } else {
    cut = rctree::optimal_cut(values);
  }
  doc["cut"] = json{{"k", cut.k}, {"ratio", cut.ratio}, {"position", cut.position}};
  rcio::write_output(opts.out, rcio::dump_canonical(doc));
  return 0;
}

int dispatch(const std::string& command, const Options& opts) {
  try {
    if (command == "embed") return cmd_embed(opts);
    if (command == "spantree") return cmd_spantree(opts);
    if (command == "verify") return cmd_verify(opts);
    if (command == "lowerbound") return cmd_lowerbound(opts);
    if (command == "cutscan") return cmd_cutscan(opts);
    rcio::print_error("internal", "unknown command '" + command + "'");
    return 1;
  } catch (const CliError& e) {
    rcio::print_error(e.kind, e.what());
    return 1;
  } catch (const rctree::MetricError& e) {
    rcio::print_error(rctree::MetricError::kind_name(e.kind()), e.what());
    return 1;
  } catch (const json::exception& e) {
    rcio::print_error("parse", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    const std::string kind = kind_prefix(e.what());
    rcio::print_error(kind, e.what());
    return kind == "NotSpanning" ? 2 : 1;
  } catch (const std::out_of_range& e) {
    rcio::print_error(kind_prefix(e.what()), e.what());
    return 1;
  } catch (const std::exception& e) {
    rcio::print_error("internal", e.what());
    return 1;
  }
}

}  // namespace rccli
