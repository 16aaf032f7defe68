#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rctree/cut.hpp"
#include "rctree/euclid.hpp"
#include "rctree/hst.hpp"
#include "rctree/metric.hpp"
#include "rctree/oracles.hpp"

namespace py = pybind11;
using namespace rctree;

namespace {

PointSet point_set(const std::vector<std::vector<double>>& points) {
  PointSet ps;
  if (points.empty()) throw std::invalid_argument("need at least one point");
  ps.dim = static_cast<int>(points[0].size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != ps.dim)
      throw std::invalid_argument("points must share one dimension");
    ps.points.push_back(p);
  }
  return ps;
}

py::dict witness_dict(const PairWitness& w, double inv) {
  py::dict d;
  d["u"] = w.u;
  d["v"] = w.v;
  d["d"] = w.d * inv;
  d["d_tree"] = w.d_tree * inv;
  return d;
}

py::dict report_dict(const StretchReport& rep, double inv) {
  py::dict d;
  d["source_cost"] = rep.source_cost * inv;
  d["tree_cost"] = rep.tree_cost * inv;
  d["stretch"] = rep.stretch;
  d["stretch_bound"] = rep.stretch_bound;
  d["stretch_ok"] = rep.stretch_ok;
  d["max_cut_ratio"] = rep.max_cut_ratio;
  d["cut_ratio_bound"] = rep.cut_ratio_bound;
  d["cut_bound_ok"] = rep.cut_bound_ok;
  d["dominance_ok"] = rep.dominance_ok;
  d["worst_pair"] = witness_dict(rep.worst_pair, inv);
  return d;
}

py::dict embed_metric(const Metric& m, const std::string& mode) {
  WeightedTree tree;
  std::vector<CutRecord> cuts;
  if (mode == "hst") {
    Decomposition dec = hierarchical_decompose(m);
    tree = build_hst(dec);
    cuts = std::move(dec.cuts);
  } else if (mode == "ultra") {
    UltrametricResult res = recursive_cut_tree(m);
    tree = std::move(res.tree);
    cuts = std::move(res.cuts);
  } else {
    throw std::invalid_argument("mode must be 'hst' or 'ultra'");
  }
  const StretchReport rep = verify(m, tree, cuts);
  const double inv = 1.0 / m.scale;
  const bool hst = tree.kind == TreeKind::Hst;
  py::list nodes;
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& nd = tree.nodes[i];
    py::dict e;
    e["id"] = static_cast<int>(i);
    e["parent"] = nd.parent;
    e["point"] = nd.point;
    if (hst) {
      e["level"] = nd.level;
      e["edge_length"] = nd.edge_length * inv;
    } else {
      e["label"] = nd.label * inv;
    }
    nodes.append(e);
  }
  py::dict out;
  out["mode"] = mode;
  out["scale"] = m.scale;
  out["root"] = tree.root;
  out["nodes"] = nodes;
  out["report"] = report_dict(rep, inv);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "dominating tree metrics and low-routing-cost spanning trees";
  m.attr("DELTA0") = kDelta0;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MetricError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Metric>(m, "Metric")
      .def_readonly("n", &Metric::n)
      .def_readonly("scale", &Metric::scale)
      .def("distance", [](const Metric& self, int i, int j) {
        if (i < 0 || j < 0 || i >= self.n || j >= self.n)
          throw std::out_of_range("index out of range");
        return self(i, j);
      });

  m.def("validate_metric", &validate_metric, py::arg("matrix"),
        "validate a distance matrix and rescale its minimum positive distance to 2");
  m.def(
      "metric_from_points",
      [](const std::vector<std::vector<double>>& pts) { return metric_from_points(point_set(pts)); },
      py::arg("points"));

  m.def(
      "scan",
      [](const std::vector<double>& values) {
        const CutScan s = scan(values);
        py::dict d;
        d["ls"] = s.ls;
        d["rs"] = s.rs;
        d["rc"] = s.rc;
        d["delta"] = s.delta;
        return d;
      },
      py::arg("values"));
  m.def(
      "optimal_cut",
      [](const std::vector<double>& values) {
        const CutResult r = optimal_cut(values);
        return py::make_tuple(r.k, r.ratio, r.position);
      },
      py::arg("values"));
  m.def(
      "constrained_cut",
      [](const std::vector<double>& values, double lo, double hi) {
        const CutResult r = constrained_cut(values, lo, hi);
        return py::make_tuple(r.k, r.ratio, r.position);
      },
      py::arg("values"), py::arg("lo"), py::arg("hi"));

  m.def(
      "embed",
      [](const std::vector<std::vector<double>>& matrix, const std::string& mode) {
        return embed_metric(validate_metric(matrix), mode);
      },
      py::arg("matrix"), py::arg("mode") = "hst",
      "build a dominating 2-HST or ultrametric and report its stretch");
  m.def(
      "embed_points",
      [](const std::vector<std::vector<double>>& pts, const std::string& mode) {
        return embed_metric(metric_from_points(point_set(pts)), mode);
      },
      py::arg("points"), py::arg("mode") = "hst");

  m.def(
      "spantree",
      [](const std::vector<std::vector<double>>& pts, double alpha) {
        const PointSet ps = point_set(pts);
        const EuclidBuild build = build_spanning_tree(ps, alpha);
        const EuclidReport rep = verify_euclidean(ps, build.tree, alpha, build.cuts);
        py::list edges;
        for (const TreeEdge& e : build.tree.edges)
          edges.append(py::make_tuple(e.u, e.v, e.length));
        py::dict d;
        d["root"] = build.tree.root;
        d["edges"] = edges;
        d["stretch"] = rep.stretch;
        d["stretch_bound"] = rep.stretch_bound;
        d["stretch_ok"] = rep.stretch_ok;
        d["max_path"] = rep.max_path;
        d["path_bound"] = rep.path_bound;
        d["path_ok"] = rep.path_ok;
        d["dominance_ok"] = rep.dominance_ok;
        d["max_cut_ratio"] = rep.max_cut_ratio;
        return d;
      },
      py::arg("points"), py::arg("alpha") = 0.25,
      "build a low-routing-cost spanning tree for Euclidean points");

  m.def(
      "line_dp_optimal",
      [](const std::vector<double>& values) {
        const OptimalCost c = line_dp_optimal(values);
        return py::make_tuple(c.cost, c.ratio);
      },
      py::arg("values"), "exact optimal ultrametric cost for a 1-D metric");
  m.def("lower_bound_ratio", &lower_bound_ratio, py::arg("n"),
        "certified path-family cut ratio 2(n-1)/n");
}
