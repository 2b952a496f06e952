#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metra/bounds.hpp"
#include "metra/convexity.hpp"
#include "metra/distortion.hpp"
#include "metra/embeddings.hpp"
#include "metra/hardness.hpp"
#include "metra/metric_space.hpp"
#include "metra/point_set.hpp"
#include "metra/ramsey.hpp"

namespace py = pybind11;
using namespace metra;

namespace {

using Matrix = std::vector<std::vector<double>>;
using Edges = std::vector<std::pair<int, int>>;

MetricSpace metric_of(const Matrix& d) { return make_metric(d); }

ConvexityModulus modulus_of(const std::string& spec) {
    if (spec == "l2") return ConvexityModulus::l2();
    if (spec.rfind("lp:", 0) == 0) return ConvexityModulus::lp(std::stod(spec.substr(3)));
    fail("UsageError", "modulus must be 'l2' or 'lp:<p>'");
}

PointSet point_set_of(const Matrix& pts, double p) { return PointSet{pts, p}; }

py::dict distortion_dict(const DistortionReport& r) {
    py::dict d;
    d["expansion"] = r.expansion;
    d["contraction"] = r.contraction;
    d["distortion"] = r.distortion;
    d["expansion_pair"] = r.expansion_pair;
    d["contraction_pair"] = r.contraction_pair;
    return d;
}

py::dict witness_dict(const SubsetWitness& w) {
    py::dict d;
    d["size"] = w.size;
    d["witness"] = w.witness;
    return d;
}

}  // namespace

PYBIND11_MODULE(_metra, m) {
    m.doc() = "low-distortion embeddings, roundness bounds and hardness certificates "
              "for finite metric spaces";

    py::register_exception<Error>(m, "MetraError");

    // core
    m.def("validate_metric", [](const Matrix& d) {
        auto v = validate_metric(d);
        py::dict out;
        out["valid"] = v.ok();
        if (v.violation) {
            out["kind"] = v.violation->kind;
            out["indices"] = std::vector<int>{v.violation->i, v.violation->j, v.violation->k};
        }
        return out;
    });
    m.def("lp_distance", &lp_distance);
    m.def("induced_metric",
          [](const Matrix& pts, double p) { return induced_metric(point_set_of(pts, p)).matrix(); });
    m.def("knn_metric", [](int n) { return knn_metric(n).matrix(); });
    m.def("metric_from_graph", [](int n, const Edges& e) {
        return metric_from_graph_012(Graph(n, e)).matrix();
    });
    m.def("graph_from_metric", [](const Matrix& d) {
        const Graph g = graph_from_012_metric(metric_of(d));
        return py::make_tuple(g.vertex_count(), g.edges());
    });
    m.def("restrict_metric", [](const Matrix& d, const std::vector<int>& subset) {
        return restrict(metric_of(d), subset).matrix();
    });
    m.def("extract_geodesic", [](int n, const Edges& e) { return extract_geodesic(Graph(n, e)); });
    m.def("distortion", [](const Matrix& d, const Matrix& pts, double p) {
        return distortion_dict(distortion(metric_of(d), point_set_of(pts, p)));
    });

    // embeddings
    m.def("hadamard_system", [](int n) {
        const auto sys = hadamard_system(n);
        return py::make_tuple(sys.m, sys.rows);
    });
    m.def("embed_knn_l2", [](int n) { return embed_knn_l2(n).points; });
    m.def("embed_knn_lp",
          [](int n, double p, bool basic) {
              return (basic ? embed_knn_lp_basic(n, p) : embed_knn_lp(n, p)).points;
          },
          py::arg("n"), py::arg("p"), py::arg("basic") = false);
    m.def("embed_012_l2", [](const Matrix& d) { return embed_012_l2(metric_of(d)).points; });
    m.def("schoenberg_test", [](const Matrix& d, int base) {
        const auto c = schoenberg_test(metric_of(d), base);
        py::dict out;
        out["base"] = c.base;
        out["psd"] = c.psd;
        out["matrix"] = c.matrix_real;
        out["min_eigenvalue"] = c.min_eigenvalue;
        return out;
    }, py::arg("d"), py::arg("base") = 0);
    m.def("is_l2_isometric", [](const Matrix& d) { return is_l2_isometric(metric_of(d)); });

    // bounds
    m.def("roundness_slack", [](const Matrix& xs, const Matrix& ys, double p) {
        const auto r = roundness_slack(xs, ys, p);
        py::dict out;
        out["lhs"] = r.lhs;
        out["rhs"] = r.rhs;
        out["slack"] = r.slack;
        out["constant"] = r.constant;
        return out;
    });
    m.def("matrix_rowcol_slack", &matrix_rowcol_slack);
    m.def("matrix_identity_residual", &matrix_identity_residual);
    m.def("bipartite_lower_bound",
          [](const Matrix& d, const std::vector<int>& a, const std::vector<int>& b, double p) {
              return bipartite_lower_bound(metric_of(d), a, b, p);
          });
    m.def("knn_cp_bounds", &knn_cp_bounds);

    // convexity / hardness
    m.def("modulus_evaluate",
          [](const std::string& spec, double eps) { return modulus_of(spec).evaluate(eps); });
    m.def("modulus_inverse",
          [](const std::string& spec, double t) { return modulus_of(spec).inverse(t); });
    m.def("uc_slack",
          [](const std::vector<double>& x, const std::vector<double>& y,
             const std::vector<double>& z, double p, const std::string& spec) {
              return uc_slack(x, y, z, p, modulus_of(spec));
          });
    m.def("convexity_lemma_gap",
          [](double d12, double d13, double d14, double d23, double d24, double d34,
             const std::string& spec) {
              return convexity_lemma_gap(d12, d13, d14, d23, d24, d34, modulus_of(spec));
          });
    m.def("build_uc_hard_metric", [](int n, const std::string& spec) {
        const auto c = build_uc_hard_metric(n, modulus_of(spec));
        py::dict out;
        out["d"] = c.metric.matrix();
        out["etas"] = c.etas;
        out["esses"] = c.esses;
        return out;
    });
    m.def("build_l2_hard_metric", [](int n) {
        const auto c = build_l2_hard_metric(n);
        py::dict out;
        std::vector<std::vector<std::string>> exact(n, std::vector<std::string>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) exact[i][j] = rational_to_string(c.metric(i, j));
        out["d"] = exact;
        out["d_float"] = to_real(c.metric).matrix();
        std::vector<std::string> a;
        for (const auto& v : c.a) a.push_back(rational_to_string(v));
        out["a"] = a;
        out["eps"] = rational_to_string(c.eps);
        out["shrink_rounds"] = c.shrink_rounds;
        return out;
    });
    m.def("verify_no_isometric_quadruple", [](const Matrix& d) {
        const auto r = verify_no_isometric_quadruple(metric_of(d));
        py::dict out;
        out["all_clear"] = r.all_clear;
        out["checked"] = r.checked;
        out["embeddable"] = r.embeddable;
        return out;
    });

    // ramsey
    m.def("almost_disjoint_family", [](int s, int k) {
        const auto f = almost_disjoint_family(s, k);
        py::dict out;
        out["ground"] = f.ground;
        out["k"] = f.k;
        out["prime"] = f.prime;
        out["sets"] = f.sets;
        return out;
    });
    m.def("sample_gn_half", [](int n, uint64_t seed) {
        const Graph g = sample_gn_half(n, seed);
        return py::make_tuple(g.vertex_count(), g.edges());
    });
    m.def("contains_induced", [](int gn, const Edges& ge, int hn, const Edges& he) {
        return contains_induced(Graph(gn, ge), Graph(hn, he));
    });
    m.def("miss_probability_bound", &miss_probability_bound);
    m.def("monte_carlo_universality", [](int hn, const Edges& he, int s, int trials, uint64_t seed) {
        return monte_carlo_universality(Graph(hn, he), s, trials, seed);
    });
    m.def("build_universal_metric", [](int n, int k, int s, int attempts, uint64_t seed) {
        const auto o = build_universal_metric(n, k, s, attempts, seed);
        py::dict out;
        out["success"] = o.success;
        out["edges"] = o.graph.edges();
        out["d"] = o.metric.matrix();
        out["mode"] = o.report.exhaustive ? "exhaustive" : "sampled";
        out["checked"] = o.report.checked;
        out["misses"] = o.report.misses;
        out["attempt"] = o.report.attempt;
        return out;
    });
    m.def("find_knn_copy", [](const Matrix& d, int k, const std::vector<int>& subset) {
        return find_knn_copy(metric_of(d), k, subset);
    });
    m.def("iso_ramsey_l2", [](const Matrix& d) { return witness_dict(iso_ramsey_l2(metric_of(d))); });
    m.def("distortion_certificate_bound", [](const Matrix& d, double p, double alpha) {
        return witness_dict(distortion_certificate_bound(metric_of(d), p, alpha));
    });

    m.attr("__version__") = "0.1.0";
}
