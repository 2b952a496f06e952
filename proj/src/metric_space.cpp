#include "metra/metric_space.hpp"

#include <cmath>
#include <set>

namespace metra {

std::string MetricViolation::describe() const {
    std::string s = kind + " at (" + std::to_string(i) + ", " + std::to_string(j);
    if (k >= 0) s += ", " + std::to_string(k);
    return s + ")";
}

namespace {

// Triangle tolerance: exact for rationals, 1e-12 * max entry for doubles.
double triangle_tolerance(const std::vector<std::vector<double>>& d) {
    double m = 0;
    for (const auto& row : d)
        for (double v : row) m = std::max(m, v);
    return 1e-12 * m;
}

Rational triangle_tolerance(const std::vector<std::vector<Rational>>&) { return Rational(0); }

}  // namespace

template <class Scalar>
MetricValidation<Scalar> validate_metric(const std::vector<std::vector<Scalar>>& d,
                                         std::string label) {
    MetricValidation<Scalar> out;
    const int n = static_cast<int>(d.size());
    if (n < 1) {
        out.violation = MetricViolation{"InvalidSize", 0, 0, -1};
        return out;
    }
    for (const auto& row : d)
        if (static_cast<int>(row.size()) != n) {
            out.violation = MetricViolation{"NotSquare", 0, 0, -1};
            return out;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] != d[j][i]) {
                out.violation = MetricViolation{"NonSymmetric", i, j, -1};
                return out;
            }
    for (int i = 0; i < n; ++i)
        if (d[i][i] != Scalar(0)) {
            out.violation = MetricViolation{"NonzeroDiagonal", i, i, -1};
            return out;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(d[i][j] > Scalar(0))) {
                out.violation = MetricViolation{"NonPositiveOffDiagonal", i, j, -1};
                return out;
            }
    const Scalar tol = triangle_tolerance(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (d[i][k] > d[i][j] + d[j][k] + tol) {
                    out.violation = MetricViolation{"TriangleViolation", i, j, k};
                    return out;
                }
            }
    out.space = BasicMetricSpace<Scalar>(d, std::move(label));
    return out;
}

template <class Scalar>
BasicMetricSpace<Scalar> make_metric(std::vector<std::vector<Scalar>> d, std::string label) {
    auto v = validate_metric(d, std::move(label));
    if (!v.ok()) fail(v.violation->kind, v.violation->describe());
    return std::move(*v.space);
}

MetricSpace knn_metric(int n) {
    if (n < 1) fail("InvalidSize", "K_{n,n} needs n >= 1");
    const int m = 2 * n;
    std::vector<std::vector<double>> d(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const bool same_side = (i < n) == (j < n);
            d[i][j] = same_side ? 2.0 : 1.0;
        }
    return MetricSpace(std::move(d), "K_{" + std::to_string(n) + "," + std::to_string(n) + "}");
}

MetricSpace metric_from_graph_012(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) fail("InvalidSize", "need at least 2 vertices");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d[i][j] = g.has_edge(i, j) ? 1.0 : 2.0;
    return MetricSpace(std::move(d));
}

namespace {

template <class Scalar, class IsOne, class IsTwo>
Graph graph_from_012_impl(const BasicMetricSpace<Scalar>& m, IsOne is_one, IsTwo is_two) {
    const int n = m.size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (is_one(m(i, j)))
                edges.emplace_back(i, j);
            else if (!is_two(m(i, j)))
                fail("NotZeroOneTwo", "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") is neither 1 nor 2");
        }
    return Graph(n, std::move(edges));
}

}  // namespace

Graph graph_from_012_metric(const MetricSpace& m) {
    return graph_from_012_impl(
        m, [](double v) { return std::abs(v - 1.0) <= 1e-12; },
        [](double v) { return std::abs(v - 2.0) <= 1e-12; });
}

Graph graph_from_012_metric(const RationalMetricSpace& m) {
    return graph_from_012_impl(
        m, [](const Rational& v) { return v == 1; }, [](const Rational& v) { return v == 2; });
}

template <class Scalar>
BasicMetricSpace<Scalar> restrict(const BasicMetricSpace<Scalar>& m,
                                  const std::vector<int>& subset) {
    if (subset.empty()) fail("InvalidSize", "subset must be nonempty");
    std::set<int> seen;
    for (int v : subset) {
        if (v < 0 || v >= m.size()) fail("IndexOutOfRange", "index " + std::to_string(v));
        if (!seen.insert(v).second) fail("Duplicate", "index " + std::to_string(v) + " repeated");
    }
    const int k = static_cast<int>(subset.size());
    std::vector<std::vector<Scalar>> d(k, std::vector<Scalar>(k, Scalar(0)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) d[a][b] = m(subset[a], subset[b]);
    return BasicMetricSpace<Scalar>(std::move(d), m.label());
}

MetricSpace to_real(const RationalMetricSpace& m) {
    const int n = m.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = m(i, j).get_d();
    return MetricSpace(std::move(d), m.label());
}

RationalMetricSpace to_rational(const MetricSpace& m) {
    const int n = m.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = Rational(m(i, j));
    return RationalMetricSpace(std::move(d), m.label());
}

template class BasicMetricSpace<double>;
template class BasicMetricSpace<Rational>;

template MetricValidation<double> validate_metric(const std::vector<std::vector<double>>&,
                                                  std::string);
template MetricValidation<Rational> validate_metric(const std::vector<std::vector<Rational>>&,
                                                    std::string);
template MetricSpace make_metric(std::vector<std::vector<double>>, std::string);
template RationalMetricSpace make_metric(std::vector<std::vector<Rational>>, std::string);
template MetricSpace restrict(const MetricSpace&, const std::vector<int>&);
template RationalMetricSpace restrict(const RationalMetricSpace&, const std::vector<int>&);

}  // namespace metra
