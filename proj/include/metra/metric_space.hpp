#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metra/errors.hpp"
#include "metra/graph.hpp"
#include "metra/rational.hpp"

namespace metra {

/// First violated metric axiom with the offending indices.
struct MetricViolation {
    std::string kind;  // NonSymmetric | NonzeroDiagonal | NonPositiveOffDiagonal | TriangleViolation
    int i = -1, j = -1, k = -1;
    std::string describe() const;
};

/// Finite metric space: a point count and a symmetric distance matrix.
/// Scalar is double (real kind) or Rational (exact kind), fixed per instance.
/// Immutable after construction.
template <class Scalar>
class BasicMetricSpace {
public:
    BasicMetricSpace() = default;
    /// Unchecked constructor; route untrusted matrices through validate_metric.
    explicit BasicMetricSpace(std::vector<std::vector<Scalar>> d, std::string label = {})
        : d_(std::move(d)), label_(std::move(label)) {}

    int size() const { return static_cast<int>(d_.size()); }
    const Scalar& operator()(int i, int j) const { return d_[i][j]; }
    const std::vector<std::vector<Scalar>>& matrix() const { return d_; }
    const std::string& label() const { return label_; }

    Scalar max_entry() const {
        Scalar m{};
        for (const auto& row : d_)
            for (const auto& v : row)
                if (v > m) m = v;
        return m;
    }

private:
    std::vector<std::vector<Scalar>> d_;
    std::string label_;
};

using MetricSpace = BasicMetricSpace<double>;
using RationalMetricSpace = BasicMetricSpace<Rational>;

/// Runtime-kind metric for file I/O and the CLI.
using AnyMetric = std::variant<MetricSpace, RationalMetricSpace>;

template <class Scalar>
struct MetricValidation {
    std::optional<BasicMetricSpace<Scalar>> space;
    std::optional<MetricViolation> violation;
    bool ok() const { return space.has_value(); }
};

/// Checks symmetry, zero diagonal, positive off-diagonal entries and the
/// triangle inequality, in that order, returning either the metric space or
/// the first violation. The real kind tolerates triangle defects up to
/// 1e-12 * max entry; the rational kind is exact.
template <class Scalar>
MetricValidation<Scalar> validate_metric(const std::vector<std::vector<Scalar>>& d,
                                         std::string label = {});

/// Throwing convenience around validate_metric.
template <class Scalar>
BasicMetricSpace<Scalar> make_metric(std::vector<std::vector<Scalar>> d, std::string label = {});

/// Shortest-path metric of K_{n,n}: 2n points, u-block 0..n-1 then v-block
/// n..2n-1; same-side distance 2, cross distance 1.
MetricSpace knn_metric(int n);

/// {0,1,2} metric of a graph: d = 1 on edges, 2 on non-adjacent pairs.
MetricSpace metric_from_graph_012(const Graph& g);

/// Inverse of metric_from_graph_012. Off-diagonal entries must be exactly
/// 1 or 2 (real kind: within 1e-12).
Graph graph_from_012_metric(const MetricSpace& m);
Graph graph_from_012_metric(const RationalMetricSpace& m);

/// Submetric on the given distinct, in-range indices; preserves scalar kind.
template <class Scalar>
BasicMetricSpace<Scalar> restrict(const BasicMetricSpace<Scalar>& m, const std::vector<int>& subset);

/// Widens an exact metric to the real kind.
MetricSpace to_real(const RationalMetricSpace& m);

/// Exact lift of a real metric: every double is a dyadic rational.
RationalMetricSpace to_rational(const MetricSpace& m);

extern template class BasicMetricSpace<double>;
extern template class BasicMetricSpace<Rational>;

}  // namespace metra
