#pragma once

#include <vector>

#include "metra/metric_space.hpp"

namespace metra {

/// Finite configuration in l_p: equal-length coordinate vectors plus the
/// exponent p in [1, inf). p = inf is not supported.
struct PointSet {
    std::vector<std::vector<double>> points;
    double p = 2.0;

    int size() const { return static_cast<int>(points.size()); }
    int dimension() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
};

/// (sum |x_k - y_k|^p)^(1/p). Throws DimensionMismatch / InvalidExponent.
double lp_distance(const std::vector<double>& x, const std::vector<double>& y, double p);

/// Real-kind metric induced by the point set; points must be distinct.
MetricSpace induced_metric(const PointSet& ps);

PointSet scaled(const PointSet& ps, double factor);

}  // namespace metra
