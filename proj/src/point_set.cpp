#include "metra/point_set.hpp"

#include <cmath>

#include "metra/errors.hpp"

namespace metra {

double lp_distance(const std::vector<double>& x, const std::vector<double>& y, double p) {
    if (x.size() != y.size()) fail("DimensionMismatch", "vectors of different dimension");
    if (!(p >= 1.0) || !std::isfinite(p)) fail("InvalidExponent", "p must be finite and >= 1");
    double sum = 0;
    for (size_t k = 0; k < x.size(); ++k) sum += std::pow(std::abs(x[k] - y[k]), p);
    return std::pow(sum, 1.0 / p);
}

MetricSpace induced_metric(const PointSet& ps) {
    const int n = ps.size();
    if (n < 1) fail("InvalidSize", "empty point set");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = lp_distance(ps.points[i], ps.points[j], ps.p);
            if (v == 0.0)
                fail("DuplicatePoints",
                     "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            d[i][j] = d[j][i] = v;
        }
    return MetricSpace(std::move(d));
}

PointSet scaled(const PointSet& ps, double factor) {
    PointSet out = ps;
    for (auto& pt : out.points)
        for (double& c : pt) c *= factor;
    return out;
}

}  // namespace metra
