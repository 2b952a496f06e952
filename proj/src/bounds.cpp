#include "metra/bounds.hpp"

#include <cmath>
#include <set>

#include "metra/errors.hpp"
#include "metra/point_set.hpp"

namespace metra {

namespace {

double roundness_constant(double p) { return p <= 2.0 ? 2.0 : std::pow(2.0, p - 1.0); }

double pow_abs(double v, double p) { return std::pow(std::abs(v), p); }

}  // namespace

RoundnessReport roundness_slack(const std::vector<std::vector<double>>& xs,
                                const std::vector<std::vector<double>>& ys, double p) {
    if (xs.size() != ys.size() || xs.empty()) fail("SizeMismatch", "need |xs| = |ys| >= 1");
    if (!(p >= 1.0) || !std::isfinite(p)) fail("InvalidExponent", "p must be finite and >= 1");
    const int n = static_cast<int>(xs.size());
    RoundnessReport r;
    r.constant = roundness_constant(p);
    double within = 0, cross = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            within += std::pow(lp_distance(xs[i], xs[j], p), p);
            within += std::pow(lp_distance(ys[i], ys[j], p), p);
            cross += std::pow(lp_distance(xs[i], ys[j], p), p);
        }
    r.lhs = within;
    r.rhs = r.constant * cross;
    r.slack = r.rhs - r.lhs;
    return r;
}

double matrix_rowcol_slack(const std::vector<std::vector<double>>& a, double p) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) fail("NotSquare", "matrix is not square");
    if (!(p >= 2.0) || !std::isfinite(p)) fail("InvalidExponent", "p must be finite and >= 2");
    std::vector<double> r(n, 0.0), c(n, 0.0);
    double sum_pow = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r[i] += a[i][j];
            c[j] += a[i][j];
            sum_pow += pow_abs(a[i][j], p);
        }
    double lhs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lhs += pow_abs(r[i] - r[j], p) + pow_abs(c[i] - c[j], p);
    const double rhs = std::pow(2.0 * n, p) / 2.0 * sum_pow;
    return rhs - lhs;
}

double matrix_identity_residual(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) fail("NotSquare", "matrix is not square");
    std::vector<double> r(n, 0.0), c(n, 0.0);
    double lhs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r[i] += a[i][j];
            c[j] += a[i][j];
            lhs += a[i][j] * a[i][j];
        }
    lhs *= 2.0 * n * n;
    double rhs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rhs += (r[i] - r[j]) * (r[i] - r[j]) + (c[i] - c[j]) * (c[i] - c[j]);
            const double t = n * a[i][j] - r[i] - c[j];
            rhs += 2.0 * t * t;
        }
    return std::abs(lhs - rhs);
}

double bipartite_lower_bound(const MetricSpace& m, const std::vector<int>& side_a,
                             const std::vector<int>& side_b, double p) {
    if (side_a.size() != side_b.size() || side_a.empty())
        fail("SizeMismatch", "sides must have equal size >= 1");
    if (!(p >= 1.0) || !std::isfinite(p)) fail("InvalidExponent", "p must be finite and >= 1");
    std::set<int> seen;
    for (int v : side_a) seen.insert(v);
    for (int v : side_b)
        if (!seen.insert(v).second) fail("Overlap", "sides overlap at index " + std::to_string(v));
    for (int v : seen)
        if (v < 0 || v >= m.size()) fail("IndexOutOfRange", "index " + std::to_string(v));

    const int n = static_cast<int>(side_a.size());
    double within = 0, cross = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            within += pow_abs(m(side_a[i], side_a[j]), p);
            within += pow_abs(m(side_b[i], side_b[j]), p);
            cross += pow_abs(m(side_a[i], side_b[j]), p);
        }
    if (within == 0.0) return 1.0;
    const double ratio = within / (roundness_constant(p) * cross);
    return std::max(1.0, std::pow(ratio, 1.0 / p));
}

std::pair<double, double> knn_cp_bounds(int n, double p) {
    if (n < 2) fail("InvalidSize", "need n >= 2");
    if (!(p >= 1.0) || !std::isfinite(p)) fail("InvalidExponent", "p must be finite and >= 1");
    const double frac = static_cast<double>(n - 1) / n;
    if (p <= 2.0) return {2.0 * std::pow(frac, 1.0 / p), 2.0 * std::sqrt(frac)};
    const double base = std::pow(2.0, 2.0 / p);
    return {base * std::pow(frac, 1.0 / p), base * std::pow(1.0 - 1.0 / (2.0 * n), 1.0 / p)};
}

}  // namespace metra
