#include "metra/convexity.hpp"

#include <algorithm>
#include <cmath>

#include "metra/point_set.hpp"

namespace metra {

namespace {

constexpr double kArgTol = 1e-9;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

ConvexityModulus ConvexityModulus::l2() {
    auto eval = [](double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); };
    auto inv = [](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 2.0;
        return 2.0 * std::sqrt(2.0 * t - t * t);
    };
    return ConvexityModulus("l2", eval, inv);
}

ConvexityModulus ConvexityModulus::lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) fail("InvalidExponent", "need finite p > 1");
    if (p >= 2.0) {
        auto eval = [p](double eps) { return 1.0 - std::pow(1.0 - std::pow(eps / 2.0, p), 1.0 / p); };
        auto inv = [p](double t) {
            if (t <= 0.0) return 0.0;
            if (t >= 1.0) return 2.0;
            return 2.0 * std::pow(1.0 - std::pow(1.0 - t, p), 1.0 / p);
        };
        return ConvexityModulus("lp(" + std::to_string(p) + ")", eval, inv);
    }
    // 1 < p < 2: lower estimate (p-1) eps^2 / 8; sound for certificates.
    const double cap = (p - 1.0) / 2.0;  // value at eps = 2
    auto eval = [p](double eps) { return (p - 1.0) * eps * eps / 8.0; };
    auto inv = [p, cap](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= cap) return 2.0;
        return std::sqrt(8.0 * t / (p - 1.0));
    };
    return ConvexityModulus("lp(" + std::to_string(p) + ")", eval, inv);
}

ConvexityModulus ConvexityModulus::custom(std::string name,
                                          std::function<double(double)> evaluate) {
    auto inv = [evaluate](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= evaluate(2.0)) return 2.0;
        double lo = 0.0, hi = 2.0;
        while (hi - lo > 1e-12) {
            const double mid = (lo + hi) / 2.0;
            (evaluate(mid) < t ? lo : hi) = mid;
        }
        return (lo + hi) / 2.0;
    };
    return ConvexityModulus(std::move(name), std::move(evaluate), std::move(inv));
}

double ConvexityModulus::evaluate(double eps) const {
    if (!(eps > 0.0) || eps > 2.0 + kArgTol)
        fail("InverseArgumentOutOfRange", "evaluate argument must lie in (0,2]");
    return eval_(std::min(eps, 2.0));
}

double ConvexityModulus::inverse(double t) const {
    if (t < -kArgTol || t > 2.0 + kArgTol)
        fail("InverseArgumentOutOfRange", "inverse argument must lie in [0,2]");
    return inv_(std::clamp(t, 0.0, 2.0));
}

namespace {

// Normalized triangle defect (a + b - c) / min(a, b); lies in [0,2] for any
// metric triple, up to rounding.
double defect_argument(double a, double b, double c) {
    const double t = (a + b - c) / std::min(a, b);
    if (t < -kArgTol || t > 2.0 + kArgTol)
        fail("InverseArgumentOutOfRange", "triangle defect outside [0,2]");
    return std::clamp(t, 0.0, 2.0);
}

}  // namespace

double uc_slack(const std::vector<double>& x, const std::vector<double>& y,
                const std::vector<double>& z, double p, const ConvexityModulus& delta) {
    const double dxy = lp_distance(x, y, p);
    const double dyz = lp_distance(y, z, p);
    const double dxz = lp_distance(x, z, p);
    if (dxy == 0.0 || dyz == 0.0 || dxz == 0.0)
        fail("CoincidentPoints", "x, y, z must be pairwise distinct");

    const double sum = dxy + dyz;
    std::vector<double> comb(x.size());
    for (size_t k = 0; k < x.size(); ++k) comb[k] = (dyz * x[k] + dxy * z[k]) / sum;
    const double lhs = lp_distance(y, comb, p);
    const double rhs = dxy * dyz / sum * delta.inverse(defect_argument(dxy, dyz, dxz));
    return rhs - lhs;
}

double convexity_lemma_gap(double d12, double d13, double d14, double d23, double d24,
                           double d34, const ConvexityModulus& delta) {
    const double ds[4][4] = {{0, d12, d13, d14}, {d12, 0, d23, d24}, {d13, d23, 0, d34},
                             {d14, d24, d34, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i != j && !(ds[i][j] > 0)) fail("TriangleViolation", "distances must be positive");
            for (int k = 0; k < 4; ++k) {
                if (i == j || j == k || i == k) continue;
                if (ds[i][k] > ds[i][j] + ds[j][k] + kArgTol * std::max(1.0, ds[i][k]))
                    fail("TriangleViolation", "six values are not a 4-point metric");
            }
        }
    // The inequality's derivation reduces by symmetry to d(x1,x3) >= d(x2,x3);
    // swap the roles of x1 and x2 when the inputs arrive the other way round.
    // The two inverse terms are unaffected by the swap.
    if (d13 < d23) {
        std::swap(d13, d23);
        std::swap(d14, d24);
    }
    const double lhs = clamp01((d12 + d23 - d13) / (2.0 * d23));
    const double rhs = delta.inverse(defect_argument(d13, d34, d14)) +
                       delta.inverse(defect_argument(d23, d34, d24));
    return rhs - lhs;
}

}  // namespace metra
