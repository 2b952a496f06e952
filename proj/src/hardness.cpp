#include "metra/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metra {

namespace {

// Certificate bound for attaching a new point after `attach` with step s:
// 2 d(j,attach) [ inv((s/2)/min(d(i,attach), 1-s/2))
//              + inv((s/2)/min(d(j,attach), 1-s/2)) ]  for the pair i < j.
double attach_quantity(const std::vector<std::vector<double>>& d, int attach, int i, int j,
                       double s, const ConvexityModulus& delta) {
    const double half = s / 2.0;
    const double dn = 1.0 - half;
    const double ti = half / std::min(d[i][attach], dn);
    const double tj = half / std::min(d[j][attach], dn);
    return 2.0 * d[j][attach] * (delta.inverse(ti) + delta.inverse(tj));
}

}  // namespace

UCConstruction build_uc_hard_metric(int n, const ConvexityModulus& delta) {
    if (n < 3) fail("InvalidSize", "need n >= 3");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) d[i][j] = 2.0;  // equilateral base, side 2

    UCConstruction c;
    c.modulus = delta;
    c.etas = {1.0};
    double eta = 1.0;
    for (int size = 3; size < n; ++size) {
        const int attach = size - 1;
        double min_d = d[0][attach];
        for (int i = 1; i < attach; ++i) min_d = std::min(min_d, d[i][attach]);
        double s = std::min(1.0, 2.0 * min_d) / 2.0;
        while (true) {
            bool ok = true;
            for (int i = 0; i < attach && ok; ++i)
                for (int j = i + 1; j < attach; ++j)
                    if (!(attach_quantity(d, attach, i, j, s, delta) <= eta / 2.0)) {
                        ok = false;
                        break;
                    }
            if (ok) break;
            s /= 2.0;
            if (s < 1e-300)
                fail("SearchFailure", "halving search exhausted; modulus does not conform");
        }
        c.esses.push_back(s);
        const int np = size;  // index of the new point
        d[attach][np] = d[np][attach] = 1.0 - s / 2.0;
        for (int i = 0; i < attach; ++i) d[i][np] = d[np][i] = d[i][attach] + 1.0 - s;
        eta /= 2.0;
        c.etas.push_back(eta);
    }
    c.metric = MetricSpace(std::move(d), "uc-hard(" + std::to_string(n) + ")");
    return c;
}

ConditionBMargin condition_b_margin(const UCConstruction& c, int stage, int i, int j, int k) {
    const int n = c.metric.size();
    if (stage < 0 || stage >= n) fail("IndexError", "stage out of range");
    if (stage < 3) return {true, 0.0};
    if (!(0 <= i && i < j && j < k && k < stage))
        fail("IndexError", "need 0 <= i < j < k < stage");
    const auto& m = c.metric;
    const int l = stage;
    const double eta = c.eta_at(stage + 1);
    const auto& delta = c.modulus;
    auto arg = [&](int a, int b) {
        // triangle defect of (a, b, l) against the middle point b
        return (m(a, b) + m(b, l) - m(a, l)) / std::min(m(a, b), m(b, l));
    };
    const double q = 2.0 * m(j, k) * (delta.inverse(arg(i, k)) + delta.inverse(arg(j, k)));
    return {false, m(i, j) + m(j, k) - m(i, k) - eta - q};
}

ConditionBMargin condition_b_stage_margin(const UCConstruction& c, int stage) {
    if (stage < 3) return {true, 0.0};
    ConditionBMargin best{false, std::numeric_limits<double>::infinity()};
    for (int i = 0; i < stage; ++i)
        for (int j = i + 1; j < stage; ++j)
            for (int k = j + 1; k < stage; ++k)
                best.margin = std::min(best.margin, condition_b_margin(c, stage, i, j, k).margin);
    return best;
}

double uc_quadruple_gap(const UCConstruction& c, int i, int j, int k, int l) {
    const int n = c.metric.size();
    if (!(0 <= i && i < j && j < k && k < l && l < n))
        fail("IndexError", "need 0 <= i < j < k < l < n");
    const auto& m = c.metric;
    // role order (x1, x2, x3, x4) = (i, j, k, l)
    return convexity_lemma_gap(m(i, j), m(i, k), m(i, l), m(j, k), m(j, l), m(k, l), c.modulus);
}

L2HardConstruction build_l2_hard_metric(int n) {
    if (n < 4) fail("InvalidSize", "need n >= 4");
    L2HardConstruction out;
    out.a.assign(n + 1, Rational(0));
    out.a[1] = 1;
    const Rational growth = 2 * (n + 1);
    for (int i = 1; i < n; ++i) out.a[i + 1] = growth * out.a[i];
    out.eps = Rational(1) / (4 * out.a[n]);

    for (out.shrink_rounds = 0;; ++out.shrink_rounds) {
        if (out.shrink_rounds > 64)
            fail("ShrinkLimitExceeded", "eps shrank 64 times without certification");
        std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d[i][j] = std::abs(i - j) - out.eps * out.a[std::abs(i - j)];
        RationalMetricSpace metric(std::move(d), "l2-hard(" + std::to_string(n) + ")");
        if (verify_no_isometric_quadruple(metric).all_clear) {
            out.metric = std::move(metric);
            return out;
        }
        out.eps /= growth;
    }
}

namespace {

template <class Scalar>
QuadrupleScan scan_quadruples(const BasicMetricSpace<Scalar>& m) {
    const int n = m.size();
    if (n < 4) fail("InvalidSize", "need at least 4 points");
    QuadrupleScan r;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    ++r.checked;
                    if (is_l2_isometric(restrict(m, {a, b, c, e})))
                        r.embeddable.push_back({a, b, c, e});
                }
    r.all_clear = r.embeddable.empty();
    return r;
}

}  // namespace

QuadrupleScan verify_no_isometric_quadruple(const MetricSpace& m) { return scan_quadruples(m); }

QuadrupleScan verify_no_isometric_quadruple(const RationalMetricSpace& m) {
    return scan_quadruples(m);
}

}  // namespace metra
