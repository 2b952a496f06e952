#include "metra/embeddings.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "metra/errors.hpp"

namespace metra {

HadamardSystem hadamard_system(int n) {
    if (n < 1) fail("InvalidSize", "need n >= 1");
    int m = 1;
    while (m < n) m *= 2;
    // Sylvester entries: H[i][j] = (-1)^{popcount(i & j)}; column 0 is all
    // ones, moved to the last position so the m-th coordinate is +1.
    HadamardSystem sys;
    sys.m = m;
    sys.rows.assign(n, std::vector<int>(m, 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const int sign = __builtin_popcount(static_cast<unsigned>(i & j)) % 2 ? -1 : 1;
            const int col = (j == 0) ? m - 1 : j - 1;
            sys.rows[i][col] = sign;
        }
    }
    return sys;
}

PointSet embed_knn_l2(int n) {
    if (n < 2) fail("InvalidSize", "embedding degenerates for n < 2");
    PointSet ps;
    ps.p = 2.0;
    const double s = std::sqrt(2.0);
    ps.points.assign(2 * n, std::vector<double>(2 * n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ps.points[i][j] = s * ((i == j ? 1.0 : 0.0) - 1.0 / n);
            ps.points[n + i][n + j] = s * ((i == j ? 1.0 : 0.0) - 1.0 / n);
        }
    }
    return ps;
}

namespace {

void require_lp_args(int n, double p) {
    if (n < 2) fail("InvalidSize", "need n >= 2");
    if (!(p > 2.0) || !std::isfinite(p)) fail("InvalidExponent", "need finite p > 2");
}

}  // namespace

PointSet embed_knn_lp_basic(int n, double p) {
    require_lp_args(n, p);
    const auto sys = hadamard_system(n);
    const int m = sys.m;
    const double scale = 1.0 / std::pow(m / 2.0, 1.0 / p);  // same-side pairs -> distance 2
    PointSet ps;
    ps.p = p;
    ps.points.assign(2 * n, std::vector<double>(2 * m, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            ps.points[i][j] = scale * sys.rows[i][j];
            ps.points[n + i][m + j] = scale * sys.rows[i][j];
        }
    return ps;
}

PointSet embed_knn_lp(int n, double p) {
    require_lp_args(n, p);
    const auto sys = hadamard_system(n);
    const int m = sys.m;
    const double scale = 1.0 / std::pow(m / 2.0, 1.0 / p);
    PointSet ps;
    ps.p = p;
    ps.points.assign(2 * n, std::vector<double>(2 * m - 1, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) ps.points[i][j] = scale * sys.rows[i][j];
        // v_i: m-1 zeros, the shared +1, then the first m-1 coordinates of z_i.
        ps.points[n + i][m - 1] = scale;
        for (int j = 0; j + 1 < m; ++j) ps.points[n + i][m + j] = scale * sys.rows[i][j];
    }
    return ps;
}

SymmetricEigen symmetric_eigen(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXd mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(i, j) = a[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    SymmetricEigen out;
    out.lambda.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    out.q.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.q[i][j] = solver.eigenvectors()(i, j);
    return out;
}

namespace {

template <class Scalar>
std::vector<std::vector<Scalar>> schoenberg_matrix(const BasicMetricSpace<Scalar>& m, int base) {
    const int n = m.size();
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
        if (i != base) pts.push_back(i);
    std::vector<std::vector<Scalar>> b(pts.size(), std::vector<Scalar>(pts.size(), Scalar(0)));
    for (size_t r = 0; r < pts.size(); ++r)
        for (size_t c = 0; c < pts.size(); ++c) {
            const Scalar dbi = m(base, pts[r]);
            const Scalar dbj = m(base, pts[c]);
            const Scalar dij = m(pts[r], pts[c]);
            b[r][c] = (dbi * dbi + dbj * dbj - dij * dij) / Scalar(2);
        }
    return b;
}

// Exact determinant by Gaussian elimination over the rationals.
Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return sign < 0 ? Rational(-det) : det;
}

void check_base(int n, int base) {
    if (n < 2) fail("InvalidSize", "need at least 2 points");
    if (base < 0 || base >= n) fail("InvalidBase", "base index out of range");
}

}  // namespace

SchoenbergCertificate schoenberg_test(const MetricSpace& m, int base) {
    check_base(m.size(), base);
    SchoenbergCertificate cert;
    cert.base = base;
    cert.rational = false;
    cert.matrix_real = schoenberg_matrix(m, base);
    const auto eig = symmetric_eigen(cert.matrix_real);
    double trace = 0;
    for (size_t i = 0; i < cert.matrix_real.size(); ++i) trace += cert.matrix_real[i][i];
    cert.min_eigenvalue = eig.lambda.empty() ? 0.0 : eig.lambda.front();
    cert.psd = cert.min_eigenvalue >= -1e-9 * trace;
    return cert;
}

SchoenbergCertificate schoenberg_test(const RationalMetricSpace& m, int base) {
    check_base(m.size(), base);
    if (m.size() - 1 > 8)
        fail("SizeTooLarge", "rational-kind minor enumeration capped at 8x8");
    SchoenbergCertificate cert;
    cert.base = base;
    cert.rational = true;
    cert.matrix_rational = schoenberg_matrix(m, base);
    const int k = static_cast<int>(cert.matrix_rational.size());
    cert.psd = true;
    // Semidefiniteness needs every principal minor, not only the leading ones.
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
        for (size_t r = 0; r < idx.size(); ++r)
            for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = cert.matrix_rational[idx[r]][idx[c]];
        const Rational det = rational_determinant(std::move(sub));
        if (det < 0) {
            cert.psd = false;
            cert.witness_minor = idx;
            cert.witness_value = det;
            return cert;
        }
    }
    return cert;
}

bool is_l2_isometric(const MetricSpace& m) {
    if (m.size() <= 2) return true;
    return schoenberg_test(m, 0).psd;
}

bool is_l2_isometric(const RationalMetricSpace& m) {
    if (m.size() <= 2) return true;
    return schoenberg_test(m, 0).psd;
}

PointSet embed_012_l2(const MetricSpace& m) {
    const int n = m.size();
    if (n < 2) fail("InvalidSize", "need at least 2 points");
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dij = m(i, j);
            if (std::abs(dij - 1.0) <= 1e-12)
                a[i][j] = 2.0 / n;
            else if (std::abs(dij - 2.0) <= 1e-12)
                a[i][j] = 0.0;
            else
                fail("NotZeroOneTwo", "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") is neither 1 nor 2");
        }
    }
    const auto eig = symmetric_eigen(a);
    // A^{1/2} = Q diag(sqrt(lambda)) Q^T, tiny negative eigenvalues clamped.
    Eigen::MatrixXd q(n, n), root(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q(i, j) = eig.q[i][j];
    Eigen::VectorXd sqrt_l(n);
    for (int i = 0; i < n; ++i) sqrt_l(i) = std::sqrt(std::max(eig.lambda[i], 0.0));
    root = q * sqrt_l.asDiagonal() * q.transpose();

    PointSet ps;
    ps.p = 2.0;
    ps.points.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) ps.points[i][r] = root(r, i);
    return ps;
}

}  // namespace metra
