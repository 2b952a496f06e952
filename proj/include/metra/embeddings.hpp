#pragma once

#include <string>
#include <vector>

#include "metra/metric_space.hpp"
#include "metra/point_set.hpp"

namespace metra {

/// The first n rows of a column-permuted Sylvester Hadamard matrix of order
/// m (smallest power of two >= n): mutually orthogonal +-1 vectors whose
/// last coordinate is +1.
struct HadamardSystem {
    int m = 0;
    std::vector<std::vector<int>> rows;
};

HadamardSystem hadamard_system(int n);

/// Optimal embedding of the K_{n,n} metric into l_2^{2n}:
/// u_i -> sqrt(2)(e_i - (1/n) sum e_j), v_i -> the same on the second block.
/// Same-side pairs land at distance 2, cross pairs at 2 sqrt((n-1)/n).
PointSet embed_knn_l2(int n);

/// Sign-vector embedding of K_{n,n} into l_p^{2m}, p > 2, with distortion
/// 2^{2/p}. Rescaled so same-side pairs sit exactly at distance 2
/// (noncontractive normalization).
PointSet embed_knn_lp_basic(int n, double p);

/// The (2m-1)-dimensional refinement: v-points reuse the shared +1
/// coordinate, lowering the cross distance to (2(m-1))^{1/p} and the
/// distortion to 2^{2/p} (1 - 1/m)^{1/p}. Same normalization.
PointSet embed_knn_lp(int n, double p);

/// Certificate of the l_2 isometric-embeddability test: the Gram-style
/// matrix B[i][j] = (d(b,i)^2 + d(b,j)^2 - d(i,j)^2)/2 over the points
/// other than the base, plus a PSD verdict and a witness.
struct SchoenbergCertificate {
    int base = 0;
    bool psd = false;
    std::vector<std::vector<double>> matrix_real;      // real kind
    double min_eigenvalue = 0.0;                       // real-kind witness
    std::vector<std::vector<Rational>> matrix_rational;  // rational kind
    std::vector<int> witness_minor;   // rational-kind witness: row set of a negative principal minor
    Rational witness_value = 0;       // its exact determinant
    bool rational = false;
};

/// Real kind: symmetric eigendecomposition, PSD iff the smallest eigenvalue
/// is >= -1e-9 * trace(B). Rational kind: exact, all principal minors >= 0;
/// throws SizeTooLarge when n-1 > 8.
SchoenbergCertificate schoenberg_test(const MetricSpace& m, int base);
SchoenbergCertificate schoenberg_test(const RationalMetricSpace& m, int base);

/// True iff the space embeds isometrically in l_2 (Schoenberg verdict at
/// base 0; 1- and 2-point spaces always embed).
bool is_l2_isometric(const MetricSpace& m);
bool is_l2_isometric(const RationalMetricSpace& m);

/// PSD-square-root embedding of an n-point {0,1,2} metric into l_2^n with
/// distortion 2 sqrt((n-1)/n): f(i) = A^{1/2} e_i for A with diagonal 2,
/// 2/n on distance-1 pairs and 0 on distance-2 pairs.
PointSet embed_012_l2(const MetricSpace& m);

/// Symmetric eigendecomposition used throughout (Eigen self-adjoint solver).
/// Contract: || Q diag(lambda) Q^T - A ||_max <= 1e-10 * ||A||_max.
struct SymmetricEigen {
    std::vector<std::vector<double>> q;  // columns are eigenvectors
    std::vector<double> lambda;          // ascending
};
SymmetricEigen symmetric_eigen(const std::vector<std::vector<double>>& a);

}  // namespace metra
