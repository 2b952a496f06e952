#pragma once

#include <utility>
#include <vector>

#include "metra/metric_space.hpp"

namespace metra {

/// Two sides of the generalized-roundness inequality for an equal-size pair
/// of l_p configurations. Sums run over ordered pairs (i,j) including i = j.
/// constant = 2 for p <= 2 and 2^{p-1} for p >= 2 (they agree at p = 2).
struct RoundnessReport {
    double lhs = 0;       // sum of within-side p-th powers
    double rhs = 0;       // constant * sum of cross p-th powers
    double slack = 0;     // rhs - lhs; >= -1e-9 * rhs for genuine l_p points
    double constant = 0;
};

RoundnessReport roundness_slack(const std::vector<std::vector<double>>& xs,
                                const std::vector<std::vector<double>>& ys, double p);

/// RHS - LHS of the row/column-sum inequality for an n x n matrix and
/// p >= 2: (2n)^p/2 * sum |a_ij|^p minus
/// sum_{i,j} (|r_i - r_j|^p + |c_i - c_j|^p). Nonnegative for all real A.
double matrix_rowcol_slack(const std::vector<std::vector<double>>& a, double p);

/// |LHS - RHS| of the elementary identity behind the p = 2 case:
/// 2 n^2 sum a_ij^2 = sum[(r_i-r_j)^2 + (c_i-c_j)^2]
///                    + 2 sum (n a_ij - r_i - c_j)^2.
double matrix_identity_residual(const std::vector<std::vector<double>>& a);

/// Roundness-based lower bound on the l_p distortion of the subspace on
/// sideA + sideB: max(1, (sum_within d^p / (c_p sum_cross d^p))^{1/p}).
double bipartite_lower_bound(const MetricSpace& m, const std::vector<int>& side_a,
                             const std::vector<int>& side_b, double p);

/// Closed-form bounds on c_p(K_{n,n}):
///   p <= 2: ( 2((n-1)/n)^{1/p},       2 sqrt((n-1)/n) )
///   p >  2: ( 2^{2/p}((n-1)/n)^{1/p}, 2^{2/p}(1 - 1/(2n))^{1/p} )
std::pair<double, double> knn_cp_bounds(int n, double p);

}  // namespace metra
