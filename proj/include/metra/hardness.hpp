#pragma once

#include <array>
#include <optional>
#include <vector>

#include "metra/convexity.hpp"
#include "metra/embeddings.hpp"
#include "metra/metric_space.hpp"

namespace metra {

/// Iteratively built metric on {0..n-1}: an equilateral pair of base tips
/// {0, 1} followed by a near-path tail. etas[t] is the margin parameter of
/// the (t+3)-point stage (eta halves per extension); esses[t] is the s
/// chosen when point t+3 was attached.
///
/// Certificate coverage: quadruples containing both base tips violate the
/// four-point convexity consequence with margin eta and so embed in no
/// norm whose modulus dominates delta. Tail quadruples whose three largest
/// points are consecutive are nearly collinear with additive deficits and
/// genuinely embed in l_2 once n >= 5; the halving schedule below cannot
/// avoid this, because the certificate needs the attach steps to shrink
/// doubly exponentially while the eta schedule only halves. See
/// condition_b_margin for the per-stage certificate.
struct UCConstruction {
    MetricSpace metric;
    std::vector<double> etas;
    std::vector<double> esses;
    ConvexityModulus modulus = ConvexityModulus::l2();

    /// eta of the stage with `points` points (3 <= points <= n).
    double eta_at(int points) const { return etas.at(points - 3); }
};

/// Base: equilateral triangle of side 2 with eta = 1. Extension k -> k+1
/// attaches the new point at d(k-1, k) = 1 - s/2 and d(i, k) = d(i, k-1)
/// + 1 - s, with s halved from min{1, 2 min_i d(i, k-1)}/2 until the
/// certificate quantity is at most eta/2 for every pair below the attach
/// point. Throws SearchFailure if s underflows 1e-300.
UCConstruction build_uc_hard_metric(int n, const ConvexityModulus& delta);

struct ConditionBMargin {
    bool vacuous = false;  // stage too small to host any triple
    double margin = 0.0;
};

/// Margin of the stage certificate for the triple i < j < k against the
/// stage point (0-based; requires i < j < k < stage < n). The certified
/// inequality reads, with the stage point as fourth point l:
///   d_ij + d_jk - d_ik - eta_stage >=
///     2 d_jk [ delta^{-1}((d_ik + d_kl - d_il)/min(d_ik, d_kl))
///            + delta^{-1}((d_jk + d_kl - d_jl)/min(d_jk, d_kl)) ].
/// Nonnegative whenever d_ij + d_jk - d_ik is large (in particular for
/// every triple with {i, j} = {0, 1}); negative for near-collinear tail
/// triples once the stage eta exceeds their slack.
ConditionBMargin condition_b_margin(const UCConstruction& c, int stage, int i, int j, int k);

/// Minimum margin over all triples of a stage; vacuous for stages with
/// fewer than four points.
ConditionBMargin condition_b_stage_margin(const UCConstruction& c, int stage);

/// Gap of the four-point consequence for the quadruple i < j < k < l in
/// the role order (x1,x2,x3,x4) = (i,j,k,l). At most
/// -eta_l / (2 d_jk) for quadruples containing both base tips; positive
/// (no violation) for the embeddable tail quadruples.
double uc_quadruple_gap(const UCConstruction& c, int i, int j, int k, int l);

/// Exact-rational metric d(i,j) = |i-j| - eps * a_|i-j| on {0..n-1} with
/// a_0 = 0, a_1 = 1, a_{i+1} = 2(n+1) a_i and eps = 1/(4 a_n), shrunk by
/// 1/(2(n+1)) until every 4-subset is certified non-embeddable in l_2 by
/// exact principal minors. shrink_rounds records how often eps shrank.
struct L2HardConstruction {
    RationalMetricSpace metric;
    std::vector<Rational> a;
    Rational eps = 0;
    int shrink_rounds = 0;
};

L2HardConstruction build_l2_hard_metric(int n);

/// Result of testing every 4-subset with the Schoenberg criterion.
struct QuadrupleScan {
    bool all_clear = false;
    long long checked = 0;
    std::vector<std::array<int, 4>> embeddable;  // PSD quadruples, sorted
};

QuadrupleScan verify_no_isometric_quadruple(const MetricSpace& m);
QuadrupleScan verify_no_isometric_quadruple(const RationalMetricSpace& m);

}  // namespace metra
