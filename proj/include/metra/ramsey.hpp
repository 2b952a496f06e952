#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metra/graph.hpp"
#include "metra/metric_space.hpp"

namespace metra {

/// Family of k-element subsets of {0..ground-1} in which any two members
/// share at most one element.
struct SetFamily {
    int ground = 0;
    int k = 0;
    int prime = 0;  // the prime used for the affine-line construction
    std::vector<std::vector<int>> sets;
};

/// Affine lines over Z_p for the smallest prime p in [s/2k, s/k], with
/// ground injection (i, j) -> i*p + j. Yields p^2 >= floor(s/2k)^2 sets.
/// Requires s > 2k^2 (PreconditionViolated otherwise).
SetFamily almost_disjoint_family(int s, int k);

/// G(n, 1/2): every edge present independently with probability 1/2.
/// Generator contract: std::mt19937_64 seeded with `seed`, edges visited in
/// lexicographic (i < j) order, one engine draw per edge, least significant
/// bit decides presence. Identical (n, seed) give identical graphs.
Graph sample_gn_half(int n, uint64_t seed);

/// Some vertex list of g inducing a copy of h (in h-vertex order), or
/// nullopt. Deterministic lexicographic backtracking with degree pruning.
/// Requires |V(h)| <= 10 (TargetTooLarge).
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

/// (1 - 2^{-C(k,2)})^{floor(s/2k)^2}; requires s > 2k^2.
double miss_probability_bound(int k, int s);

/// Fraction of `trials` seeded G(s,1/2) samples lacking an induced copy of
/// h. Trial seeds come from a splitmix64 walk of `seed`.
double monte_carlo_universality(const Graph& h, int s, int trials, uint64_t seed);

struct UniversalityReport {
    int s = 0;
    bool exhaustive = false;  // exhaustive iff C(n,s) <= 10^6; else sampled (heuristic)
    long long checked = 0;
    std::vector<std::vector<int>> misses;  // s-subsets with no induced copy
    double theoretical_bound = 0.0;        // miss bound when s > 2k^2, else NaN
    uint64_t seed = 0;
    int attempt = -1;  // index of the returned candidate
};

/// Searches up to `attempts` G(n,1/2) samples for an (H,s)-universal graph
/// with H = K_{k,k}, returning the first fully verified candidate and its
/// {0,1,2} metric. success = false returns the best attempt (fewest misses);
/// the report is a certificate only in exhaustive mode.
struct UniversalOutcome {
    bool success = false;
    Graph graph;
    MetricSpace metric;
    UniversalityReport report;
};

UniversalOutcome build_universal_metric(int n, int k, int s, int attempts, uint64_t seed);

/// 2k indices inside `subset` whose restriction is isometric to the
/// K_{k,k} metric (first k returned indices form one side), or nullopt.
std::optional<std::vector<int>> find_knn_copy(const MetricSpace& m, int k,
                                              const std::vector<int>& subset);

struct SubsetWitness {
    int size = 0;
    std::vector<int> witness;
};

/// Largest subset that embeds isometrically in l_2, by increasing-size
/// exhaustive search with lexicographic witnesses. Requires n <= 16.
SubsetWitness iso_ramsey_l2(const MetricSpace& m);
SubsetWitness iso_ramsey_l2(const RationalMetricSpace& m);

/// Largest subset S in which no equal-size bipartition of any even subset
/// of size <= 8 yields a roundness certificate above alpha. One-sided
/// screen: passing S may still have c_p(S) > alpha.
SubsetWitness distortion_certificate_bound(const MetricSpace& m, double p, double alpha);

}  // namespace metra
