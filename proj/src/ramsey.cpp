#include "metra/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "metra/bounds.hpp"
#include "metra/embeddings.hpp"
#include "metra/rng.hpp"

namespace metra {

namespace {

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1LL << 62) / n) return std::numeric_limits<long long>::max();
    }
    return r;
}

// Lexicographic combination enumeration: calls fn on each k-subset of
// {0..n-1} until fn returns false.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SetFamily almost_disjoint_family(int s, int k) {
    if (k < 2) fail("PreconditionViolated", "need k >= 2");
    if (s <= 2 * k * k) fail("PreconditionViolated", "need s > 2k^2");
    int p = -1;
    for (int cand = (s + 2 * k - 1) / (2 * k); cand * k <= s; ++cand)
        if (is_prime(cand)) {
            p = cand;
            break;
        }
    if (p < 0) fail("NoPrimeFound", "no prime in [s/2k, s/k]");

    SetFamily fam;
    fam.ground = s;
    fam.k = k;
    fam.prime = p;
    fam.sets.reserve(static_cast<size_t>(p) * p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<int> line(k);
            for (int i = 0; i < k; ++i) line[i] = i * p + (a * i + b) % p;
            fam.sets.push_back(std::move(line));
        }
    return fam;
}

Graph sample_gn_half(int n, uint64_t seed) {
    if (n < 1) fail("InvalidSize", "need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1ULL) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    const int k = h.vertex_count();
    if (k > 10) fail("TargetTooLarge", "induced search capped at 10 target vertices");
    const int n = g.vertex_count();
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;

    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    // Backtracking over h-vertices in index order, g-candidates ascending:
    // the first embedding found is lexicographically least.
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (g.degree(v) < h.degree(t)) continue;
            if ((n - 1 - g.degree(v)) < (k - 1 - h.degree(t))) continue;
            bool ok = true;
            for (int u = 0; u < t; ++u)
                if (g.has_edge(map[u], v) != h.has_edge(u, t)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[t] = v;
            used[v] = true;
            if (self(self, t + 1)) return true;
            used[v] = false;
            map[t] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

double miss_probability_bound(int k, int s) {
    if (s <= 2 * k * k) fail("PreconditionViolated", "need s > 2k^2");
    const double q = 1.0 - std::pow(2.0, -static_cast<double>(k) * (k - 1) / 2.0);
    const double family = std::floor(static_cast<double>(s) / (2 * k));
    return std::pow(q, family * family);
}

double monte_carlo_universality(const Graph& h, int s, int trials, uint64_t seed) {
    if (trials < 1) fail("PreconditionViolated", "need trials >= 1");
    uint64_t stream = seed;
    int misses = 0;
    for (int t = 0; t < trials; ++t) {
        const Graph g = sample_gn_half(s, splitmix64(stream));
        if (!contains_induced(g, h).has_value()) ++misses;
    }
    return static_cast<double>(misses) / trials;
}

UniversalOutcome build_universal_metric(int n, int k, int s, int attempts, uint64_t seed) {
    if (2 * k > s || s > n) fail("InvalidSizes", "need 2k <= s <= n");
    if (attempts < 1) fail("PreconditionViolated", "need attempts >= 1");
    const Graph h = Graph::complete_bipartite(k, k);
    const long long total = binomial(n, s);
    const bool exhaustive = total <= 1'000'000;
    const long long sample_budget = std::min<long long>(10'000, total);

    UniversalOutcome best;
    best.success = false;
    size_t best_misses = std::numeric_limits<size_t>::max();

    uint64_t stream = seed;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const uint64_t graph_seed = splitmix64(stream);
        const uint64_t subset_seed = splitmix64(stream);
        const Graph g = sample_gn_half(n, graph_seed);

        UniversalityReport report;
        report.s = s;
        report.exhaustive = exhaustive;
        report.seed = seed;
        report.attempt = attempt;
        report.theoretical_bound = (s > 8 * k * k)  // H has 2k vertices
                                       ? miss_probability_bound(2 * k, s)
                                       : std::numeric_limits<double>::quiet_NaN();
        if (exhaustive) {
            for_each_combination(n, s, [&](const std::vector<int>& subset) {
                ++report.checked;
                if (!contains_induced(g.induced(subset), h).has_value())
                    report.misses.push_back(subset);
                return true;
            });
        } else {
            std::mt19937_64 rng(subset_seed);
            std::vector<int> pool(n);
            for (long long t = 0; t < sample_budget; ++t) {
                std::iota(pool.begin(), pool.end(), 0);
                for (int i = 0; i < s; ++i) {
                    std::uniform_int_distribution<int> pick(i, n - 1);
                    std::swap(pool[i], pool[pick(rng)]);
                }
                std::vector<int> subset(pool.begin(), pool.begin() + s);
                std::sort(subset.begin(), subset.end());
                ++report.checked;
                if (!contains_induced(g.induced(subset), h).has_value())
                    report.misses.push_back(subset);
            }
        }

        if (report.misses.empty()) {
            UniversalOutcome out;
            out.success = true;
            out.graph = g;
            out.metric = metric_from_graph_012(g);
            out.report = std::move(report);
            return out;
        }
        if (report.misses.size() < best_misses) {
            best_misses = report.misses.size();
            best.graph = g;
            best.metric = metric_from_graph_012(g);
            best.report = std::move(report);
        }
    }
    return best;  // success = false: AllAttemptsFailed, best report attached
}

std::optional<std::vector<int>> find_knn_copy(const MetricSpace& m, int k,
                                              const std::vector<int>& subset) {
    if (2 * k > 10) fail("TargetTooLarge", "induced search capped at 10 target vertices");
    if (static_cast<int>(subset.size()) < 2 * k)
        fail("InvalidSizes", "subset smaller than 2k");
    const Graph g = graph_from_012_metric(m);  // NotZeroOneTwo on bad input
    const Graph sub = g.induced(subset);
    const auto hit = contains_induced(sub, Graph::complete_bipartite(k, k));
    if (!hit) return std::nullopt;
    std::vector<int> out;
    out.reserve(2 * k);
    for (int v : *hit) out.push_back(subset[v]);
    return out;
}

namespace {

template <class Scalar>
SubsetWitness iso_ramsey_impl(const BasicMetricSpace<Scalar>& m) {
    const int n = m.size();
    if (n > 16) fail("TooLarge", "exhaustive subset search capped at 16 points");
    if (n < 1) fail("InvalidSize", "empty space");
    SubsetWitness best{1, {0}};
    for (int size = 2; size <= n; ++size) {
        std::optional<std::vector<int>> witness;
        for_each_combination(n, size, [&](const std::vector<int>& subset) {
            if (is_l2_isometric(restrict(m, subset))) {
                witness = subset;
                return false;
            }
            return true;
        });
        if (!witness) break;
        best = {size, std::move(*witness)};
    }
    return best;
}

}  // namespace

SubsetWitness iso_ramsey_l2(const MetricSpace& m) { return iso_ramsey_impl(m); }
SubsetWitness iso_ramsey_l2(const RationalMetricSpace& m) { return iso_ramsey_impl(m); }

SubsetWitness distortion_certificate_bound(const MetricSpace& m, double p, double alpha) {
    const int n = m.size();
    if (n > 16) fail("TooLarge", "exhaustive subset search capped at 16 points");
    if (!(alpha >= 1.0)) fail("PreconditionViolated", "need alpha >= 1");

    // Mark every even subset (size <= 8) having a balanced bipartition whose
    // roundness certificate exceeds alpha, then close under supersets.
    std::vector<bool> bad(1u << n, false);
    for (int size = 2; size <= std::min(8, n); size += 2) {
        for_each_combination(n, size, [&](const std::vector<int>& subset) {
            const int half = size / 2;
            // Fix subset[0] on side A to enumerate unordered bipartitions.
            std::vector<int> rest(subset.begin() + 1, subset.end());
            bool is_bad = false;
            for_each_combination(size - 1, half - 1, [&](const std::vector<int>& pick) {
                std::vector<int> a{subset[0]};
                std::vector<bool> taken(rest.size(), false);
                for (int t : pick) {
                    a.push_back(rest[t]);
                    taken[t] = true;
                }
                std::vector<int> b;
                for (size_t t = 0; t < rest.size(); ++t)
                    if (!taken[t]) b.push_back(rest[t]);
                if (bipartite_lower_bound(m, a, b, p) > alpha) {
                    is_bad = true;
                    return false;
                }
                return true;
            });
            if (is_bad) {
                unsigned mask = 0;
                for (int v : subset) mask |= 1u << v;
                bad[mask] = true;
            }
            return true;
        });
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (bad[mask]) continue;
        for (int b = 0; b < n; ++b)
            if ((mask & (1u << b)) && bad[mask ^ (1u << b)]) {
                bad[mask] = true;
                break;
            }
    }

    SubsetWitness best{0, {}};
    for (int size = n; size >= 1 && best.size == 0; --size) {
        for_each_combination(n, size, [&](const std::vector<int>& subset) {
            unsigned mask = 0;
            for (int v : subset) mask |= 1u << v;
            if (!bad[mask]) {
                best = {size, subset};
                return false;
            }
            return true;
        });
    }
    return best;
}

}  // namespace metra
