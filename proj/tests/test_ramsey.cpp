#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "metra/bounds.hpp"
#include "metra/metric_space.hpp"
#include "metra/ramsey.hpp"

using namespace metra;

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end());
    int c = 0;
    for (int v : b) c += sa.count(v);
    return c;
}

MetricSpace line_metric(int n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::abs(i - j);
    return MetricSpace(std::move(d));
}

// Oracle for find_knn_copy (k = 2): brute-force scan over all 4-subsets and
// bipartition labelings, comparing distances against the K_{2,2} pattern.
bool has_knn2_by_bruteforce(const MetricSpace& m) {
    const int n = m.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (m(a, b) == 2.0 && m(c, d) == 2.0 && m(a, c) == 1.0 && m(a, d) == 1.0 &&
                        m(b, c) == 1.0 && m(b, d) == 1.0)
                        return true;
                }
    return false;
}

}  // namespace

TEST_CASE("almost_disjoint_family worked example (s=19, k=3)") {
    const auto fam = almost_disjoint_family(19, 3);
    CHECK(fam.prime == 5);
    CHECK(fam.sets.size() == 25);
    CHECK(fam.sets.size() >= 9);  // floor(19/6)^2
    for (const auto& a : fam.sets) {
        CHECK(a.size() == 3);
        for (int v : a) {
            CHECK(v >= 0);
            CHECK(v < 19);
        }
        CHECK(std::set<int>(a.begin(), a.end()).size() == 3);
    }
    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (size_t j = i + 1; j < fam.sets.size(); ++j)
            CHECK(intersection_size(fam.sets[i], fam.sets[j]) <= 1);
}

TEST_CASE("almost_disjoint_family invariants on the parameter grid") {
    for (auto [s, k] : std::vector<std::pair<int, int>>{{19, 3}, {25, 3}, {35, 4}, {51, 5}}) {
        const auto fam = almost_disjoint_family(s, k);
        CHECK(static_cast<int>(fam.sets.size()) == fam.prime * fam.prime);
        CHECK(static_cast<int>(fam.sets.size()) >= (s / (2 * k)) * (s / (2 * k)));
        for (const auto& a : fam.sets) {
            CHECK(static_cast<int>(a.size()) == k);
            CHECK(std::set<int>(a.begin(), a.end()).size() == static_cast<size_t>(k));
            CHECK(*std::max_element(a.begin(), a.end()) < s);
        }
        for (size_t i = 0; i < fam.sets.size(); ++i)
            for (size_t j = i + 1; j < fam.sets.size(); ++j)
                CHECK(intersection_size(fam.sets[i], fam.sets[j]) <= 1);
    }
    CHECK_THROWS_WITH_AS(almost_disjoint_family(18, 3), doctest::Contains("PreconditionViolated"),
                         Error);
}

TEST_CASE("sample_gn_half determinism and edge statistics") {
    CHECK(sample_gn_half(10, 5) == sample_gn_half(10, 5));
    CHECK_FALSE(sample_gn_half(10, 5) == sample_gn_half(10, 6));
    CHECK(sample_gn_half(1, 0).edge_count() == 0);

    // mean edge count over 100 seeds within 3 sigma of C(100,2)/2
    double total = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) total += sample_gn_half(100, seed).edge_count();
    const double mean = total / 100.0;
    const double sigma = std::sqrt(100.0 * 99.0 / 2.0) / 2.0;  // ~35.2
    CHECK(std::abs(mean - 2475.0) <= 3.0 * sigma);
}

TEST_CASE("contains_induced") {
    const Graph edge(2, {{0, 1}});
    CHECK(contains_induced(Graph(3, {{1, 2}}), edge).has_value());
    CHECK(contains_induced(Graph::path(3), edge).has_value());

    // K_3 has no induced P_3
    CHECK_FALSE(contains_induced(Graph::complete(3), Graph::path(3)).has_value());

    // C_4 is an induced K_{2,2}
    const auto hit = contains_induced(Graph::cycle(4), Graph::complete_bipartite(2, 2));
    REQUIRE(hit.has_value());
    const Graph ind = Graph::cycle(4).induced(*hit);
    CHECK(ind == Graph::complete_bipartite(2, 2));

    CHECK_THROWS_WITH_AS(contains_induced(Graph::complete(12), Graph::complete(11)),
                         doctest::Contains("TargetTooLarge"), Error);
}

TEST_CASE("miss_probability_bound") {
    CHECK(miss_probability_bound(3, 19) == doctest::Approx(0.30065780133008957).epsilon(1e-14));
    CHECK(miss_probability_bound(2, 9) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(miss_probability_bound(3, 18), doctest::Contains("PreconditionViolated"),
                         Error);
}

TEST_CASE("monte_carlo_universality") {
    // single vertex is always present
    CHECK(monte_carlo_universality(Graph(1, {}), 5, 200, 1) == 0.0);
    // deterministic given the seed
    CHECK(monte_carlo_universality(Graph::path(3), 19, 500, 9) ==
          monte_carlo_universality(Graph::path(3), 19, 500, 9));
    // against the theoretical bound, generous unit-test budget
    const double frac = monte_carlo_universality(Graph::path(3), 19, 2000, 7);
    CHECK(frac <= miss_probability_bound(3, 19) + 0.05);
}

TEST_CASE("build_universal_metric exhaustive mode on a small instance") {
    // C(12,9) = 220 subsets: exhaustive; seed 1 succeeds on attempt 4
    const auto out = build_universal_metric(12, 2, 9, 60, 1);
    CHECK(out.report.exhaustive);
    CHECK(out.success);
    CHECK(out.report.attempt == 4);
    CHECK(out.report.misses.empty());
    CHECK(out.report.checked == 220);
    CHECK(out.metric.matrix() == metric_from_graph_012(out.graph).matrix());
    // spot-check: the first 9-subset really carries an isometric K_{2,2}
    const auto copy = find_knn_copy(out.metric, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(copy.has_value());
    CHECK(restrict(out.metric, *copy).matrix() == knn_metric(2).matrix());

    // identical seeds reproduce identical graphs
    const auto again = build_universal_metric(12, 2, 9, 60, 1);
    CHECK(out.graph == again.graph);
    CHECK(out.success == again.success);

    // a failing search returns the best attempt instead of throwing
    const auto best = build_universal_metric(14, 2, 9, 3, 1);
    CHECK_FALSE(best.success);
    CHECK_FALSE(best.report.misses.empty());

    CHECK_THROWS_WITH_AS(build_universal_metric(12, 5, 8, 5, 1), doctest::Contains("InvalidSizes"),
                         Error);
}

TEST_CASE("find_knn_copy") {
    const MetricSpace c4 = metric_from_graph_012(Graph::cycle(4));
    const auto hit = find_knn_copy(c4, 2, {0, 1, 2, 3});
    REQUIRE(hit.has_value());
    CHECK(restrict(c4, *hit).matrix() == knn_metric(2).matrix());

    const MetricSpace complete = metric_from_graph_012(Graph::complete(5));
    CHECK_FALSE(find_knn_copy(complete, 2, {0, 1, 2, 3, 4}).has_value());
    const MetricSpace empty = metric_from_graph_012(Graph::empty(5));
    CHECK_FALSE(find_knn_copy(empty, 2, {0, 1, 2, 3, 4}).has_value());

    CHECK_THROWS_WITH_AS(find_knn_copy(c4, 2, {0, 1}), doctest::Contains("InvalidSizes"), Error);
    CHECK_THROWS_WITH_AS(find_knn_copy(c4, 6, {0, 1, 2, 3}), doctest::Contains("TargetTooLarge"),
                         Error);
}

TEST_CASE("find_knn_copy agrees with the brute-force isometry scan") {
    std::vector<int> full(10);
    for (int i = 0; i < 10; ++i) full[i] = i;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const MetricSpace m = metric_from_graph_012(sample_gn_half(10, seed));
        const auto via_graph = find_knn_copy(m, 2, full);
        CHECK(via_graph.has_value() == has_knn2_by_bruteforce(m));
        if (via_graph) CHECK(restrict(m, *via_graph).matrix() == knn_metric(2).matrix());
    }
}

TEST_CASE("iso_ramsey_l2") {
    // any metric with n >= 3 admits a 3-point subspace
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const MetricSpace m = metric_from_graph_012(sample_gn_half(6, seed));
        CHECK(iso_ramsey_l2(m).size >= 3);
    }
    // collinear spaces embed in full
    const auto line = iso_ramsey_l2(line_metric(7));
    CHECK(line.size == 7);
    CHECK(line.witness == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

    CHECK_THROWS_WITH_AS(iso_ramsey_l2(line_metric(17)), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("iso_ramsey_l2 is monotone under adding points") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        const MetricSpace m = metric_from_graph_012(sample_gn_half(8, seed));
        int prev = 0;
        for (int t = 3; t <= 8; ++t) {
            std::vector<int> prefix(t);
            for (int i = 0; i < t; ++i) prefix[i] = i;
            const int size = iso_ramsey_l2(restrict(m, prefix)).size;
            CHECK(size >= prev);
            prev = size;
        }
    }
}

TEST_CASE("distortion_certificate_bound") {
    // full K_{3,3} fails at alpha = 1.5 (its own certificate is ~1.633)
    const auto knn3 = distortion_certificate_bound(knn_metric(3), 2, 1.5);
    CHECK(knn3.size < 6);

    // alpha = 2 passes any {0,1,2} metric in full
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        const MetricSpace m = metric_from_graph_012(sample_gn_half(n, seed));
        const auto w = distortion_certificate_bound(m, 2, 2.0);
        CHECK(w.size == n);
    }

    // 3-point spaces pass at alpha = 1 (only pair bipartitions exist)
    const MetricSpace tri = metric_from_graph_012(Graph::complete(3));
    CHECK(distortion_certificate_bound(tri, 2, 1.0).size == 3);
}

TEST_CASE("low-distortion threshold mechanism over the delta grid") {
    for (int tenths = 1; tenths <= 9; ++tenths) {
        const double delta = tenths / 10.0;
        const int k = static_cast<int>(std::floor(2.0 / delta)) + 1;
        std::vector<int> left(k), right(k);
        for (int i = 0; i < k; ++i) {
            left[i] = i;
            right[i] = k + i;
        }
        for (double p : {1.0, 1.5, 2.0})
            CHECK(bipartite_lower_bound(knn_metric(k), left, right, p) > 2.0 - delta);
    }
}
