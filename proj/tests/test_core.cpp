#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "metra/distortion.hpp"
#include "metra/json_io.hpp"
#include "metra/metric_space.hpp"
#include "metra/point_set.hpp"
#include "metra/ramsey.hpp"

using namespace metra;

namespace {

std::vector<std::vector<double>> equilateral(int n, double side) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, side));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    return d;
}

}  // namespace

TEST_CASE("validate_metric accepts and rejects per axiom") {
    CHECK(validate_metric(equilateral(3, 1.0)).ok());

    auto bad = equilateral(3, 1.0);
    bad[0][2] = bad[2][0] = 3.0;  // d(1,3)=3 > 1+1
    auto v = validate_metric(bad);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->kind == "TriangleViolation");
    CHECK(v.violation->i == 0);
    CHECK(v.violation->j == 1);
    CHECK(v.violation->k == 2);

    auto asym = equilateral(3, 1.0);
    asym[0][1] = 2.0;
    CHECK(validate_metric(asym).violation->kind == "NonSymmetric");

    auto diag = equilateral(2, 1.0);
    diag[1][1] = 0.5;
    CHECK(validate_metric(diag).violation->kind == "NonzeroDiagonal");

    auto neg = equilateral(2, 1.0);
    neg[0][1] = neg[1][0] = 0.0;
    CHECK(validate_metric(neg).violation->kind == "NonPositiveOffDiagonal");
}

TEST_CASE("validate_metric is exact for rationals") {
    // slack below the real-kind tolerance still fails exactly
    std::vector<std::vector<Rational>> d(3, std::vector<Rational>(3, Rational(0)));
    d[0][1] = d[1][0] = Rational(1);
    d[1][2] = d[2][1] = Rational(1);
    d[0][2] = d[2][0] = Rational(2) + Rational(1, 1000000000000000000L);
    auto v = validate_metric(d);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->kind == "TriangleViolation");
}

TEST_CASE("lp_distance") {
    CHECK(lp_distance({1, 1}, {-1, 1}, 4) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lp_distance({3, 4}, {0, 0}, 2) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(lp_distance({1, 0}, {0, 1}, 1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(lp_distance({1}, {1, 2}, 2), doctest::Contains("DimensionMismatch"),
                         Error);
    CHECK_THROWS_WITH_AS(lp_distance({1}, {2}, 0.5), doctest::Contains("InvalidExponent"), Error);
    CHECK_THROWS_AS(lp_distance({1}, {2}, std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("induced_metric") {
    const MetricSpace two = induced_metric({{{0}, {1}}, 2});
    CHECK(two(0, 1) == 1.0);

    const MetricSpace square = induced_metric({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 2});
    CHECK(square(0, 1) == doctest::Approx(1.0));
    CHECK(square(0, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const MetricSpace line = induced_metric({{{0}, {1}, {3}}, 1});
    CHECK(line(0, 1) == 1.0);
    CHECK(line(1, 2) == 2.0);
    CHECK(line(0, 2) == 3.0);

    CHECK_THROWS_WITH_AS(induced_metric({{{1, 2}, {1, 2}}, 2}), doctest::Contains("DuplicatePoints"),
                         Error);
}

TEST_CASE("induced_metric output always validates") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1, 1);
    for (int rep = 0; rep < 50; ++rep) {
        PointSet ps;
        ps.p = 1.0 + (rep % 4);
        const int n = 2 + static_cast<int>(rng() % 6), dim = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            std::vector<double> pt(dim);
            for (double& c : pt) c = coord(rng);
            ps.points.push_back(pt);
        }
        CHECK(validate_metric(induced_metric(ps).matrix()).ok());
    }
}

TEST_CASE("distortion basics") {
    const MetricSpace src = induced_metric({{{0, 0}, {1, 0}, {0, 1}}, 2});
    const DistortionReport iso = distortion(src, {{{0, 0}, {1, 0}, {0, 1}}, 2});
    CHECK(iso.distortion == doctest::Approx(1.0).epsilon(1e-14));

    // image distances scale-cancel
    const PointSet image{{{0, 0}, {2, 0}, {0, 1}}, 2};
    const double base = distortion(src, image).distortion;
    for (double c : {0.5, 1.0, 3.0})
        CHECK(distortion(src, scaled(image, c)).distortion == doctest::Approx(base).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(distortion(src, image, {0, 0, 1}), doctest::Contains("NotBijective"),
                         Error);
    CHECK_THROWS_WITH_AS(distortion(src, {{{0, 0}, {0, 0}, {1, 1}}, 2}),
                         doctest::Contains("ZeroImageDistance"), Error);
    CHECK(iso.distortion >= 1.0 - 1e-12);
}

TEST_CASE("knn_metric") {
    const MetricSpace one = knn_metric(1);
    CHECK(one.size() == 2);
    CHECK(one(0, 1) == 1.0);

    const MetricSpace two = knn_metric(2);
    CHECK(two(0, 1) == 2.0);  // u_1, u_2
    CHECK(two(0, 2) == 1.0);  // u_1, v_1
    CHECK(two(2, 3) == 2.0);  // v_1, v_2

    CHECK(validate_metric(knn_metric(5).matrix()).ok());
    CHECK_THROWS_WITH_AS(knn_metric(0), doctest::Contains("InvalidSize"), Error);
}

TEST_CASE("graph <-> {0,1,2} metric correspondence") {
    CHECK(metric_from_graph_012(Graph::complete_bipartite(2, 2)).matrix() ==
          knn_metric(2).matrix());
    CHECK(metric_from_graph_012(Graph::complete(3)).matrix() == equilateral(3, 1.0));
    CHECK(metric_from_graph_012(Graph::empty(3)).matrix() == equilateral(3, 2.0));

    CHECK(graph_from_012_metric(MetricSpace(equilateral(4, 1.0))) == Graph::complete(4));
    CHECK(graph_from_012_metric(knn_metric(3)) == Graph::complete_bipartite(3, 3));

    auto bad = equilateral(3, 2.0);
    bad[0][1] = bad[1][0] = 1.5;
    CHECK_THROWS_WITH_AS(graph_from_012_metric(MetricSpace(bad)),
                         doctest::Contains("NotZeroOneTwo"), Error);
}

TEST_CASE("graph round trip: exhaustive n <= 5, random n <= 8") {
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1u << bit)) edges.emplace_back(i, j);
            const Graph g(n, edges);
            CHECK(graph_from_012_metric(metric_from_graph_012(g)) == g);
        }
    }
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const Graph g = sample_gn_half(n, seed);
        CHECK(graph_from_012_metric(metric_from_graph_012(g)) == g);
    }
}

TEST_CASE("restrict") {
    const MetricSpace m = knn_metric(2);
    CHECK(restrict(m, {0, 1, 2, 3}).matrix() == m.matrix());
    const MetricSpace pair = restrict(m, {0, 2});  // u_1, v_1
    CHECK(pair.size() == 2);
    CHECK(pair(0, 1) == 1.0);
    CHECK(restrict(m, {3}).size() == 1);
    CHECK_THROWS_WITH_AS(restrict(m, {0, 9}), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(restrict(m, {0, 0}), doctest::Contains("Duplicate"), Error);

    std::vector<std::vector<Rational>> rd{{Rational(0), Rational(1, 2)},
                                          {Rational(1, 2), Rational(0)}};
    const RationalMetricSpace rm = make_metric(rd);
    CHECK(restrict(rm, {1, 0})(0, 1) == Rational(1, 2));
}

TEST_CASE("extract_geodesic") {
    CHECK(extract_geodesic(Graph::path(5)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(extract_geodesic(Graph::cycle(6)) == std::vector<int>{0, 1, 2, 3});
    CHECK(extract_geodesic(Graph::complete(4)) == std::vector<int>{0, 1});
    CHECK(extract_geodesic(Graph(1, {})) == std::vector<int>{0});
    CHECK_THROWS_WITH_AS(extract_geodesic(Graph(4, {{0, 1}, {2, 3}})),
                         doctest::Contains("Disconnected"), Error);
}

TEST_CASE("extract_geodesic induces the line metric") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = sample_gn_half(8, seed);
        const auto dist = all_pairs_distances(g);
        bool connected = true;
        for (const auto& row : dist)
            for (int v : row)
                if (v < 0) connected = false;
        if (!connected) continue;
        const auto path = extract_geodesic(g);
        for (size_t i = 0; i < path.size(); ++i)
            for (size_t j = 0; j < path.size(); ++j)
                CHECK(dist[path[i]][path[j]] ==
                      std::abs(static_cast<int>(i) - static_cast<int>(j)));
    }
}

TEST_CASE("json round trips") {
    const MetricSpace m = knn_metric(3);
    const AnyMetric back = metric_from_json(to_json(m));
    CHECK(std::get<MetricSpace>(back).matrix() == m.matrix());

    std::vector<std::vector<Rational>> rd(3, std::vector<Rational>(3, Rational(0)));
    rd[0][1] = rd[1][0] = rational_from_string("3999/4000");
    rd[1][2] = rd[2][1] = Rational(1);
    rd[0][2] = rd[2][0] = rational_from_string("7997/4000");
    const RationalMetricSpace rm = make_metric(rd);
    const json j = to_json(rm);
    CHECK(j["d"][0][1] == "3999/4000");
    const AnyMetric rback = metric_from_json(j);
    CHECK(std::get<RationalMetricSpace>(rback).matrix() == rm.matrix());

    const Graph g = sample_gn_half(7, 42);
    CHECK(graph_from_json(to_json(g)) == g);

    const PointSet ps{{{0.1, -2.5}, {1.0 / 3.0, 7e-17}}, 2.5};
    const PointSet pback = point_set_from_json(to_json(ps));
    CHECK(pback.p == ps.p);
    CHECK(pback.points == ps.points);
}

TEST_CASE("rational string forms are lowest terms") {
    CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
    CHECK(rational_to_string(rational_from_string("5")) == "5");
    CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
}
