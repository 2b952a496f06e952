#include "metra/json_io.hpp"

#include <fstream>

#include "metra/errors.hpp"

namespace metra {

namespace {

json matrix_to_json(const std::vector<std::vector<double>>& d) { return json(d); }

json matrix_to_json(const std::vector<std::vector<Rational>>& d) {
    json rows = json::array();
    for (const auto& row : d) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_to_string(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

json to_json(const MetricSpace& m) {
    return json{{"kind", "real"}, {"n", m.size()}, {"d", matrix_to_json(m.matrix())}};
}

json to_json(const RationalMetricSpace& m) {
    return json{{"kind", "rational"}, {"n", m.size()}, {"d", matrix_to_json(m.matrix())}};
}

json to_json(const AnyMetric& m) {
    return std::visit([](const auto& v) { return to_json(v); }, m);
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json to_json(const PointSet& ps) { return json{{"p", ps.p}, {"points", ps.points}}; }

json to_json(const DistortionReport& r) {
    return json{{"expansion", r.expansion},
                {"contraction", r.contraction},
                {"distortion", r.distortion},
                {"expansion_pair", json::array({r.expansion_pair.first, r.expansion_pair.second})},
                {"contraction_pair",
                 json::array({r.contraction_pair.first, r.contraction_pair.second})}};
}

json to_json(const RoundnessReport& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack}, {"constant", r.constant}};
}

json to_json(const SchoenbergCertificate& c) {
    json j{{"base", c.base}, {"verdict", c.psd ? "PSD" : "NotPSD"}};
    if (c.rational) {
        j["kind"] = "rational";
        j["matrix"] = matrix_to_json(c.matrix_rational);
        if (!c.psd) {
            j["witness_minor"] = c.witness_minor;
            j["witness_value"] = rational_to_string(c.witness_value);
        }
    } else {
        j["kind"] = "real";
        j["matrix"] = matrix_to_json(c.matrix_real);
        j["min_eigenvalue"] = c.min_eigenvalue;
    }
    return j;
}

json to_json(const QuadrupleScan& r) {
    json quads = json::array();
    for (const auto& q : r.embeddable) quads.push_back(json::array({q[0], q[1], q[2], q[3]}));
    return json{{"all_clear", r.all_clear}, {"checked", r.checked}, {"embeddable", std::move(quads)}};
}

json to_json(const SetFamily& f) {
    return json{{"ground", f.ground}, {"k", f.k}, {"prime", f.prime}, {"sets", f.sets}};
}

json to_json(const UniversalityReport& r) {
    json j{{"s", r.s},
           {"mode", r.exhaustive ? "exhaustive" : "sampled"},
           {"checked", r.checked},
           {"misses", r.misses},
           {"seed", r.seed},
           {"attempt", r.attempt}};
    if (std::isnan(r.theoretical_bound))
        j["theoretical_bound"] = nullptr;
    else
        j["theoretical_bound"] = r.theoretical_bound;
    return j;
}

json to_json(const SubsetWitness& w) { return json{{"size", w.size}, {"witness", w.witness}}; }

json to_json(const MetricViolation& v) {
    return json{{"kind", v.kind}, {"i", v.i}, {"j", v.j}, {"k", v.k}, {"message", v.describe()}};
}

std::vector<std::vector<double>> real_matrix_from_json(const json& d) {
    if (!d.is_array()) fail("BadFormat", "'d' must be an array of rows");
    std::vector<std::vector<double>> out;
    for (const auto& row : d) {
        if (!row.is_array()) fail("BadFormat", "'d' rows must be arrays");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) fail("BadFormat", "real metric entries must be numbers");
            r.push_back(v.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<Rational>> rational_matrix_from_json(const json& d) {
    if (!d.is_array()) fail("BadFormat", "'d' must be an array of rows");
    std::vector<std::vector<Rational>> out;
    for (const auto& row : d) {
        if (!row.is_array()) fail("BadFormat", "'d' rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) {
            if (v.is_string())
                r.push_back(rational_from_string(v.get<std::string>()));
            else if (v.is_number_integer())
                r.push_back(rational_from_string(std::to_string(v.get<long long>())));
            else
                fail("BadFormat", "rational entries must be strings like \"p/q\"");
        }
        out.push_back(std::move(r));
    }
    return out;
}

AnyMetric metric_from_json(const json& j) {
    if (!j.contains("kind") || !j.contains("d")) fail("BadFormat", "metric needs 'kind' and 'd'");
    const std::string kind = j.at("kind").get<std::string>();
    if (j.contains("n") && j.at("n").get<size_t>() != j.at("d").size())
        fail("BadFormat", "'n' disagrees with the matrix size");
    if (kind == "real") {
        return make_metric(real_matrix_from_json(j.at("d")),
                           j.value("label", std::string{}));
    }
    if (kind == "rational") {
        return make_metric(rational_matrix_from_json(j.at("d")),
                           j.value("label", std::string{}));
    }
    fail("BadFormat", "unknown metric kind '" + kind + "'");
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) fail("BadFormat", "graph needs 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail("BadFormat", "edges must be [i, j] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

PointSet point_set_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("points"))
        fail("BadFormat", "point set needs 'p' and 'points'");
    PointSet ps;
    ps.p = j.at("p").get<double>();
    ps.points = j.at("points").get<std::vector<std::vector<double>>>();
    if (!ps.points.empty()) {
        const size_t dim = ps.points.front().size();
        for (const auto& pt : ps.points)
            if (pt.size() != dim) fail("DimensionMismatch", "points of unequal dimension");
    }
    return ps;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open " + path.string());
    json j;
    in >> j;
    return j;
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail("IoError", "cannot write " + tmp.string());
        out << dump_json(j);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace metra
