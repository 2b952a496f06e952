#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "metra/bounds.hpp"
#include "metra/distortion.hpp"
#include "metra/embeddings.hpp"
#include "metra/graph.hpp"
#include "metra/hardness.hpp"
#include "metra/metric_space.hpp"
#include "metra/point_set.hpp"
#include "metra/ramsey.hpp"

namespace metra {

using nlohmann::json;

// Interchange formats:
//   metric: {"kind":"real"|"rational", "n":N, "d":[[...]]}
//           rational entries are lowest-terms strings "p/q" (or "k")
//   graph:  {"n":N, "edges":[[i,j],...]}  0-based vertices
//   points: {"p":x, "points":[[...],...]}

json to_json(const MetricSpace& m);
json to_json(const RationalMetricSpace& m);
json to_json(const AnyMetric& m);
json to_json(const Graph& g);
json to_json(const PointSet& ps);
json to_json(const DistortionReport& r);
json to_json(const RoundnessReport& r);
json to_json(const SchoenbergCertificate& c);
json to_json(const QuadrupleScan& r);
json to_json(const SetFamily& f);
json to_json(const UniversalityReport& r);
json to_json(const SubsetWitness& w);

AnyMetric metric_from_json(const json& j);
Graph graph_from_json(const json& j);
PointSet point_set_from_json(const json& j);

/// Raw matrix parsers (no metric validation) plus the violation encoding,
/// for callers that want to report validation failures structurally.
std::vector<std::vector<double>> real_matrix_from_json(const json& d);
std::vector<std::vector<Rational>> rational_matrix_from_json(const json& d);
json to_json(const MetricViolation& v);

std::string dump_json(const json& j);  // 2-space indent + trailing newline

json read_json_file(const std::filesystem::path& path);
/// Writes via a temporary file in the same directory, then renames.
void write_json_atomic(const std::filesystem::path& path, const json& j);

}  // namespace metra
