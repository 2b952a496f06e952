#pragma once

#include <utility>
#include <vector>

#include "metra/metric_space.hpp"
#include "metra/point_set.hpp"

namespace metra {

/// Worst expansion and contraction of a bijective embedding, the pairs
/// realizing them, and their product. distortion >= 1 always.
struct DistortionReport {
    double expansion = 0;
    double contraction = 0;
    double distortion = 0;
    std::pair<int, int> expansion_pair{-1, -1};
    std::pair<int, int> contraction_pair{-1, -1};
};

/// correspondence[i] is the image index of source point i and must be a
/// bijection. Throws NotBijective / ZeroImageDistance.
DistortionReport distortion(const MetricSpace& source, const PointSet& image,
                            const std::vector<int>& correspondence);

/// Identity correspondence.
DistortionReport distortion(const MetricSpace& source, const PointSet& image);

}  // namespace metra
