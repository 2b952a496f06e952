#include "metra/distortion.hpp"

#include <numeric>

#include "metra/errors.hpp"

namespace metra {

DistortionReport distortion(const MetricSpace& source, const PointSet& image,
                            const std::vector<int>& correspondence) {
    const int n = source.size();
    if (static_cast<int>(correspondence.size()) != n || image.size() != n)
        fail("NotBijective", "correspondence must be a bijection onto the image points");
    std::vector<bool> hit(n, false);
    for (int t : correspondence) {
        if (t < 0 || t >= n || hit[t]) fail("NotBijective", "correspondence is not a bijection");
        hit[t] = true;
    }
    if (n < 2) fail("InvalidSize", "distortion needs at least two points");

    DistortionReport r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double src = source(i, j);
            const double img =
                lp_distance(image.points[correspondence[i]], image.points[correspondence[j]], image.p);
            if (img == 0.0)
                fail("ZeroImageDistance", "image points of " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
            const double expand = img / src;
            const double contract = src / img;
            if (expand > r.expansion) {
                r.expansion = expand;
                r.expansion_pair = {i, j};
            }
            if (contract > r.contraction) {
                r.contraction = contract;
                r.contraction_pair = {i, j};
            }
        }
    r.distortion = r.expansion * r.contraction;
    return r;
}

DistortionReport distortion(const MetricSpace& source, const PointSet& image) {
    std::vector<int> id(source.size());
    std::iota(id.begin(), id.end(), 0);
    return distortion(source, image, id);
}

}  // namespace metra
