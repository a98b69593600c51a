#include "packingcell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "packingcell/rng.hpp"

namespace packingcell {

namespace {

constexpr std::uint64_t kMinSamples = 10000;

McEstimate from_hits(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed,
                     double scale) {
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    McEstimate e;
    e.mean = scale * p;
    e.std_error = scale * std::sqrt(p * (1.0 - p) / n);
    e.samples = samples;
    e.seed = seed;
    return e;
}

}  // namespace

McEstimate mc_volume_membership(const std::function<bool(const Vector3&)>& predicate,
                                const Aabb& box, std::uint64_t samples,
                                std::uint64_t seed) {
    if (samples < kMinSamples)
        throw std::invalid_argument("mc_volume_membership: need >= 10^4 samples");
    const Vector3 extent = box.hi - box.lo;
    if (extent.x <= 0.0 || extent.y <= 0.0 || extent.z <= 0.0)
        throw std::invalid_argument("mc_volume_membership: box must have positive extent");

    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const Vector3 p{box.lo.x + extent.x * uniform01(seed, 3 * k),
                        box.lo.y + extent.y * uniform01(seed, 3 * k + 1),
                        box.lo.z + extent.z * uniform01(seed, 3 * k + 2)};
        if (predicate(p)) ++hits;
    }
    return from_hits(hits, samples, seed, extent.x * extent.y * extent.z);
}

McEstimate mc_sphere_coverage(const TessellationTetrahedron& T, std::uint64_t samples,
                              std::uint64_t seed) {
    if (samples < kMinSamples)
        throw std::invalid_argument("mc_sphere_coverage: need >= 10^4 samples");
    const auto& v = T.vertices;

    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        double s0 = uniform01(seed, 3 * k);
        double s1 = uniform01(seed, 3 * k + 1);
        double s2 = uniform01(seed, 3 * k + 2);
        if (s0 > s1) std::swap(s0, s1);
        if (s1 > s2) std::swap(s1, s2);
        if (s0 > s1) std::swap(s0, s1);
        const double w0 = s0, w1 = s1 - s0, w2 = s2 - s1, w3 = 1.0 - s2;
        const Vector3 p = v[0] * w0 + v[1] * w1 + v[2] * w2 + v[3] * w3;
        for (int i = 0; i < 4; ++i)
            if ((p - v[i]).norm2() <= 1.0) {
                ++hits;
                break;
            }
    }
    return from_hits(hits, samples, seed, 1.0);
}

bool within_sigmas(const McEstimate& estimate, double reference, double sigmas) {
    return std::abs(estimate.mean - reference) <= sigmas * estimate.std_error;
}

}  // namespace packingcell
