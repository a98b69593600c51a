#pragma once

#include <cstdint>
#include <functional>

#include "packingcell/geom3.hpp"
#include "packingcell/lattice.hpp"

namespace packingcell {

// Monte-Carlo estimate with its one-sigma standard error.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Axis-aligned sampling box.
struct Aabb {
    Vector3 lo, hi;
};

// Volume of { p : predicate(p) } inside `box` by uniform rejection sampling.
// Counter-based splitmix64 streams make the result a pure function of
// (predicate, box, samples, seed), identical under any parallel split.
McEstimate mc_volume_membership(const std::function<bool(const Vector3&)>& predicate,
                                const Aabb& box, std::uint64_t samples,
                                std::uint64_t seed);

// Fraction of T within distance 1 of some vertex, sampling uniformly inside
// the tetrahedron via sorted-uniform barycentric weights.
McEstimate mc_sphere_coverage(const TessellationTetrahedron& T, std::uint64_t samples,
                              std::uint64_t seed);

// |estimate.mean - reference| <= sigmas * estimate.std_error
bool within_sigmas(const McEstimate& estimate, double reference, double sigmas = 4.0);

}  // namespace packingcell
