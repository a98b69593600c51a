#pragma once

#include <stdexcept>
#include <string>

namespace packingcell {

// Input is affinely dependent (collinear/coplanar) or otherwise too
// degenerate to produce a valid polyhedron.
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// A halfspace intersection has a recession direction.
struct Unbounded : std::runtime_error {
    explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};

// The supplied interior point violates a constraint.
struct InfeasibleInterior : std::runtime_error {
    explicit InfeasibleInterior(const std::string& what) : std::runtime_error(what) {}
};

// A configuration or lattice places unit spheres closer than touching distance.
struct OverlappingSpheres : std::runtime_error {
    explicit OverlappingSpheres(const std::string& what) : std::runtime_error(what) {}
};

// A tetrahedron edge is shorter than the touching distance 2.
struct EdgeTooShort : std::runtime_error {
    explicit EdgeTooShort(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form solid metrics require a positive edge length.
struct NonPositiveEdge : std::invalid_argument {
    explicit NonPositiveEdge(const std::string& what) : std::invalid_argument(what) {}
};

// classify_facets was handed a center outside the cell.
struct CenterOutside : std::runtime_error {
    explicit CenterOutside(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace packingcell
