#pragma once

#include <vector>

#include "packingcell/geom3.hpp"

namespace packingcell {

// Finite set of unit-sphere centers; centers[0] is the distinguished
// central sphere. Construction rejects pairwise distances < 2 - kEps.
struct SphereConfiguration {
    std::vector<Vector3> centers;

    explicit SphereConfiguration(std::vector<Vector3> centers_);

    const Vector3& central() const { return centers[0]; }
    std::vector<Vector3> surrounding() const {
        return {centers.begin() + 1, centers.end()};
    }
};

// Base edge / base area / height / volume of a tetrahedron with
// V = A*h/3 by construction.
struct TetrahedronMetrics {
    double base_edge = 0.0;
    double base_area = 0.0;
    double height = 0.0;
    double volume = 0.0;
};

// v = (a^3/4)(15 + 7*sqrt(5))
double dodecahedron_volume(double a);
// rho = (a/2) * sqrt((25 + 11*sqrt(5)) / 10)
double dodecahedron_inradius(double a);
double dodecahedron_edge_from_inradius(double rho);

// R = (a/4) * sqrt(10 + 2*sqrt(5))
double icosahedron_circumradius(double a);
// rho = (a/12) * sqrt(3) * (3 + sqrt(5))
double icosahedron_inradius(double a);

// Central sphere plus 12 spheres at the vertices of a regular icosahedron
// of circumradius 2 (golden-ratio coordinates (0, +-1, +-phi) and cyclic
// permutations, rescaled). The 1-5-5-1 kissing arrangement.
SphereConfiguration icosahedral_configuration();

// Central sphere plus the 12 shortest fcc lattice vectors (3-6-3 scheme,
// all neighbors touching).
SphereConfiguration fcc_kissing_configuration();

// Tetrahedron with apex at the central sphere and base a face of the
// icosahedral configuration; the shape whose volume exceeds the fcc
// tessellation tetrahedron's.
TetrahedronMetrics icosahedral_tetrahedron();

// Regular tetrahedron of edge a: A = (sqrt(3)/4)a^2, h = a*sqrt(6)/3,
// V = a^3 / (6*sqrt(2)).
TetrahedronMetrics regular_tetrahedron_metrics(double a);

// Sphere volume over the Voronoi-cell volume of the central sphere.
double local_density(const SphereConfiguration& config);

}  // namespace packingcell
