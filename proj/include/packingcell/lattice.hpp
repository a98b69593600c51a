#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "packingcell/geom3.hpp"

namespace packingcell {

// Full-rank lattice { z1*a1 + z2*a2 + z3*a3 : z integer }.
struct Lattice {
    Vector3 a1, a2, a3;

    Lattice(const Vector3& a1_, const Vector3& a2_, const Vector3& a3_);

    double det() const { return determinant3(a1, a2, a3); }
    Vector3 point(int z1, int z2, int z3) const {
        return a1 * z1 + a2 * z2 + a3 * z3;
    }
};

enum class TetKind { Regular, Octahedral, Other };

// One member of the 6-tetrahedron decomposition of a fundamental
// parallelepiped.
struct TessellationTetrahedron {
    std::array<Vector3, 4> vertices;
    TetKind kind = TetKind::Other;

    double volume() const;
    // The six edge lengths, sorted ascending.
    std::array<double, 6> sorted_edge_lengths() const;
};

// The fcc lattice in its hexagonal-character basis:
// (r2, r2, 0), (r2, 0, r2), (0, r2, r2) with r2 = sqrt(2).
Lattice lattice_fcc();

// sc, bcc, fcc, each scaled so the shortest nonzero vector has length 2
// (unit spheres at lattice points touch).
std::vector<std::pair<std::string, Lattice>> lattice_catalog();

// Length of the shortest nonzero lattice vector, by exhaustive search over a
// coefficient box proven to contain a minimizer.
double shortest_vector_norm(const Lattice& L);

// (4*pi/3) / |det(L)|. Throws OverlappingSpheres unless the shortest vector
// has length >= 2 - kEps.
double packing_density(const Lattice& L);

// Hull of the 8 corners { sum lambda_i * a_i : lambda_i in {0,1} }.
ConvexPolyhedron fundamental_parallelepiped(const Lattice& L);

// Decomposes the fundamental parallelepiped into 6 interior-disjoint
// tetrahedra of equal volume |det(L)|/6: the two corner tetrahedra plus the
// central octahedron split along its shortest diagonal. Each is classified
// Regular (six equal edges) or Octahedral (edge multiset of the fcc
// octahedral tetrahedron, five edges 2 and one 2*sqrt(2)) or Other.
std::vector<TessellationTetrahedron> tessellation_tetrahedra(const Lattice& L);

// Fraction of the tetrahedron covered by unit spheres at its vertices,
// via vertex solid angles. Throws EdgeTooShort if any edge < 2 - kEps.
double tetrahedron_sphere_coverage(const TessellationTetrahedron& T);

// Dual basis with a_i . b_j = delta_ij (no 2*pi factor).
Lattice reciprocal_lattice(const Lattice& L);

// Reproducible random lattice: basis entries uniform in [-1,1] from a seeded
// generator, redrawn while |det| < 0.1, then rescaled so the shortest vector
// has length exactly 2.
Lattice random_packing_lattice(std::uint64_t seed);

}  // namespace packingcell
