#pragma once

#include <map>
#include <string>
#include <vector>

#include "packingcell/geom3.hpp"
#include "packingcell/lattice.hpp"

namespace packingcell {

enum class FacetClass { Rhombus, RegularPentagon, OtherQuad, Other };

std::string facet_class_name(FacetClass c);

// Metrics of a cell about its defining center. Note the taxonomy: a square
// facet has four equal edges and therefore counts as a rhombus.
struct CellReport {
    ConvexPolyhedron cell;
    double volume = 0.0;
    double inradius = 0.0;      // min facet-plane distance from the center
    double circumradius = 0.0;  // max vertex distance from the center
    int facet_count = 0;
    std::map<FacetClass, int> facet_classes;
};

// Voronoi cell of `center` against a finite set of other sphere centers:
// the intersection of the perpendicular-bisector halfspaces. Throws
// OverlappingSpheres if some other point is closer than 2 - kEps, and
// propagates Unbounded / InfeasibleInterior from the intersection.
ConvexPolyhedron voronoi_cell(const Vector3& center, const std::vector<Vector3>& others);

// Voronoi cell of the origin in the lattice packing L + K. Neighbor shells
// grow until one further shell leaves the cell volume unchanged within
// kAlgebraEps. Requires shortest_vector_norm(L) >= 2 - kEps.
ConvexPolyhedron voronoi_cell_lattice(const Lattice& L);

// Voronoi cell of the origin in the reciprocal lattice. No packing-validity
// requirement (Brillouin zones exist for any lattice).
ConvexPolyhedron brillouin_zone(const Lattice& L);

// Facet classification and cell metrics. Throws CenterOutside if `center`
// is not strictly interior.
CellReport classify_facets(const ConvexPolyhedron& P, const Vector3& center);

}  // namespace packingcell
