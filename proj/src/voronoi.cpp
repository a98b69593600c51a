#include "packingcell/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace packingcell {

std::string facet_class_name(FacetClass c) {
    switch (c) {
        case FacetClass::Rhombus: return "rhombus";
        case FacetClass::RegularPentagon: return "regular-pentagon";
        case FacetClass::OtherQuad: return "other-quad";
        case FacetClass::Other: return "other";
    }
    return "other";
}

namespace {

// Bisector cell of the origin against `neighbors` (no distance check).
ConvexPolyhedron bisector_cell(const std::vector<Vector3>& neighbors) {
    std::vector<Halfspace> hs;
    hs.reserve(neighbors.size());
    for (const auto& q : neighbors) {
        const double len = q.norm();
        if (len < kEps) throw DegenerateInput("voronoi_cell: neighbor coincides with center");
        hs.emplace_back(q / len, len / 2.0);
    }
    return halfspace_intersection(hs, Vector3{});
}

ConvexPolyhedron lattice_cell(const Lattice& L) {
    // Shell stabilization: enlarge the coefficient box until one further
    // shell leaves the volume unchanged.
    double prev = -1.0;
    ConvexPolyhedron cell;
    for (int R = 1; R <= 12; ++R) {
        std::vector<Vector3> neighbors;
        for (int z1 = -R; z1 <= R; ++z1)
            for (int z2 = -R; z2 <= R; ++z2)
                for (int z3 = -R; z3 <= R; ++z3) {
                    if (z1 == 0 && z2 == 0 && z3 == 0) continue;
                    neighbors.push_back(L.point(z1, z2, z3));
                }
        ConvexPolyhedron candidate;
        try {
            candidate = bisector_cell(neighbors);
        } catch (const Unbounded&) {
            continue;  // box too small to close the cell yet
        }
        const double vol = polyhedron_volume(candidate);
        if (prev >= 0.0 && std::abs(vol - prev) <= kAlgebraEps) return candidate;
        prev = vol;
        cell = candidate;
    }
    throw Unbounded("voronoi_cell_lattice: cell volume did not stabilize");
}

}  // namespace

ConvexPolyhedron voronoi_cell(const Vector3& center, const std::vector<Vector3>& others) {
    if (others.empty()) throw DegenerateInput("voronoi_cell: no other centers");
    std::vector<Vector3> rel;
    rel.reserve(others.size());
    for (const auto& p : others) {
        const Vector3 q = p - center;
        if (q.norm() < 2.0 - kEps)
            throw OverlappingSpheres("voronoi_cell: neighbor closer than 2");
        rel.push_back(q);
    }
    ConvexPolyhedron cell = bisector_cell(rel);
    for (auto& v : cell.vertices) v = v + center;
    return cell;
}

ConvexPolyhedron voronoi_cell_lattice(const Lattice& L) {
    if (shortest_vector_norm(L) < 2.0 - kEps)
        throw OverlappingSpheres("voronoi_cell_lattice: shortest lattice vector < 2");
    return lattice_cell(L);
}

ConvexPolyhedron brillouin_zone(const Lattice& L) {
    return lattice_cell(reciprocal_lattice(L));
}

namespace {

FacetClass classify_one(const ConvexPolyhedron& P, const std::vector<int>& cyc) {
    const std::size_t n = cyc.size();
    std::vector<double> edges(n);
    for (std::size_t i = 0; i < n; ++i)
        edges[i] = (P.vertices[cyc[(i + 1) % n]] - P.vertices[cyc[i]]).norm();
    const auto [emin, emax] = std::minmax_element(edges.begin(), edges.end());
    const bool equilateral = (*emax - *emin) <= kEps;

    if (n == 4) return equilateral ? FacetClass::Rhombus : FacetClass::OtherQuad;
    if (n == 5 && equilateral) {
        std::vector<double> angles(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vector3& v = P.vertices[cyc[i]];
            const Vector3 u = (P.vertices[cyc[(i + 1) % n]] - v).normalized();
            const Vector3 w = (P.vertices[cyc[(i + n - 1) % n]] - v).normalized();
            angles[i] = std::acos(std::clamp(u.dot(w), -1.0, 1.0));
        }
        const auto [amin, amax] = std::minmax_element(angles.begin(), angles.end());
        if (*amax - *amin <= kEps) return FacetClass::RegularPentagon;
    }
    return FacetClass::Other;
}

}  // namespace

CellReport classify_facets(const ConvexPolyhedron& P, const Vector3& center) {
    CellReport r;
    r.cell = P;
    r.volume = polyhedron_volume(P);
    r.inradius = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < P.face_count(); ++f) {
        const double slack = -P.face_plane(f).signed_distance(center);
        if (slack <= kEps) throw CenterOutside("classify_facets: center not strictly interior");
        r.inradius = std::min(r.inradius, slack);
    }
    r.circumradius = 0.0;
    for (const auto& v : P.vertices) r.circumradius = std::max(r.circumradius, (v - center).norm());
    r.facet_count = static_cast<int>(P.face_count());
    for (const auto& cyc : P.faces) ++r.facet_classes[classify_one(P, cyc)];
    return r;
}

}  // namespace packingcell
