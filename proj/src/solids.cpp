#include "packingcell/solids.hpp"

#include <algorithm>
#include <cmath>

#include "packingcell/lattice.hpp"
#include "packingcell/voronoi.hpp"

namespace packingcell {

namespace {

void require_positive(double a, const char* who) {
    if (!(a > 0.0)) throw NonPositiveEdge(std::string(who) + ": argument must be > 0");
}

}  // namespace

SphereConfiguration::SphereConfiguration(std::vector<Vector3> centers_)
    : centers(std::move(centers_)) {
    if (centers.size() < 2)
        throw DegenerateInput("SphereConfiguration: need a central sphere and neighbors");
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if ((centers[i] - centers[j]).norm() < 2.0 - kEps)
                throw OverlappingSpheres("SphereConfiguration: centers closer than 2");
}

double dodecahedron_volume(double a) {
    require_positive(a, "dodecahedron_volume");
    return a * a * a / 4.0 * (15.0 + 7.0 * std::sqrt(5.0));
}

double dodecahedron_inradius(double a) {
    require_positive(a, "dodecahedron_inradius");
    return a / 2.0 * std::sqrt((25.0 + 11.0 * std::sqrt(5.0)) / 10.0);
}

double dodecahedron_edge_from_inradius(double rho) {
    require_positive(rho, "dodecahedron_edge_from_inradius");
    return 2.0 * rho / std::sqrt((25.0 + 11.0 * std::sqrt(5.0)) / 10.0);
}

double icosahedron_circumradius(double a) {
    require_positive(a, "icosahedron_circumradius");
    return a / 4.0 * std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
}

double icosahedron_inradius(double a) {
    require_positive(a, "icosahedron_inradius");
    return a / 12.0 * std::sqrt(3.0) * (3.0 + std::sqrt(5.0));
}

namespace {

// Vertices of the regular icosahedron with circumradius r, in the
// golden-ratio orientation.
std::vector<Vector3> icosahedron_vertices(double r) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = r / std::sqrt(1.0 + phi * phi);
    std::vector<Vector3> v;
    for (double u : {-1.0, 1.0})
        for (double w : {-phi, phi}) {
            v.push_back(Vector3{0, u, w} * s);
            v.push_back(Vector3{u, w, 0} * s);
            v.push_back(Vector3{w, 0, u} * s);
        }
    return v;
}

}  // namespace

SphereConfiguration icosahedral_configuration() {
    std::vector<Vector3> centers{Vector3{}};
    auto outer = icosahedron_vertices(2.0);
    std::sort(outer.begin(), outer.end(), lex_less);
    centers.insert(centers.end(), outer.begin(), outer.end());
    return SphereConfiguration(std::move(centers));
}

SphereConfiguration fcc_kissing_configuration() {
    const Lattice L = lattice_fcc();
    std::vector<Vector3> centers{Vector3{}};
    for (int z1 = -1; z1 <= 1; ++z1)
        for (int z2 = -1; z2 <= 1; ++z2)
            for (int z3 = -1; z3 <= 1; ++z3) {
                if (z1 == 0 && z2 == 0 && z3 == 0) continue;
                const Vector3 p = L.point(z1, z2, z3);
                if (std::abs(p.norm() - 2.0) <= kEps) centers.push_back(p);
            }
    std::sort(centers.begin() + 1, centers.end(), lex_less);
    return SphereConfiguration(std::move(centers));
}

TetrahedronMetrics icosahedral_tetrahedron() {
    const auto config = icosahedral_configuration();
    const auto outer = config.surrounding();

    // Base: a face of the icosahedron, i.e. a pairwise-nearest vertex
    // triple. Vertices are lex-sorted, so the first triple found is the
    // lexicographically smallest face.
    const double edge = 8.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
    std::array<Vector3, 3> base{};
    bool found = false;
    for (std::size_t i = 0; i < outer.size() && !found; ++i)
        for (std::size_t j = i + 1; j < outer.size() && !found; ++j)
            for (std::size_t k = j + 1; k < outer.size() && !found; ++k)
                if (std::abs((outer[i] - outer[j]).norm() - edge) <= kEps &&
                    std::abs((outer[i] - outer[k]).norm() - edge) <= kEps &&
                    std::abs((outer[j] - outer[k]).norm() - edge) <= kEps) {
                    base = {outer[i], outer[j], outer[k]};
                    found = true;
                }
    if (!found) throw DegenerateInput("icosahedral_tetrahedron: no face triple found");

    TetrahedronMetrics m;
    m.base_edge = edge;
    m.base_area = std::sqrt(3.0) / 4.0 * edge * edge;
    // Height of the apex (the origin) above the base plane; equals the
    // icosahedron inradius.
    const Vector3 n = (base[1] - base[0]).cross(base[2] - base[0]).normalized();
    m.height = std::abs(n.dot(base[0]));
    if (std::abs(m.height - icosahedron_inradius(edge)) > kAlgebraEps)
        throw DegenerateInput("icosahedral_tetrahedron: height != icosahedron inradius");
    m.volume = m.base_area * m.height / 3.0;
    return m;
}

TetrahedronMetrics regular_tetrahedron_metrics(double a) {
    require_positive(a, "regular_tetrahedron_metrics");
    TetrahedronMetrics m;
    m.base_edge = a;
    m.base_area = std::sqrt(3.0) / 4.0 * a * a;
    m.height = a * std::sqrt(6.0) / 3.0;
    m.volume = m.base_area * m.height / 3.0;
    return m;
}

double local_density(const SphereConfiguration& config) {
    const ConvexPolyhedron cell = voronoi_cell(config.central(), config.surrounding());
    return (4.0 * M_PI / 3.0) / polyhedron_volume(cell);
}

}  // namespace packingcell
