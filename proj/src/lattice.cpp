#include "packingcell/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "packingcell/rng.hpp"

namespace packingcell {

Lattice::Lattice(const Vector3& a1_, const Vector3& a2_, const Vector3& a3_)
    : a1(a1_), a2(a2_), a3(a3_) {
    if (std::abs(det()) <= kEps)
        throw DegenerateInput("Lattice: basis is linearly dependent");
}

double TessellationTetrahedron::volume() const {
    return std::abs(determinant3(vertices[1] - vertices[0], vertices[2] - vertices[0],
                                 vertices[3] - vertices[0])) /
           6.0;
}

std::array<double, 6> TessellationTetrahedron::sorted_edge_lengths() const {
    std::array<double, 6> e{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e[k++] = (vertices[i] - vertices[j]).norm();
    std::sort(e.begin(), e.end());
    return e;
}

Lattice lattice_fcc() {
    const double r2 = std::sqrt(2.0);
    return Lattice({r2, r2, 0.0}, {r2, 0.0, r2}, {0.0, r2, r2});
}

std::vector<std::pair<std::string, Lattice>> lattice_catalog() {
    std::vector<std::pair<std::string, Lattice>> cat;
    cat.emplace_back("sc", Lattice({2, 0, 0}, {0, 2, 0}, {0, 0, 2}));
    // bcc: shortest vector is the half body diagonal; c*sqrt(3)/2 = 2.
    const double c = 4.0 / std::sqrt(3.0);
    cat.emplace_back("bcc",
                     Lattice({c, 0, 0}, {0, c, 0}, {c / 2, c / 2, c / 2}));
    cat.emplace_back("fcc", lattice_fcc());
    return cat;
}

double shortest_vector_norm(const Lattice& L) {
    // Any vector v = z1 a1 + z2 a2 + z3 a3 has z_i = v . b_i for the dual
    // basis b_i, so a minimizer (|v| <= min_i |a_i|) satisfies
    // |z_i| <= min_j |a_j| * |b_i|. That bounds the search box.
    const Lattice D = reciprocal_lattice(L);
    const double m = std::min({L.a1.norm(), L.a2.norm(), L.a3.norm()});
    const double bmax = std::max({D.a1.norm(), D.a2.norm(), D.a3.norm()});
    const int B = std::max(3, static_cast<int>(std::ceil(m * bmax)));

    double best = std::numeric_limits<double>::infinity();
    for (int z1 = -B; z1 <= B; ++z1)
        for (int z2 = -B; z2 <= B; ++z2)
            for (int z3 = -B; z3 <= B; ++z3) {
                if (z1 == 0 && z2 == 0 && z3 == 0) continue;
                best = std::min(best, L.point(z1, z2, z3).norm());
            }
    return best;
}

double packing_density(const Lattice& L) {
    if (shortest_vector_norm(L) < 2.0 - kEps)
        throw OverlappingSpheres("packing_density: shortest lattice vector < 2");
    return (4.0 * M_PI / 3.0) / std::abs(L.det());
}

ConvexPolyhedron fundamental_parallelepiped(const Lattice& L) {
    std::vector<Vector3> corners;
    for (int i = 0; i < 8; ++i)
        corners.push_back(L.a1 * (i & 1) + L.a2 * ((i >> 1) & 1) + L.a3 * ((i >> 2) & 1));
    return convex_hull(corners);
}

namespace {

TetKind classify(const TessellationTetrahedron& t) {
    const auto e = t.sorted_edge_lengths();
    if (e[5] - e[0] <= kEps) return TetKind::Regular;
    // fcc octahedral tetrahedron: five edges 2, one 2*sqrt(2)
    const std::array<double, 6> oct{2, 2, 2, 2, 2, 2 * std::sqrt(2.0)};
    bool match = true;
    for (int i = 0; i < 6; ++i)
        if (std::abs(e[i] - oct[i]) > kEps) match = false;
    return match ? TetKind::Octahedral : TetKind::Other;
}

TessellationTetrahedron make_tet(const Vector3& p0, const Vector3& p1, const Vector3& p2,
                                 const Vector3& p3) {
    TessellationTetrahedron t;
    t.vertices = {p0, p1, p2, p3};
    t.kind = classify(t);
    return t;
}

}  // namespace

std::vector<TessellationTetrahedron> tessellation_tetrahedra(const Lattice& L) {
    const std::array<Vector3, 3> a{L.a1, L.a2, L.a3};
    const Vector3 s = L.a1 + L.a2 + L.a3;

    std::vector<TessellationTetrahedron> tets;
    // Two corner tetrahedra at opposite ends of the parallelepiped.
    tets.push_back(make_tet(Vector3{}, a[0], a[1], a[2]));
    tets.push_back(make_tet(s, s - a[0], s - a[1], s - a[2]));

    // The remaining central octahedron {a_i, s - a_i} splits into four
    // tetrahedra around one of its three diagonals. The diagonal choice is
    // geometric; take the shortest (ties by index) so congruent pieces come
    // out for the fcc parallelepipeds.
    int di = 0;
    double dbest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        const double len = (s - a[i] * 2.0).norm();
        if (len < dbest - kEps) {
            dbest = len;
            di = i;
        }
    }
    const int j = (di + 1) % 3, k = (di + 2) % 3;
    const Vector3 top = a[di], bot = s - a[di];
    const std::array<Vector3, 4> ring{a[j], a[k], s - a[j], s - a[k]};
    for (int i = 0; i < 4; ++i)
        tets.push_back(make_tet(top, bot, ring[i], ring[(i + 1) % 4]));
    return tets;
}

double tetrahedron_sphere_coverage(const TessellationTetrahedron& T) {
    const auto e = T.sorted_edge_lengths();
    if (e[0] < 2.0 - kEps)
        throw EdgeTooShort("tetrahedron_sphere_coverage: edge shorter than 2");
    double omega = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto& v = T.vertices;
        omega += triangle_solid_angle(v[i], v[(i + 1) % 4], v[(i + 2) % 4], v[(i + 3) % 4]);
    }
    // (omega / 4pi) spheres of volume 4pi/3 inside volume(T)
    return omega / (3.0 * T.volume());
}

Lattice reciprocal_lattice(const Lattice& L) {
    const double d = L.det();
    return Lattice(L.a2.cross(L.a3) / d, L.a3.cross(L.a1) / d, L.a1.cross(L.a2) / d);
}

Lattice random_packing_lattice(std::uint64_t seed) {
    std::uint64_t idx = 0;
    for (;;) {
        std::array<double, 9> e{};
        for (auto& v : e) v = 2.0 * uniform01(seed, idx++) - 1.0;
        const Vector3 a1{e[0], e[1], e[2]}, a2{e[3], e[4], e[5]}, a3{e[6], e[7], e[8]};
        if (std::abs(determinant3(a1, a2, a3)) < 0.1) continue;
        const Lattice raw(a1, a2, a3);
        const double scale = 2.0 / shortest_vector_norm(raw);
        return Lattice(a1 * scale, a2 * scale, a3 * scale);
    }
}

}  // namespace packingcell
