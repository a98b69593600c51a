// Acceptance suite: one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "packingcell/lattice.hpp"
#include "packingcell/oracle.hpp"
#include "packingcell/report.hpp"
#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

using namespace packingcell;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass) {
    std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, name.c_str());
    if (!pass) ++failures;
}

bool near(double value, double reference, double tol) {
    return std::abs(value - reference) <= tol;
}

Lattice catalog_entry(const std::string& name) {
    for (auto& [n, L] : lattice_catalog())
        if (n == name) return L;
    throw std::runtime_error("missing catalog entry " + name);
}

Aabb bounding_box(const ConvexPolyhedron& P, double pad) {
    Vector3 lo = P.vertices.front(), hi = lo;
    for (const auto& v : P.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    return {lo - Vector3{pad, pad, pad}, hi + Vector3{pad, pad, pad}};
}

}  // namespace

int main() {
    const double r2 = std::sqrt(2.0);
    const Lattice fcc = lattice_fcc();
    const Lattice fpii({2, 0, 0}, {0, 2, 0}, {1, 1, r2});

    // 1. both fundamental parallelepipeds have volume 4*sqrt(2)
    {
        const double v1 = polyhedron_volume(fundamental_parallelepiped(fcc));
        const double v2 = polyhedron_volume(fundamental_parallelepiped(fpii));
        criterion(1, "v(FPI) = v(FPII) = 4*sqrt(2)",
                  near(v1, 5.656854, 1e-6) && near(v1, 4 * r2, 1e-9) &&
                      near(v2, 4 * r2, 1e-9) && near(v1 - v2, 0.0, 1e-9));
    }

    // 2. fcc tessellation: 2 regular + 4 octahedral, equal volumes
    {
        const auto tets = tessellation_tetrahedra(fcc);
        int regular = 0, octahedral = 0;
        bool volumes_ok = tets.size() == 6;
        double sum = 0.0;
        for (const auto& t : tets) {
            regular += t.kind == TetKind::Regular;
            octahedral += t.kind == TetKind::Octahedral;
            volumes_ok = volumes_ok && near(t.volume(), 0.942809, 1e-6) &&
                         near(t.volume(), 4 * r2 / 6, 1e-9);
            sum += t.volume();
        }
        criterion(2, "fcc tessellation: 2 regular + 4 octahedral of volume 0.942809",
                  regular == 2 && octahedral == 4 && volumes_ok &&
                      near(sum, std::abs(fcc.det()), 1e-9));
    }

    // 3. fcc Voronoi cell: rhombic dodecahedron
    {
        const auto cell = voronoi_cell_lattice(fcc);
        const auto rep = classify_facets(cell, {0, 0, 0});
        criterion(3, "fcc Voronoi cell: 12 rhombi, volume 5.656854, inradius 1",
                  rep.facet_count == 12 &&
                      rep.facet_classes.count(FacetClass::Rhombus) &&
                      rep.facet_classes.at(FacetClass::Rhombus) == 12 &&
                      near(rep.volume, 5.656854, 1e-6) &&
                      near(rep.volume, 4 * r2, 1e-9) &&
                      near(rep.inradius, 1.0, 1e-12));
    }

    // 4. dodecahedral Voronoi cell of the icosahedral configuration
    {
        const auto ico = icosahedral_configuration();
        const auto cell = voronoi_cell(ico.central(), ico.surrounding());
        const auto rep = classify_facets(cell, ico.central());
        const double s5 = std::sqrt(5.0);
        const double closed_form =
            2.0 * (15 + 7 * s5) / std::pow((25 + 11 * s5) / 10, 1.5);
        criterion(4, "dodecahedral cell: 12 regular pentagons, inradius 1, volume 5.550292",
                  rep.facet_count == 12 &&
                      rep.facet_classes.count(FacetClass::RegularPentagon) &&
                      rep.facet_classes.at(FacetClass::RegularPentagon) == 12 &&
                      near(rep.inradius, 1.0, 1e-9) &&
                      near(rep.volume, closed_form, 1e-6) &&
                      near(closed_form, 5.550292, 1e-6));
    }

    // 5. densities
    {
        const auto ico = icosahedral_configuration();
        criterion(5, "densities: fcc 0.740480, dodecahedral 0.754697",
                  near(packing_density(fcc), 0.740480, 1e-6) &&
                      near(local_density(ico), 0.754697, 1e-6));
    }

    // 6. icosahedral tetrahedron metrics and the strict inequality
    {
        const auto m = icosahedral_tetrahedron();
        const auto reg = regular_tetrahedron_metrics(2.0);
        criterion(6, "icosahedral tetrahedron: a, h, A, V and V_ico > V_reg by > 0.07",
                  near(m.base_edge, 2.102924, 1e-5) &&
                      near(m.height, 1.589309, 1e-5) &&
                      near(m.base_area, 1.914910, 1e-5) &&
                      near(m.volume, 1.014460, 1e-5) &&
                      m.volume > reg.volume && (m.volume - reg.volume) > 0.07);
    }

    // 7. ratio bounds
    {
        const auto m = icosahedral_tetrahedron();
        const auto reg = regular_tetrahedron_metrics(2.0);
        criterion(7, "base area > 10% larger, height < 3% smaller",
                  m.base_area / reg.base_area > 1.10 &&
                      (reg.height - m.height) < 0.03 * reg.height);
    }

    // 8. coverage ordering, Monte-Carlo confirmation, conservation
    {
        const auto tets = tessellation_tetrahedra(fcc);
        double cov_regular = 0.0, cov_octahedral = 0.0;
        double conservation = 0.0;
        bool mc_ok = true;
        bool mc_done_regular = false, mc_done_octahedral = false;
        std::uint64_t seed = 8001;
        for (const auto& t : tets) {
            const double cov = tetrahedron_sphere_coverage(t);
            conservation += cov * t.volume();
            if (t.kind == TetKind::Regular && !mc_done_regular) {
                cov_regular = cov;
                mc_ok = mc_ok && within_sigmas(mc_sphere_coverage(t, 10000000, seed++), cov);
                mc_done_regular = true;
            }
            if (t.kind == TetKind::Octahedral && !mc_done_octahedral) {
                cov_octahedral = cov;
                mc_ok = mc_ok && within_sigmas(mc_sphere_coverage(t, 10000000, seed++), cov);
                mc_done_octahedral = true;
            }
        }
        criterion(8, "coverage(TIII) > coverage(TIV), MC-confirmed, sums to one sphere",
                  cov_regular > cov_octahedral && mc_ok &&
                      near(conservation, 4 * M_PI / 3, 1e-6));
    }

    // 9. Brillouin zones and reciprocal involution
    {
        const auto sc_zone = brillouin_zone(catalog_entry("sc"));
        const auto bcc_zone = brillouin_zone(catalog_entry("bcc"));
        const auto bcc_rep = classify_facets(bcc_zone, {0, 0, 0});
        bool involution = true;
        for (const auto& [name, L] : lattice_catalog()) {
            const Lattice back = reciprocal_lattice(reciprocal_lattice(L));
            involution = involution && (back.a1 - L.a1).norm() <= 1e-12 &&
                         (back.a2 - L.a2).norm() <= 1e-12 &&
                         (back.a3 - L.a3).norm() <= 1e-12;
        }
        criterion(9, "Brillouin zones: sc cube, bcc rhombic dodecahedron, involution",
                  sc_zone.face_count() == 6 && bcc_rep.facet_count == 12 &&
                      bcc_rep.facet_classes.count(FacetClass::Rhombus) &&
                      bcc_rep.facet_classes.at(FacetClass::Rhombus) == 12 && involution);
    }

    // 10. fcc maximizes density over the catalog and 100 random lattices
    {
        const double fcc_density = packing_density(fcc);
        bool max_ok = near(fcc_density, M_PI / (3 * r2), 1e-12);
        for (const auto& [name, L] : lattice_catalog())
            max_ok = max_ok && packing_density(L) <= fcc_density + 1e-12;
        for (std::uint64_t seed = 0; seed < 100 && max_ok; ++seed)
            max_ok = max_ok && packing_density(random_packing_lattice(seed)) <=
                                   fcc_density + 1e-12;
        criterion(10, "fcc attains the maximum density pi/(3*sqrt(2)) over the catalog",
                  max_ok);
    }

    // 11. oracle suite at 10^6 samples, byte-identical across runs
    {
        auto cell_mc = [&](const std::vector<Vector3>& neighbors,
                           const ConvexPolyhedron& cell, std::uint64_t seed) {
            auto member = [&neighbors](const Vector3& p) {
                const double d2 = p.norm2();
                for (const auto& q : neighbors)
                    if ((p - q).norm2() < d2) return false;
                return true;
            };
            return within_sigmas(
                mc_volume_membership(member, bounding_box(cell, 0.1), 1000000, seed),
                polyhedron_volume(cell));
        };

        bool ok = true;
        // parallelepipeds (criterion 1) via basis-coefficient membership
        for (const Lattice& L : {fcc, fpii}) {
            const auto fp = fundamental_parallelepiped(L);
            const Lattice dual = reciprocal_lattice(L);
            auto member = [&dual](const Vector3& p) {
                for (const auto& b : {dual.a1, dual.a2, dual.a3}) {
                    const double lambda = b.dot(p);
                    if (lambda < 0.0 || lambda > 1.0) return false;
                }
                return true;
            };
            ok = ok && within_sigmas(mc_volume_membership(member, bounding_box(fp, 0.1),
                                                          1000000, 11001),
                                     polyhedron_volume(fp));
        }
        // cells (criteria 2-4)
        {
            std::vector<Vector3> neighbors;
            for (int z1 = -2; z1 <= 2; ++z1)
                for (int z2 = -2; z2 <= 2; ++z2)
                    for (int z3 = -2; z3 <= 2; ++z3)
                        if (z1 || z2 || z3) neighbors.push_back(fcc.point(z1, z2, z3));
            ok = ok && cell_mc(neighbors, voronoi_cell_lattice(fcc), 11002);
        }
        {
            const auto ico = icosahedral_configuration();
            ok = ok && cell_mc(ico.surrounding(),
                               voronoi_cell(ico.central(), ico.surrounding()), 11003);
        }
        bool ok_a = false, ok_b = false;
        const std::string run_a = run_verify(1000000, 42, ok_a);
        const std::string run_b = run_verify(1000000, 42, ok_b);
        criterion(11, "oracle confirms all constructed volumes; verify is byte-identical",
                  ok && ok_a && ok_b && run_a == run_b);
    }

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
