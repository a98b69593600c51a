#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "packingcell/oracle.hpp"
#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

using namespace packingcell;

namespace {

bool in_unit_cube(const Vector3& p) {
    return std::abs(p.x) <= 0.5 && std::abs(p.y) <= 0.5 && std::abs(p.z) <= 0.5;
}

}  // namespace

TEST_CASE("volume of the unit cube") {
    const Aabb box{{-1, -1, -1}, {1, 1, 1}};
    const auto est = mc_volume_membership(in_unit_cube, box, 1000000, 1);
    CHECK(within_sigmas(est, 1.0));
    CHECK(est.samples == 1000000);
    CHECK(est.seed == 1);
    CHECK(est.std_error > 0.0);
}

TEST_CASE("determinism: identical inputs give bit-identical estimates") {
    const Aabb box{{-1, -1, -1}, {1, 1, 1}};
    const auto a = mc_volume_membership(in_unit_cube, box, 200000, 123);
    const auto b = mc_volume_membership(in_unit_cube, box, 200000, 123);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    const auto tets = tessellation_tetrahedra(lattice_fcc());
    const auto c = mc_sphere_coverage(tets[0], 100000, 9);
    const auto d = mc_sphere_coverage(tets[0], 100000, 9);
    CHECK(c.mean == d.mean);
    CHECK(c.std_error == d.std_error);
}

TEST_CASE("doubling samples shrinks the standard error by sqrt(2)") {
    const Aabb box{{-1, -1, -1}, {1, 1, 1}};
    const auto small = mc_volume_membership(in_unit_cube, box, 500000, 5);
    const auto large = mc_volume_membership(in_unit_cube, box, 1000000, 5);
    CHECK(small.std_error / large.std_error ==
          doctest::Approx(std::sqrt(2.0)).epsilon(0.01));
}

TEST_CASE("preconditions") {
    const Aabb box{{-1, -1, -1}, {1, 1, 1}};
    CHECK_THROWS_AS(mc_volume_membership(in_unit_cube, box, 100, 1),
                    std::invalid_argument);
    const Aabb flat{{-1, -1, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(mc_volume_membership(in_unit_cube, flat, 100000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(mc_sphere_coverage(tessellation_tetrahedra(lattice_fcc())[0], 10, 1),
                    std::invalid_argument);
}

TEST_CASE("membership oracle confirms the dodecahedral and fcc cell volumes") {
    const auto ico = icosahedral_configuration();
    auto dodeca_member = [outer = ico.surrounding()](const Vector3& p) {
        const double d2 = p.norm2();
        for (const auto& q : outer)
            if ((p - q).norm2() < d2) return false;
        return true;
    };
    const Aabb box{{-1.3, -1.3, -1.3}, {1.3, 1.3, 1.3}};
    const auto est = mc_volume_membership(dodeca_member, box, 1000000, 2024);
    CHECK(within_sigmas(est, 5.5502910285155103));

    const auto fcc = fcc_kissing_configuration();
    // the finite kissing shell alone already cuts out the rhombic dodecahedron
    auto fcc_member = [outer = fcc.surrounding()](const Vector3& p) {
        const double d2 = p.norm2();
        for (const auto& q : outer)
            if ((p - q).norm2() < d2) return false;
        return true;
    };
    const Aabb box2{{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}};
    const auto est2 = mc_volume_membership(fcc_member, box2, 1000000, 2025);
    CHECK(within_sigmas(est2, 4 * std::sqrt(2.0)));
}

TEST_CASE("coverage oracle matches the solid-angle computation") {
    const auto tets = tessellation_tetrahedra(lattice_fcc());
    for (const auto& t : tets) {
        const auto est = mc_sphere_coverage(t, 500000, 31);
        CHECK(within_sigmas(est, tetrahedron_sphere_coverage(t)));
    }
}

TEST_CASE("within_sigmas bands") {
    McEstimate e;
    e.mean = 1.0;
    e.std_error = 0.01;
    CHECK(within_sigmas(e, 1.03));
    CHECK(!within_sigmas(e, 1.05));
    CHECK(within_sigmas(e, 1.015, 2.0));
}
