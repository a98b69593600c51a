#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

using namespace packingcell;

TEST_CASE("dodecahedron closed forms") {
    const double s5 = std::sqrt(5.0);
    CHECK(dodecahedron_volume(1.0) == doctest::Approx((15 + 7 * s5) / 4).epsilon(1e-14));
    CHECK(dodecahedron_volume(2.0) ==
          doctest::Approx(8 * dodecahedron_volume(1.0)).epsilon(1e-14));
    CHECK(dodecahedron_volume(0.8980559531591707) ==
          doctest::Approx(5.5502910285155103).epsilon(1e-12));

    CHECK(dodecahedron_edge_from_inradius(1.0) ==
          doctest::Approx(0.8980559531591707).epsilon(1e-13));
    for (double x : {0.5, 1.0, 3.0})
        CHECK(dodecahedron_inradius(dodecahedron_edge_from_inradius(x)) ==
              doctest::Approx(x).epsilon(1e-13));
    CHECK(dodecahedron_inradius(2.0) ==
          doctest::Approx(2 * dodecahedron_inradius(1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(dodecahedron_volume(0.0), NonPositiveEdge);
    CHECK_THROWS_AS(dodecahedron_inradius(-1.0), NonPositiveEdge);
    CHECK_THROWS_AS(dodecahedron_edge_from_inradius(0.0), NonPositiveEdge);
}

TEST_CASE("icosahedron closed forms") {
    const double a = 8.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
    CHECK(icosahedron_circumradius(a) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(icosahedron_inradius(a) == doctest::Approx(1.5893089445835322).epsilon(1e-12));
    // similarity: ratio independent of scale
    CHECK(icosahedron_circumradius(1.0) / icosahedron_inradius(1.0) ==
          doctest::Approx(icosahedron_circumradius(3.7) / icosahedron_inradius(3.7))
              .epsilon(1e-13));
    CHECK_THROWS_AS(icosahedron_circumradius(0.0), NonPositiveEdge);
    CHECK_THROWS_AS(icosahedron_inradius(-2.0), NonPositiveEdge);
}

TEST_CASE("icosahedral configuration") {
    const auto config = icosahedral_configuration();
    REQUIRE(config.centers.size() == 13);
    const auto outer = config.surrounding();
    for (const auto& p : outer) CHECK(p.norm() == doctest::Approx(2.0).epsilon(1e-13));

    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (std::size_t j = i + 1; j < outer.size(); ++j)
            gap = std::min(gap, (outer[i] - outer[j]).norm());
    CHECK(gap == doctest::Approx(2.1029244484765344).epsilon(1e-12));
    // about 5% slack relative to the radius
    CHECK((gap - 2.0) / 2.0 == doctest::Approx(0.0515).epsilon(0.01));
}

TEST_CASE("fcc kissing configuration") {
    const auto config = fcc_kissing_configuration();
    REQUIRE(config.centers.size() == 13);
    const auto outer = config.surrounding();

    double min_outer = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outer.size(); ++i) {
        CHECK(outer[i].norm() == doctest::Approx(2.0).epsilon(1e-13));
        int touching = 0;
        for (std::size_t j = 0; j < outer.size(); ++j) {
            if (i == j) continue;
            const double d = (outer[i] - outer[j]).norm();
            min_outer = std::min(min_outer, d);
            if (std::abs(d - 2.0) <= 1e-9) ++touching;
        }
        CHECK(touching >= 4);
    }
    CHECK(min_outer == doctest::Approx(2.0).epsilon(1e-12));

    const double vol =
        polyhedron_volume(voronoi_cell(config.central(), config.surrounding()));
    CHECK(vol == doctest::Approx(4 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("configuration validity is enforced") {
    CHECK_THROWS_AS(SphereConfiguration({{0, 0, 0}, {1, 0, 0}}), OverlappingSpheres);
    CHECK_THROWS_AS(SphereConfiguration({{0, 0, 0}}), DegenerateInput);
}

TEST_CASE("icosahedral tetrahedron metrics") {
    const auto m = icosahedral_tetrahedron();
    CHECK(m.base_edge == doctest::Approx(2.1029244484765344).epsilon(1e-12));
    CHECK(m.base_area == doctest::Approx(1.9149082766547878).epsilon(1e-12));
    CHECK(m.height == doctest::Approx(1.5893089445835322).epsilon(1e-12));
    CHECK(m.volume == doctest::Approx(1.0144602840481638).epsilon(1e-12));
    CHECK(m.volume == doctest::Approx(m.base_area * m.height / 3).epsilon(1e-14));
}

TEST_CASE("regular tetrahedron metrics") {
    const auto m = regular_tetrahedron_metrics(2.0);
    CHECK(m.base_area == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(m.height == doctest::Approx(2 * std::sqrt(6.0) / 3).epsilon(1e-14));
    CHECK(m.volume == doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-14));
    CHECK(regular_tetrahedron_metrics(1.0).volume ==
          doctest::Approx(1 / (6 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(regular_tetrahedron_metrics(2.0).volume /
              regular_tetrahedron_metrics(1.0).volume ==
          doctest::Approx(8.0).epsilon(1e-13));
    CHECK_THROWS_AS(regular_tetrahedron_metrics(0.0), NonPositiveEdge);
}

TEST_CASE("the icosahedral tetrahedron beats the fcc tessellation tetrahedron") {
    const auto ico = icosahedral_tetrahedron();
    const auto reg = regular_tetrahedron_metrics(2.0);
    CHECK(ico.volume > reg.volume);
    CHECK(ico.volume - reg.volume == doctest::Approx(0.0717).epsilon(2e-3));
    CHECK(ico.base_area / reg.base_area > 1.10);
    CHECK(ico.height / reg.height > 0.97);
    CHECK(reg.height - ico.height < 0.03 * reg.height);
}

TEST_CASE("local density") {
    CHECK(local_density(icosahedral_configuration()) ==
          doctest::Approx(0.7546973993374058).epsilon(1e-9));
    CHECK(local_density(fcc_kissing_configuration()) ==
          doctest::Approx(M_PI / (3 * std::sqrt(2.0))).epsilon(1e-9));
    std::vector<Vector3> sc{{0, 0, 0}, {2, 0, 0}, {-2, 0, 0}, {0, 2, 0},
                            {0, -2, 0}, {0, 0, 2}, {0, 0, -2}};
    CHECK(local_density(SphereConfiguration(sc)) ==
          doctest::Approx(M_PI / 6).epsilon(1e-9));
}

TEST_CASE("dodecahedral cell facet normals point at the icosahedron vertices") {
    const auto config = icosahedral_configuration();
    const auto cell = voronoi_cell(config.central(), config.surrounding());
    REQUIRE(cell.face_count() == 12);
    for (std::size_t f = 0; f < cell.face_count(); ++f) {
        const Vector3 n = cell.face_normal(f);
        bool matched = false;
        for (const auto& p : config.surrounding())
            if ((n - p.normalized()).norm() <= 1e-9) matched = true;
        CHECK(matched);
    }
}

TEST_CASE("closed form matches constructed geometry") {
    const auto config = icosahedral_configuration();
    const auto cell = voronoi_cell(config.central(), config.surrounding());
    CHECK(polyhedron_volume(cell) ==
          doctest::Approx(dodecahedron_volume(dodecahedron_edge_from_inradius(1.0)))
              .epsilon(1e-9));
}
