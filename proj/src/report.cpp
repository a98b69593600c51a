#include "packingcell/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "packingcell/lattice.hpp"
#include "packingcell/oracle.hpp"
#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

namespace packingcell {

namespace {

constexpr double kReportTol = 1e-4;

double round6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

double ReportRow::abs_error() const { return std::abs(value - reference); }

bool PaperReport::all_match() const {
    for (const auto& row : rows)
        if (!(row.abs_error() < kReportTol)) return false;
    return icosahedral_tet_volume > regular_tet_volume;
}

PaperReport build_report() {
    PaperReport r;
    const Lattice fcc = lattice_fcc();

    r.rows.push_back({"fcc_parallelepiped_volume", "4*sqrt(2)",
                      polyhedron_volume(fundamental_parallelepiped(fcc)), 5.65685});

    const auto tets = tessellation_tetrahedra(fcc);
    r.rows.push_back({"tessellation_tetrahedron_volume", "(2/3)*sqrt(2)",
                      tets.front().volume(), 0.94281});

    r.rows.push_back({"fcc_density", "pi/(3*sqrt(2))", packing_density(fcc), 0.74048});

    const auto ico = icosahedral_configuration();
    const auto cell = voronoi_cell(ico.central(), ico.surrounding());
    r.rows.push_back({"dodecahedral_cell_volume",
                      "2*(15+7*sqrt(5))/((25+11*sqrt(5))/10)^(3/2)",
                      polyhedron_volume(cell), 5.55029});
    r.rows.push_back({"dodecahedron_edge", "2/sqrt((25+11*sqrt(5))/10)",
                      dodecahedron_edge_from_inradius(1.0), 0.898056});
    r.rows.push_back({"dodecahedral_density", "(4*pi/3)/v_dodecahedron",
                      local_density(ico), 0.754697});

    const auto outer = ico.surrounding();
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (std::size_t j = i + 1; j < outer.size(); ++j)
            gap = std::min(gap, (outer[i] - outer[j]).norm());
    r.rows.push_back({"icosahedral_gap_edge", "8/sqrt(10+2*sqrt(5))", gap, 2.1029});

    const auto tet = icosahedral_tetrahedron();
    r.rows.push_back({"icosahedral_tetrahedron_height",
                      "2*sqrt(3)*(3+sqrt(5))/(3*sqrt(10+2*sqrt(5)))", tet.height,
                      1.58931});
    r.rows.push_back({"icosahedral_tetrahedron_base_area", "(sqrt(3)/4)*a^2",
                      tet.base_area, 1.91491});
    r.rows.push_back({"icosahedral_tetrahedron_volume", "A*h/3", tet.volume, 1.01446});

    r.icosahedral_tet_volume = tet.volume;
    r.regular_tet_volume = regular_tetrahedron_metrics(2.0).volume;
    return r;
}

std::string report_to_json(const PaperReport& r) {
    nlohmann::ordered_json doc;
    for (const auto& row : r.rows) {
        doc[row.name] = {{"closed_form", row.closed_form},
                         {"value", round6(row.value)},
                         {"paper_value", row.reference},
                         {"abs_error", round6(row.abs_error())}};
    }
    doc["verdict"] = {
        {"icosahedral_tetrahedron_volume", round6(r.icosahedral_tet_volume)},
        {"fcc_tessellation_tetrahedron_volume", round6(r.regular_tet_volume)},
        {"icosahedral_exceeds_fcc", r.icosahedral_tet_volume > r.regular_tet_volume},
        {"margin", round6(r.icosahedral_tet_volume - r.regular_tet_volume)}};
    return doc.dump(2) + "\n";
}

std::string report_to_table(const PaperReport& r) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-36s %12s %12s %10s\n", "quantity", "value",
                  "paper", "abs_error");
    out << line;
    for (const auto& row : r.rows) {
        std::snprintf(line, sizeof(line), "%-36s %12s %12s %10.2e\n", row.name.c_str(),
                      fmt6(row.value).c_str(), fmt6(row.reference).c_str(),
                      row.abs_error());
        out << line;
    }
    out << "\nverdict: V_icosahedral = " << fmt6(r.icosahedral_tet_volume)
        << " > V_fcc_tessellation = " << fmt6(r.regular_tet_volume)
        << " (margin " << fmt6(r.icosahedral_tet_volume - r.regular_tet_volume) << ")\n";
    return out.str();
}

namespace {

struct VerifyCheck {
    std::string name;
    double expected = 0.0;
    McEstimate estimate;
};

Aabb bounding_box(const ConvexPolyhedron& P, double pad) {
    Vector3 lo = P.vertices.front(), hi = lo;
    for (const auto& v : P.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    return {lo - Vector3{pad, pad, pad}, hi + Vector3{pad, pad, pad}};
}

// Membership in the Voronoi cell of the origin, straight from the
// definition; never consults the polyhedron kernel.
std::function<bool(const Vector3&)> bisector_predicate(std::vector<Vector3> neighbors) {
    return [neighbors = std::move(neighbors)](const Vector3& p) {
        const double d2 = p.norm2();
        for (const auto& q : neighbors)
            if ((p - q).norm2() < d2) return false;
        return true;
    };
}

}  // namespace

std::string run_verify(std::uint64_t samples, std::uint64_t seed, bool& ok) {
    std::vector<VerifyCheck> checks;
    std::uint64_t idx = 0;
    auto next_seed = [&] { return seed + idx++; };

    // Fundamental parallelepipeds: membership via basis coefficients.
    for (const auto& basis :
         {lattice_fcc(), Lattice({2, 0, 0}, {0, 2, 0}, {1, 1, std::sqrt(2.0)})}) {
        const ConvexPolyhedron fp = fundamental_parallelepiped(basis);
        const Lattice dual = reciprocal_lattice(basis);
        auto in_fp = [dual](const Vector3& p) {
            for (const auto& b : {dual.a1, dual.a2, dual.a3}) {
                const double lambda = b.dot(p);
                if (lambda < 0.0 || lambda > 1.0) return false;
            }
            return true;
        };
        checks.push_back({idx == 0 ? "fcc_parallelepiped_FPI" : "fcc_parallelepiped_FPII",
                          polyhedron_volume(fp),
                          mc_volume_membership(in_fp, bounding_box(fp, 0.1), samples,
                                               next_seed())});
    }

    // fcc lattice Voronoi cell.
    {
        const Lattice fcc = lattice_fcc();
        std::vector<Vector3> neighbors;
        for (int z1 = -2; z1 <= 2; ++z1)
            for (int z2 = -2; z2 <= 2; ++z2)
                for (int z3 = -2; z3 <= 2; ++z3)
                    if (z1 || z2 || z3) neighbors.push_back(fcc.point(z1, z2, z3));
        const ConvexPolyhedron cell = voronoi_cell_lattice(fcc);
        checks.push_back({"fcc_voronoi_cell", polyhedron_volume(cell),
                          mc_volume_membership(bisector_predicate(neighbors),
                                               bounding_box(cell, 0.1), samples,
                                               next_seed())});
    }

    // Dodecahedral cell of the icosahedral configuration.
    {
        const auto ico = icosahedral_configuration();
        const ConvexPolyhedron cell = voronoi_cell(ico.central(), ico.surrounding());
        checks.push_back({"dodecahedral_voronoi_cell", polyhedron_volume(cell),
                          mc_volume_membership(bisector_predicate(ico.surrounding()),
                                               bounding_box(cell, 0.1), samples,
                                               next_seed())});
    }

    // TIII / TIV sphere coverage.
    for (const auto& tet : tessellation_tetrahedra(lattice_fcc())) {
        if (tet.kind == TetKind::Regular) {
            checks.push_back({"coverage_regular_TIII", tetrahedron_sphere_coverage(tet),
                              mc_sphere_coverage(tet, samples, next_seed())});
            break;
        }
    }
    for (const auto& tet : tessellation_tetrahedra(lattice_fcc())) {
        if (tet.kind == TetKind::Octahedral) {
            checks.push_back({"coverage_octahedral_TIV", tetrahedron_sphere_coverage(tet),
                              mc_sphere_coverage(tet, samples, next_seed())});
            break;
        }
    }

    ok = true;
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-28s %12s %12s %12s %8s %6s\n", "check",
                  "expected", "mc_mean", "mc_stderr", "sigmas", "status");
    out << line;
    for (const auto& c : checks) {
        const double sig = c.estimate.std_error > 0.0
                               ? std::abs(c.estimate.mean - c.expected) / c.estimate.std_error
                               : 0.0;
        const bool pass = within_sigmas(c.estimate, c.expected);
        ok = ok && pass;
        std::snprintf(line, sizeof(line), "%-28s %12.7f %12.7f %12.3e %8.2f %6s\n",
                      c.name.c_str(), c.expected, c.estimate.mean, c.estimate.std_error,
                      sig, pass ? "PASS" : "FAIL");
        out << line;
    }
    return out.str();
}

}  // namespace packingcell
