#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "packingcell/lattice.hpp"
#include "packingcell/off_io.hpp"
#include "packingcell/oracle.hpp"
#include "packingcell/report.hpp"
#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

namespace py = pybind11;
using namespace packingcell;

PYBIND11_MODULE(_packingcell, m) {
    m.doc() = "Voronoi cells and densities of lattice and finite sphere packings";

    py::register_exception<DegenerateInput>(m, "DegenerateInput");
    py::register_exception<Unbounded>(m, "Unbounded");
    py::register_exception<InfeasibleInterior>(m, "InfeasibleInterior");
    py::register_exception<OverlappingSpheres>(m, "OverlappingSpheres");
    py::register_exception<EdgeTooShort>(m, "EdgeTooShort");
    py::register_exception<NonPositiveEdge>(m, "NonPositiveEdge");
    py::register_exception<CenterOutside>(m, "CenterOutside");

    py::class_<Vector3>(m, "Vector3")
        .def(py::init<double, double, double>())
        .def(py::init([](py::tuple t) {
            return Vector3(t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>());
        }))
        .def_readonly("x", &Vector3::x)
        .def_readonly("y", &Vector3::y)
        .def_readonly("z", &Vector3::z)
        .def("norm", &Vector3::norm)
        .def("__iter__",
             [](const Vector3& v) {
                 return py::iter(py::make_tuple(v.x, v.y, v.z));
             })
        .def("__repr__", [](const Vector3& v) {
            return "Vector3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });
    py::implicitly_convertible<py::tuple, Vector3>();

    py::class_<Halfspace>(m, "Halfspace")
        .def(py::init<const Vector3&, double>(), py::arg("normal"), py::arg("offset"))
        .def_readonly("normal", &Halfspace::normal)
        .def_readonly("offset", &Halfspace::offset)
        .def("signed_distance", &Halfspace::signed_distance);

    py::class_<ConvexPolyhedron>(m, "ConvexPolyhedron")
        .def_readonly("vertices", &ConvexPolyhedron::vertices)
        .def_readonly("faces", &ConvexPolyhedron::faces)
        .def_property_readonly("vertex_count", &ConvexPolyhedron::vertex_count)
        .def_property_readonly("face_count", &ConvexPolyhedron::face_count)
        .def_property_readonly("edge_count", &ConvexPolyhedron::edge_count)
        .def("volume", [](const ConvexPolyhedron& P) { return polyhedron_volume(P); })
        .def("contains", &ConvexPolyhedron::contains, py::arg("p"), py::arg("tol") = kEps)
        .def("supporting_halfspaces", &ConvexPolyhedron::supporting_halfspaces)
        .def("to_off", [](const ConvexPolyhedron& P) { return to_off(P); });

    m.def("determinant3", &determinant3);
    m.def("convex_hull", &convex_hull);
    m.def("halfspace_intersection", &halfspace_intersection, py::arg("constraints"),
          py::arg("interior"));
    m.def("polyhedron_volume", &polyhedron_volume);
    m.def("triangle_solid_angle", &triangle_solid_angle);
    m.def("validate", &validate);

    py::class_<Lattice>(m, "Lattice")
        .def(py::init<const Vector3&, const Vector3&, const Vector3&>())
        .def_readonly("a1", &Lattice::a1)
        .def_readonly("a2", &Lattice::a2)
        .def_readonly("a3", &Lattice::a3)
        .def("det", &Lattice::det)
        .def("point", &Lattice::point);

    py::enum_<TetKind>(m, "TetKind")
        .value("Regular", TetKind::Regular)
        .value("Octahedral", TetKind::Octahedral)
        .value("Other", TetKind::Other);

    py::class_<TessellationTetrahedron>(m, "TessellationTetrahedron")
        .def_readonly("vertices", &TessellationTetrahedron::vertices)
        .def_readonly("kind", &TessellationTetrahedron::kind)
        .def("volume", &TessellationTetrahedron::volume)
        .def("sorted_edge_lengths", &TessellationTetrahedron::sorted_edge_lengths);

    m.def("lattice_fcc", &lattice_fcc);
    m.def("lattice_catalog", [] {
        py::dict d;
        for (const auto& [name, L] : lattice_catalog()) d[name.c_str()] = L;
        return d;
    });
    m.def("shortest_vector_norm", &shortest_vector_norm);
    m.def("packing_density", &packing_density);
    m.def("fundamental_parallelepiped", &fundamental_parallelepiped);
    m.def("tessellation_tetrahedra", &tessellation_tetrahedra);
    m.def("tetrahedron_sphere_coverage", &tetrahedron_sphere_coverage);
    m.def("reciprocal_lattice", &reciprocal_lattice);
    m.def("random_packing_lattice", &random_packing_lattice);

    m.def("voronoi_cell", &voronoi_cell, py::arg("center"), py::arg("others"));
    m.def("voronoi_cell_lattice", &voronoi_cell_lattice);
    m.def("brillouin_zone", &brillouin_zone);

    py::class_<CellReport>(m, "CellReport")
        .def_readonly("cell", &CellReport::cell)
        .def_readonly("volume", &CellReport::volume)
        .def_readonly("inradius", &CellReport::inradius)
        .def_readonly("circumradius", &CellReport::circumradius)
        .def_readonly("facet_count", &CellReport::facet_count)
        .def_property_readonly("facet_classes", [](const CellReport& r) {
            py::dict d;
            for (const auto& [cls, count] : r.facet_classes)
                d[facet_class_name(cls).c_str()] = count;
            return d;
        });
    m.def("classify_facets", &classify_facets, py::arg("cell"), py::arg("center"));

    py::class_<SphereConfiguration>(m, "SphereConfiguration")
        .def(py::init<std::vector<Vector3>>())
        .def_readonly("centers", &SphereConfiguration::centers)
        .def("central", &SphereConfiguration::central)
        .def("surrounding", &SphereConfiguration::surrounding);

    py::class_<TetrahedronMetrics>(m, "TetrahedronMetrics")
        .def_readonly("base_edge", &TetrahedronMetrics::base_edge)
        .def_readonly("base_area", &TetrahedronMetrics::base_area)
        .def_readonly("height", &TetrahedronMetrics::height)
        .def_readonly("volume", &TetrahedronMetrics::volume);

    m.def("dodecahedron_volume", &dodecahedron_volume);
    m.def("dodecahedron_inradius", &dodecahedron_inradius);
    m.def("dodecahedron_edge_from_inradius", &dodecahedron_edge_from_inradius);
    m.def("icosahedron_circumradius", &icosahedron_circumradius);
    m.def("icosahedron_inradius", &icosahedron_inradius);
    m.def("icosahedral_configuration", &icosahedral_configuration);
    m.def("fcc_kissing_configuration", &fcc_kissing_configuration);
    m.def("icosahedral_tetrahedron", &icosahedral_tetrahedron);
    m.def("regular_tetrahedron_metrics", &regular_tetrahedron_metrics);
    m.def("local_density", &local_density);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("samples", &McEstimate::samples)
        .def_readonly("seed", &McEstimate::seed);

    py::class_<Aabb>(m, "Aabb")
        .def(py::init([](const Vector3& lo, const Vector3& hi) { return Aabb{lo, hi}; }),
             py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Aabb::lo)
        .def_readonly("hi", &Aabb::hi);

    m.def("mc_volume_membership", &mc_volume_membership, py::arg("predicate"),
          py::arg("box"), py::arg("samples"), py::arg("seed"));
    m.def("mc_sphere_coverage", &mc_sphere_coverage, py::arg("tetrahedron"),
          py::arg("samples"), py::arg("seed"));

    m.def("build_report_json", [] { return report_to_json(build_report()); });
    m.def("run_verify", [](std::uint64_t samples, std::uint64_t seed) {
        bool ok = false;
        std::string table = run_verify(samples, seed, ok);
        return py::make_tuple(ok, table);
    });
}
