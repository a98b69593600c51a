#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "packingcell/lattice.hpp"
#include "packingcell/off_io.hpp"
#include "packingcell/report.hpp"
#include "packingcell/solids.hpp"
#include "packingcell/voronoi.hpp"

namespace {

using namespace packingcell;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDegenerate = 3;

Lattice lattice_from_args(const std::string& name, const std::vector<double>& basis) {
    if (!basis.empty()) {
        if (basis.size() != 9)
            throw std::invalid_argument("--basis requires exactly 9 numbers");
        return Lattice({basis[0], basis[1], basis[2]}, {basis[3], basis[4], basis[5]},
                       {basis[6], basis[7], basis[8]});
    }
    for (auto& [n, L] : lattice_catalog())
        if (n == name) return L;
    throw std::invalid_argument("unknown lattice '" + name + "' (expected sc, bcc or fcc)");
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

nlohmann::ordered_json cell_summary(const CellReport& r) {
    nlohmann::ordered_json classes;
    for (const auto& [cls, count] : r.facet_classes) classes[facet_class_name(cls)] = count;
    return {{"volume", r.volume},
            {"inradius", r.inradius},
            {"circumradius", r.circumradius},
            {"facet_count", r.facet_count},
            {"facet_classes", classes}};
}

void export_cell(const ConvexPolyhedron& cell, const Vector3& center,
                 const std::string& out_path) {
    write_file(out_path, to_off(cell));
    write_file(out_path + ".json", cell_summary(classify_facets(cell, center)).dump(2) + "\n");
}

int cmd_report(bool pretty, const std::string& out_path) {
    const PaperReport r = build_report();
    const std::string text = pretty ? report_to_table(r) : report_to_json(r);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return r.all_match() ? kExitOk : kExitMismatch;
}

int cmd_voronoi(const std::string& name, const std::vector<double>& basis,
                const std::string& config, const std::string& out_path) {
    if (!config.empty()) {
        if (!name.empty() || !basis.empty())
            throw std::invalid_argument("--config excludes a lattice name or basis");
        SphereConfiguration sc = config == "icosahedral"   ? icosahedral_configuration()
                                 : config == "fcc-kissing" ? fcc_kissing_configuration()
                                                           : throw std::invalid_argument(
                                                                 "unknown --config '" + config +
                                                                 "'");
        export_cell(voronoi_cell(sc.central(), sc.surrounding()), sc.central(), out_path);
        return kExitOk;
    }
    const Lattice L = lattice_from_args(name, basis);
    export_cell(voronoi_cell_lattice(L), Vector3{}, out_path);
    return kExitOk;
}

int cmd_density(const std::string& name, const std::vector<double>& basis, bool as_json) {
    const Lattice L = lattice_from_args(name, basis);
    const double density = packing_density(L);
    const double det = std::abs(L.det());
    const double shortest = shortest_vector_norm(L);
    if (as_json) {
        std::cout << nlohmann::ordered_json{{"density", density},
                                            {"det", det},
                                            {"shortest_vector", shortest}}
                         .dump()
                  << "\n";
    } else {
        std::printf("density %.6f  det %.6f  shortest_vector %.6f\n", density, det,
                    shortest);
    }
    return kExitOk;
}

int cmd_brillouin(const std::string& name, const std::vector<double>& basis, bool two_pi,
                  const std::string& out_path) {
    const Lattice L = lattice_from_args(name, basis);
    ConvexPolyhedron zone = brillouin_zone(L);
    if (two_pi)
        for (auto& v : zone.vertices) v = v * (2.0 * M_PI);
    export_cell(zone, Vector3{}, out_path);
    return kExitOk;
}

int cmd_verify(std::uint64_t samples, std::uint64_t seed) {
    bool ok = false;
    std::cout << run_verify(samples, seed, ok);
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi cells, packing densities and tessellation tetrahedra of "
                 "lattice and finite sphere packings"};
    app.require_subcommand(1);

    auto* report = app.add_subcommand("report", "reproduce the key constants and the "
                                                "tetrahedron comparison");
    bool pretty = false;
    std::string report_out;
    report->add_flag("--pretty", pretty, "human-readable table instead of JSON");
    report->add_option("--out", report_out, "write to file instead of stdout");

    auto* voronoi = app.add_subcommand("voronoi", "export a Voronoi cell as OFF");
    std::string v_name, v_config, v_out, v_format = "off";
    std::vector<double> v_basis;
    voronoi->add_option("lattice", v_name, "catalog lattice: sc, bcc or fcc");
    voronoi->add_option("--basis", v_basis, "lattice basis as 9 numbers")->expected(9);
    voronoi->add_option("--config", v_config,
                        "finite configuration: icosahedral or fcc-kissing");
    voronoi->add_option("--out", v_out, "output OFF path")->required();
    voronoi->add_option("--format", v_format, "geometry format (off)");

    auto* density = app.add_subcommand("density", "packing density of a lattice");
    std::string d_name;
    std::vector<double> d_basis;
    bool d_json = false;
    density->add_option("lattice", d_name, "catalog lattice: sc, bcc or fcc");
    density->add_option("--basis", d_basis, "lattice basis as 9 numbers")->expected(9);
    density->add_flag("--json", d_json, "machine-readable output");

    auto* brillouin = app.add_subcommand("brillouin", "export a Brillouin zone as OFF");
    std::string b_name, b_out;
    std::vector<double> b_basis;
    bool b_two_pi = false;
    brillouin->add_option("lattice", b_name, "catalog lattice: sc, bcc or fcc");
    brillouin->add_option("--basis", b_basis, "lattice basis as 9 numbers")->expected(9);
    brillouin->add_flag("--two-pi", b_two_pi, "physics convention (scale by 2*pi)");
    brillouin->add_option("--out", b_out, "output OFF path")->required();

    auto* verify = app.add_subcommand("verify", "Monte-Carlo cross-check of all "
                                                "constructed volumes");
    std::uint64_t samples = 1000000, seed = 42;
    verify->add_option("--samples", samples, "samples per check (>= 10^4)");
    verify->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (report->parsed()) return cmd_report(pretty, report_out);
        if (voronoi->parsed()) {
            if (v_format != "off") throw std::invalid_argument("unsupported format");
            return cmd_voronoi(v_name, v_basis, v_config, v_out);
        }
        if (density->parsed()) return cmd_density(d_name, d_basis, d_json);
        if (brillouin->parsed()) return cmd_brillouin(b_name, b_basis, b_two_pi, b_out);
        if (verify->parsed()) return cmd_verify(samples, seed);
    } catch (const DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Unbounded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InfeasibleInterior& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
