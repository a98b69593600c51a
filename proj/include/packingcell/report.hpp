#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace packingcell {

// One reproduced quantity: closed form, value computed from constructed
// geometry, the published reference value, and their absolute gap.
struct ReportRow {
    std::string name;
    std::string closed_form;
    double value = 0.0;
    double reference = 0.0;

    double abs_error() const;
};

struct PaperReport {
    std::vector<ReportRow> rows;
    double icosahedral_tet_volume = 0.0;
    double regular_tet_volume = 0.0;

    // Every row within 1e-4 of its reference and the headline inequality
    // (icosahedral tetrahedron strictly larger) holds.
    bool all_match() const;
};

PaperReport build_report();

// Deterministic renderings (6 significant digits, no timestamps).
std::string report_to_json(const PaperReport& r);
std::string report_to_table(const PaperReport& r);

// Monte-Carlo cross-check of every constructed volume and coverage value.
// Returns the table; `ok` reports whether all checks passed within 4 sigma.
std::string run_verify(std::uint64_t samples, std::uint64_t seed, bool& ok);

}  // namespace packingcell
