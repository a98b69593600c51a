#include "packingcell/off_io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace packingcell {

void write_off(std::ostream& out, const ConvexPolyhedron& P) {
    out << "OFF\n"
        << P.vertex_count() << ' ' << P.face_count() << ' ' << P.edge_count() << '\n';
    char buf[128];
    for (const auto& v : P.vertices) {
        // %.17g round-trips a binary64 exactly
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& cyc : P.faces) {
        out << cyc.size();
        for (int vi : cyc) out << ' ' << vi;
        out << '\n';
    }
}

std::string to_off(const ConvexPolyhedron& P) {
    std::ostringstream out;
    write_off(out, P);
    return out.str();
}

}  // namespace packingcell
