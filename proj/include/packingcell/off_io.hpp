#pragma once

#include <iosfwd>
#include <string>

#include "packingcell/geom3.hpp"

namespace packingcell {

// Object File Format: "OFF" header, counts line "V F E", vertex lines,
// then face lines "n i1 ... in".
void write_off(std::ostream& out, const ConvexPolyhedron& P);

std::string to_off(const ConvexPolyhedron& P);

}  // namespace packingcell
