#pragma once

#include <iosfwd>
#include <string>

#include "goodkn/realizer.h"

namespace goodkn {

// The .draw text format stores the rotation system (as in .rot), then one
// line per original edge listing the edges it crosses from its smaller to
// its larger endpoint, then one line per crossing giving the endpoints the
// four leaving segments head toward, counterclockwise:
//
//   4
//   1: 2 3 4
//   ...
//   edge 1-3: 2-4
//   edge 1-2:
//   crossing 1-3 2-4: 1 2 3 4

void write_drawing(std::ostream& out, const RealizedDrawing& d);
std::string format_drawing(const RealizedDrawing& d);

/// Rebuilds the planar map. Throws ParseError on malformed input or when the
/// data does not describe a consistent good drawing of the rotation system.
RealizedDrawing read_drawing(std::istream& in);
RealizedDrawing parse_drawing(const std::string& text);

}  // namespace goodkn
