// Minimal SVG plot of the lifted eigenvalue curves. Pure add-on: nothing
// here feeds back into the numeric outputs.

#pragma once

#include <iosfwd>

#include "specflow/lifting.hpp"

namespace specflow::cli {

void write_path_svg(const TrackedPath& path, std::ostream& os);

}  // namespace specflow::cli
