#pragma once

#include <string>

#include "spinfloer/grid.hpp"

namespace spinfloer {

// Text form: '#' starts a comment; records "n <int>", "O <rows>", "X <rows>",
// one per line, in any order. Throws GridError (Malformed for syntax, the
// validate() kinds otherwise).
GridDiagram parse_grid(const std::string& text);
GridDiagram read_grid_file(const std::string& path);

std::string format_grid(const GridDiagram& g);
void write_grid_file(const std::string& path, const GridDiagram& g);

}  // namespace spinfloer
