#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spinfloer/grid.hpp"

namespace spinfloer::testing {

// Standalone mod-2 computation of the graded complex (rectangles free of all
// markers, unsigned). Shares nothing with the library except the diagram type.

// dim over Z/2 of the homology of the whole graded complex.
int mod2_total_dimension(const GridDiagram& d);

// Knots only: (Maslov, 2*Alexander) -> dimension over Z/2. Alexander degrees
// come from winding numbers of the knot projection rather than pair counts.
std::map<std::pair<int, int>, int> mod2_knot_poincare(const GridDiagram& d);

// 2*A(x) from the winding-number formula (knots only).
int winding_alexander2(const GridDiagram& d, const std::vector<int>& x);

}  // namespace spinfloer::testing
