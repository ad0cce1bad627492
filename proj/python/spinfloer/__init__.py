"""Grid homology of knots and links over the spin extension of S_n."""

from ._core import (
    BadPosition,
    GridDiagram,
    GridError,
    IllegalCommutation,
    alexander_polynomial,
    all_grids,
    apply_moves,
    bigrading,
    cocycle,
    components,
    differential,
    format_grid,
    homology,
    invariance,
    lift,
    multiply,
    parse_grid,
    read_grid,
    run_checks,
    section,
)

__all__ = [
    "BadPosition",
    "GridDiagram",
    "GridError",
    "IllegalCommutation",
    "alexander_polynomial",
    "all_grids",
    "apply_moves",
    "bigrading",
    "cocycle",
    "components",
    "differential",
    "format_grid",
    "homology",
    "invariance",
    "lift",
    "multiply",
    "parse_grid",
    "read_grid",
    "run_checks",
    "section",
]
