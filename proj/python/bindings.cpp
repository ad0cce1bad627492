#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "spinfloer/checks.hpp"
#include "spinfloer/grid_io.hpp"
#include "spinfloer/homology.hpp"
#include "spinfloer/moves.hpp"
#include "spinfloer/sign_complex.hpp"

namespace py = pybind11;
using namespace spinfloer;

namespace {

Permutation to_perm(const std::vector<int>& images) { return Permutation(images); }

py::tuple spin_tuple(const SpinElement& e) { return py::make_tuple(e.perm.images(), e.bit); }

SpinElement from_tuple(const std::vector<int>& images, int bit) { return SpinElement{Permutation(images), bit & 1}; }

py::dict summary_dict(const HomologySummary& h) {
  py::list pieces;
  for (const auto& [b, p] : h.pieces) {
    py::dict d;
    d["maslov"] = b.maslov;
    d["alexander2"] = b.alexander2;
    d["free_rank"] = p.free_rank;
    d["torsion"] = p.torsion;
    pieces.append(d);
  }
  py::dict out;
  out["flavor"] = h.flavor;
  out["components"] = h.components;
  out["pieces"] = pieces;
  out["poincare"] = to_string(h.poincare);
  out["euler"] = to_string(h.euler);
  out["total_rank"] = h.total_rank();
  return out;
}

// {images: {exponents: coefficient}}
py::dict chain_dict(const ChainElement& c) {
  py::dict out;
  for (const auto& [x, poly] : c.terms()) {
    py::dict terms;
    for (const auto& [m, coef] : poly.terms()) {
      py::list e;
      for (int k = 0; k < m.variables(); ++k) e.append(m.exponent(k));
      terms[py::tuple(e)] = coef;
    }
    out[py::tuple(py::cast(x.images()))] = terms;
  }
  return out;
}

py::dict check_dict(const CheckResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed();
  d["cases"] = r.cases;
  d["failures"] = r.failures;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grid homology over the spin extension of the symmetric group";

  py::register_exception<GridError>(m, "GridError", PyExc_ValueError);
  py::register_exception<IllegalCommutation>(m, "IllegalCommutation", PyExc_ValueError);
  py::register_exception<BadPosition>(m, "BadPosition", PyExc_ValueError);

  py::class_<GridDiagram>(m, "GridDiagram")
      .def(py::init([](std::vector<int> o_rows, std::vector<int> x_rows) {
             GridDiagram g{static_cast<int>(o_rows.size()), std::move(o_rows), std::move(x_rows)};
             validate(g);
             return g;
           }),
           py::arg("o_rows"), py::arg("x_rows"))
      .def_readonly("n", &GridDiagram::n)
      .def_readonly("o_rows", &GridDiagram::o_rows)
      .def_readonly("x_rows", &GridDiagram::x_rows)
      .def("__eq__", [](const GridDiagram& a, const GridDiagram& b) { return a == b; })
      .def("__str__", &format_grid)
      .def("__repr__", [](const GridDiagram& g) {
        return "GridDiagram(" + py::repr(py::cast(g.o_rows)).cast<std::string>() + ", " +
               py::repr(py::cast(g.x_rows)).cast<std::string>() + ")";
      });

  m.def("parse_grid", &parse_grid, py::arg("text"));
  m.def("read_grid", &read_grid_file, py::arg("path"));
  m.def("format_grid", &format_grid, py::arg("grid"));

  m.def(
      "components",
      [](const GridDiagram& g) {
        const auto c = trace_components(g);
        py::dict d;
        d["count"] = c.count;
        d["segments"] = c.segments;
        d["component_of_o"] = c.comp_of_o;
        d["component_of_x"] = c.comp_of_x;
        d["o_variable"] = c.o_variable;
        return d;
      },
      py::arg("grid"));

  m.def(
      "bigrading",
      [](const GridDiagram& g, const std::vector<int>& x) {
        const auto b = Grid(g).bigrading(to_perm(x));
        return py::make_tuple(b.maslov, b.alexander2);
      },
      py::arg("grid"), py::arg("generator"), "(M, [2 A_1, ..., 2 A_l]) of a generator");

  // Spin extension: elements are (images, bit) meaning z^bit s(x).
  m.def("section", [](const std::vector<int>& x) { return spin_tuple(section(to_perm(x))); }, py::arg("images"));
  m.def("lift", [](int n, int a, int b) { return spin_tuple(lift(n, {a, b})); }, py::arg("n"), py::arg("a"),
        py::arg("b"));
  m.def(
      "multiply",
      [](const std::pair<std::vector<int>, int>& g, const std::pair<std::vector<int>, int>& h) {
        return spin_tuple(multiply(from_tuple(g.first, g.second), from_tuple(h.first, h.second)));
      },
      py::arg("g"), py::arg("h"));
  m.def(
      "cocycle", [](const std::vector<int>& p, const std::vector<int>& q) { return cocycle(to_perm(p), to_perm(q)); },
      py::arg("p"), py::arg("q"));

  m.def(
      "differential",
      [](const GridDiagram& g, const std::vector<int>& x) {
        return chain_dict(differential_minus(Grid(g), section(to_perm(x))));
      },
      py::arg("grid"), py::arg("generator"), "minus differential of s(x): {target: {U exponents: coefficient}}");

  m.def(
      "homology",
      [](const GridDiagram& g, const std::string& flavor, int threads) {
        if (flavor != "tilde" && flavor != "hat") throw py::value_error("flavor must be 'tilde' or 'hat'");
        HomologySummary h;
        {
          py::gil_scoped_release release;
          const Grid grid(g);
          h = bigraded_homology(grid, threads);
          if (flavor == "hat") h = hat_reduction(h, grid.components());
        }
        return summary_dict(h);
      },
      py::arg("grid"), py::arg("flavor") = "tilde", py::arg("threads") = 1);

  m.def(
      "alexander_polynomial", [](const GridDiagram& g) { return to_string(alexander_polynomial(Grid(g))); },
      py::arg("grid"));

  m.def(
      "apply_moves",
      [](GridDiagram g, const std::string& script) {
        for (const auto& mv : parse_move_script(script)) g = apply_move(g, mv);
        return g;
      },
      py::arg("grid"), py::arg("script"));

  m.def(
      "invariance",
      [](const GridDiagram& a, const GridDiagram& b) {
        const auto r = invariance_report(a, b);
        py::dict d;
        d["ok"] = r.ok();
        d["components_match"] = r.components_match;
        d["hat_equal"] = r.hat_equal;
        d["tilde_relation"] = r.tilde_relation;
        d["segment_change"] = r.segment_change;
        d["hat"] = py::make_tuple(to_string(r.hat1.poincare), to_string(r.hat2.poincare));
        return d;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "run_checks",
      [](const GridDiagram& d, std::uint64_t seed) {
        const Grid g(d);
        std::mt19937_64 rng(seed);
        std::vector<CheckResult> rs{check_d_squared(g),
                                    check_graded_d_squared(g),
                                    check_mod2_reduction(g),
                                    check_sign_axioms(g, CocycleOrder::GeneratorFirst),
                                    check_signed_matches_spin(g, CocycleOrder::GeneratorFirst),
                                    check_grading_identities(g),
                                    check_spin_relations(g.size()),
                                    check_cocycle_condition(g.size(), g.size() <= 4 ? 0 : 2000, rng)};
        py::list out;
        for (const auto& r : rs) out.append(check_dict(r));
        return out;
      },
      py::arg("grid"), py::arg("seed") = 1);

  m.def("all_grids", &all_grids, py::arg("n"));
}
