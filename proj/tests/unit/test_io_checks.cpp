#include <doctest.h>

#include <random>

#include "spinfloer/checks.hpp"
#include "spinfloer/grid_io.hpp"

using namespace spinfloer;

namespace {

GridErrorKind kind_of(const std::string& text) {
  try {
    parse_grid(text);
  } catch (const GridError& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return GridErrorKind::Malformed;
}

}  // namespace

TEST_CASE("grid text round trip") {
  const GridDiagram g{5, {0, 1, 2, 3, 4}, {2, 3, 4, 0, 1}};
  CHECK(parse_grid(format_grid(g)) == g);
  CHECK(parse_grid("# comment\n\nX 2 3 4 0 1   # trailing\nn 5\nO 0 1 2 3 4\n") == g);
}

TEST_CASE("grid text errors") {
  CHECK(kind_of("n 2\nO 1 0\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n 2\nO 1 0\nX 0 1\nX 0 1\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n 2\nO 1 0\nX 0 1 2\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n two\nO 1 0\nX 0 1\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n 2\nO 1 0x\nX 0 1\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n 2\nO 1 0\nX 0 1\nY 0 1\n") == GridErrorKind::Malformed);
  CHECK(kind_of("n 3\nO 0 1 2\nX 2 1 0\n") == GridErrorKind::SharedCell);
  CHECK(kind_of("n 3\nO 0 0 2\nX 1 2 0\n") == GridErrorKind::NotAPermutation);
  CHECK(kind_of("n 1\nO 0\nX 0\n") == GridErrorKind::TooSmall);
  CHECK_THROWS_AS(read_grid_file("/nonexistent/file.grid"), GridError);
}

TEST_CASE("check suites pass on small grids") {
  for (const auto& d : all_grids(3)) {
    const Grid g(d);
    CHECK(check_d_squared(g).passed());
    CHECK(check_graded_d_squared(g).passed());
    CHECK(check_mod2_reduction(g).passed());
    CHECK(check_signed_matches_spin(g, CocycleOrder::GeneratorFirst).passed());
    CHECK(check_sign_axioms(g, CocycleOrder::GeneratorFirst).passed());
    CHECK(check_grading_identities(g).passed());
  }
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_spin_relations(n).passed());
    CHECK(check_group_order(n).cases == static_cast<std::int64_t>(2 * factorial(n)));
    CHECK(check_cocycle_condition(n, n <= 3 ? 0 : 500, rng).passed());
  }
}

TEST_CASE("check suites report failures") {
  // The transposition-first cocycle order breaks the axioms on every 3x3 grid.
  const Grid g(GridDiagram{3, {0, 1, 2}, {1, 2, 0}});
  const auto r = check_sign_axioms(g, CocycleOrder::TranspositionFirst);
  CHECK_FALSE(r.passed());
  CHECK(r.failures > 0);
  CHECK_FALSE(r.detail.empty());
  CHECK_FALSE(check_signed_matches_spin(g, CocycleOrder::TranspositionFirst).passed());

  CheckResult c("demo");
  c.fail("first");
  c.fail("second");
  CHECK(c.failures == 2);
  CHECK(c.detail == "first");
}
