#include <doctest.h>

#include <random>
#include <stdexcept>

#include "spinfloer/sign_complex.hpp"

using namespace spinfloer;

namespace {

const GridDiagram kUnknot2{2, {1, 0}, {0, 1}};

Monomial u(int nvars, int var) {
  Monomial m(nvars);
  m.set_exponent(var, 1);
  return m;
}

std::vector<GridDiagram> sample_grids(int n, int count, std::uint64_t seed) {
  if (n <= 4) return all_grids(n);
  std::mt19937_64 rng(seed);
  std::vector<GridDiagram> out;
  for (int k = 0; k < count; ++k) out.push_back(random_grid(n, rng));
  return out;
}

}  // namespace

TEST_CASE("spin differential on the 2x2 unknot") {
  const Grid g(kUnknot2);
  const auto id = Permutation::identity(2);
  const auto sw = Permutation::transposition(2, 0, 1);
  CHECK(differential_minus(g, section(id)).is_zero());

  ChainElement expected;
  expected.add(id, u(2, 1), 1);
  expected.add(id, u(2, 0), -1);
  CHECK(differential_minus(g, section(sw)) == expected);
  // z acts as -1
  SpinElement zsw = section(sw);
  zsw.bit = 1;
  ChainElement negated;
  negated.add_scaled(expected, Monomial(2), -1);
  CHECK(differential_minus(g, zsw) == negated);

  CHECK(graded_differential(g, section(id)).is_zero());
  CHECK(graded_differential(g, section(sw)).is_zero());
  CHECK(unsigned_differential_mod2(g, id).is_zero());
  CHECK(empty_rectangles(g, id).size() == 2);
}

TEST_CASE("sign assignment on the 2x2 unknot") {
  const Grid g(kUnknot2);
  const auto id = Permutation::identity(2);
  const auto sw = Permutation::transposition(2, 0, 1);
  for (auto order : {CocycleOrder::GeneratorFirst, CocycleOrder::TranspositionFirst}) {
    CHECK(sign_assignment(g, id, {0, 1}, order) == 1);
    CHECK(sign_assignment(g, sw, {0, 1}, order) == -1);
    CHECK(sign_assignment(g, sw, {1, 0}, order) == 1);
    ChainElement expected;
    expected.add(id, u(2, 1), 1);
    expected.add(id, u(2, 0), -1);
    CHECK(differential_signed(g, sw, order) == expected);
  }
  const Grid g3({3, {1, 2, 0}, {2, 0, 1}});
  CHECK_THROWS_AS(sign_assignment(g3, Permutation::identity(3), {0, 2}), std::invalid_argument);
}

TEST_CASE("the spin differential squares to zero") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : sample_grids(n, 6, 100 + n)) {
      const Grid g(d);
      for (const auto& x : all_permutations(n)) {
        const auto dx = differential_minus(g, section(x));
        REQUIRE(differential_minus(g, dx).is_zero());
        REQUIRE(graded_differential(g, graded_differential(g, section(x))).is_zero());
      }
    }
  }
}

TEST_CASE("gradings along the differentials") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& d : all_grids(n)) {
      const Grid g(d);
      for (const auto& x : all_permutations(n)) {
        const auto bx = g.bigrading(x);
        // every term of the minus differential drops M by one once U factors are counted
        for (const auto& t : empty_rectangles(g, x)) {
          REQUIRE(g.maslov(t.target) + t.monomial.maslov_shift() == bx.maslov - 1);
        }
        const auto dx = graded_differential(g, section(x));
        for (const auto& [y, poly] : dx.terms()) {
          const auto by = g.bigrading(y);
          REQUIRE(by.maslov == bx.maslov - 1);
          REQUIRE(by.alexander2 == bx.alexander2);
        }
      }
    }
  }
}

TEST_CASE("mod 2 reduction matches the unsigned differential") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : sample_grids(n, 6, 200 + n)) {
      const Grid g(d);
      for (const auto& x : all_permutations(n)) {
        REQUIRE(differential(g, section(x), Flavor::Mod2Minus) == unsigned_differential_mod2(g, x));
      }
    }
  }
}

TEST_CASE("generator-first sign assignment reproduces the spin differential") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : sample_grids(n, 6, 300 + n)) {
      const Grid g(d);
      for (const auto& x : all_permutations(n)) {
        REQUIRE(differential_signed(g, x, CocycleOrder::GeneratorFirst) == differential_minus(g, section(x)));
      }
    }
  }
}

TEST_CASE("sign axioms on every 4x4 grid") {
  const Grid g2(kUnknot2);
  const auto r2 = check_sign_axioms(g2, spin_sign_function(g2, CocycleOrder::GeneratorFirst));
  CHECK(r2.ok());
  CHECK(r2.vertical_annuli > 0);
  CHECK(r2.horizontal_annuli > 0);

  for (const auto& d : all_grids(4)) {
    const Grid g(d);
    const auto report = check_sign_axioms(g, spin_sign_function(g, CocycleOrder::GeneratorFirst));
    REQUIRE(report.ok());
  }
}

TEST_CASE("a constant sign function breaks the square axiom") {
  const Grid g({3, {1, 2, 0}, {2, 0, 1}});
  const SignFunction plus = [](const Permutation&, TranspositionLabel) { return 1; };
  const auto report = check_sign_axioms(g, plus);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.violations.empty());
}

TEST_CASE("coboundary equivalence") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const Grid g(random_grid(4, rng));
    const auto s = spin_sign_function(g, CocycleOrder::GeneratorFirst);

    const auto same = check_coboundary_equivalence(g, s, s);
    CHECK(same.consistent);
    for (int f : same.gauge) CHECK(f == 1);

    // twist by (-1)^M(x) (-1)^M(y)
    const SignFunction twisted = [&g, s](const Permutation& x, TranspositionLabel label) {
      const Permutation y = x.swap_positions(label.a, label.b);
      const int parity = (g.maslov(x) + g.maslov(y)) & 1;
      return s(x, label) * (parity ? -1 : 1);
    };
    const auto tw = check_coboundary_equivalence(g, s, twisted);
    REQUIRE(tw.consistent);
    // the recovered gauge is (-1)^M up to one sign per connected piece
    std::vector<int> piece_sign(static_cast<std::size_t>(tw.graph_components), 0);
    for (const auto& x : all_permutations(4)) {
      const int expected = (g.maslov(x) & 1) ? -1 : 1;
      auto& ps = piece_sign[static_cast<std::size_t>(tw.component_of[x.rank()])];
      if (ps == 0) ps = expected * tw.gauge[x.rank()];
      REQUIRE(tw.gauge[x.rank()] * ps == expected);
    }
  }
}

TEST_CASE("only the generator-first cocycle order gives a sign assignment") {
  // On 2x2 grids the two orders coincide; from n = 3 on c(tau, x) breaks the
  // square axiom and d^2 = 0, so it is not gauge equivalent to the spin signs.
  for (const auto& d : all_grids(2)) {
    const Grid g(d);
    CHECK(check_coboundary_equivalence(g, spin_sign_function(g, CocycleOrder::GeneratorFirst),
                                       spin_sign_function(g, CocycleOrder::TranspositionFirst))
              .consistent);
  }
  for (const auto& d : all_grids(3)) {
    const Grid g(d);
    CHECK_FALSE(check_sign_axioms(g, spin_sign_function(g, CocycleOrder::TranspositionFirst)).ok());
    CHECK_FALSE(check_coboundary_equivalence(g, spin_sign_function(g, CocycleOrder::GeneratorFirst),
                                             spin_sign_function(g, CocycleOrder::TranspositionFirst))
                    .consistent);
  }
}
