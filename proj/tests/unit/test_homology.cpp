#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mod2_oracle.hpp"
#include "spinfloer/homology.hpp"

using namespace spinfloer;
using spinfloer::testing::mod2_knot_poincare;
using spinfloer::testing::mod2_total_dimension;
using spinfloer::testing::winding_alexander2;

namespace {

const GridDiagram kUnknot2{2, {1, 0}, {0, 1}};
const GridDiagram kTrefoil5{5, {0, 1, 2, 3, 4}, {2, 3, 4, 0, 1}};

std::vector<long> diag(const SmithForm& s) {
  std::vector<long> out;
  for (const auto& d : s.diagonal) out.push_back(d.get_si());
  return out;
}

// Fraction-free Gaussian elimination (Bareiss).
mpz_class determinant(BigMatrix m) {
  const int n = m.rows();
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// gcd of all k x k minors, by brute force over row/column subsets.
mpz_class determinantal_divisor(const BigMatrix& a, int k) {
  mpz_class g = 0;
  std::vector<int> rows(static_cast<std::size_t>(a.rows()));
  std::vector<int> cols(static_cast<std::size_t>(a.cols()));
  std::vector<bool> rsel(rows.size(), false);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::vector<bool> csel(cols.size(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      BigMatrix sub(k, k);
      int ri = 0;
      for (int r = 0; r < a.rows(); ++r) {
        if (!rsel[static_cast<std::size_t>(r)]) continue;
        int ci = 0;
        for (int c = 0; c < a.cols(); ++c)
          if (csel[static_cast<std::size_t>(c)]) sub(ri, ci++) = a(r, c);
        ++ri;
      }
      mpz_class d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

IntegerMatrix random_matrix(int rows, int cols, std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<int> value(-9, 9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  IntegerMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (coin(rng) < density) m.add(i, j, value(rng));
  return m;
}

void check_smith_postconditions(const IntegerMatrix& a, bool with_determinants) {
  const SmithForm s = smith_normal_form(a, true);
  REQUIRE(s.u * BigMatrix::from(a) * s.v == diagonal_matrix(s, a.rows(), a.cols()));
  // integer inverses certify that both transforms are unimodular
  REQUIRE(s.u * s.u_inverse == BigMatrix::identity(a.rows()));
  REQUIRE(s.v * s.v_inverse == BigMatrix::identity(a.cols()));
  if (with_determinants) {
    REQUIRE(abs(determinant(s.u)) == 1);
    REQUIRE(abs(determinant(s.v)) == 1);
  }
  for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
    REQUIRE(s.diagonal[k] > 0);
    if (k > 0) REQUIRE(mpz_divisible_p(s.diagonal[k].get_mpz_t(), s.diagonal[k - 1].get_mpz_t()));
  }
}

LaurentPolynomial poly1(std::initializer_list<std::tuple<int, int, std::int64_t>> terms) {
  LaurentPolynomial p(1);
  for (const auto& [q, t2, c] : terms) p.add(q, {t2}, c);
  return p;
}

std::vector<GridDiagram> knots_among(const std::vector<GridDiagram>& grids) {
  std::vector<GridDiagram> out;
  for (const auto& d : grids)
    if (trace_components(d).count == 1) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix(3, 2)).diagonal.empty());
  CHECK(diag(smith_normal_form(IntegerMatrix::from_dense({{1, 2}, {3, 4}}))) == std::vector<long>{1, 2});
  CHECK(diag(smith_normal_form(IntegerMatrix::from_dense({{2, 0}, {0, 3}}))) == std::vector<long>{1, 6});
  CHECK(diag(smith_normal_form(IntegerMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}))) ==
        std::vector<long>{2, 6, 12});
  CHECK(smith_normal_form(IntegerMatrix(0, 0)).diagonal.empty());
  CHECK_THROWS_AS(IntegerMatrix(2, 2).add(2, 0, 1), std::out_of_range);
}

TEST_CASE("smith normal form matches determinantal divisors on small matrices") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 4);
    const int c = 1 + static_cast<int>(rng() % 4);
    const IntegerMatrix a = random_matrix(r, c, rng, 0.7);
    const SmithForm s = smith_normal_form(a, false);
    const BigMatrix dense = BigMatrix::from(a);
    mpz_class product = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
      const mpz_class dk = determinantal_divisor(dense, k);
      if (k <= s.rank()) {
        product *= s.diagonal[static_cast<std::size_t>(k - 1)];
        REQUIRE(dk == product);
      } else {
        REQUIRE(dk == 0);
      }
    }
  }
}

TEST_CASE("smith normal form transforms on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 30);
    const int c = 1 + static_cast<int>(rng() % 30);
    check_smith_postconditions(random_matrix(r, c, rng, trial % 2 ? 0.3 : 1.0), true);
  }
  check_smith_postconditions(random_matrix(120, 80, rng, 0.2), false);
  check_smith_postconditions(random_matrix(200, 200, rng, 1.0), false);
  check_smith_postconditions(random_matrix(200, 150, rng, 0.05), false);
}

TEST_CASE("laurent polynomial arithmetic") {
  const auto f = LaurentPolynomial::tilde_factor(1, 1);
  CHECK(to_string(f) == "1 + q^-1*t^-1");
  CHECK(f.divide_tilde_factor(1) == LaurentPolynomial::constant(1, 1));
  const auto f3 = f * f * f;
  CHECK(f3.divide_tilde_factor(1).divide_tilde_factor(1) == f);
  CHECK_THROWS_AS(LaurentPolynomial::constant(1, 1).divide_tilde_factor(1), NotDivisible);
  CHECK_THROWS_AS(poly1({{0, 0, 1}, {-1, -2, 2}}).divide_tilde_factor(1), NotDivisible);
  CHECK(to_string(f.at_q_minus_one()) == "1 - t^-1");
  CHECK(to_string(poly1({{0, 2, 1}, {0, 0, -1}, {0, -2, 1}})) == "t - 1 + t^-1");
  LaurentPolynomial two(2);
  two.add(0, {1, -1}, 1);
  two.add(1, {0, 2}, -3);
  CHECK(to_string(two) == "-3*q*t2 + t1^(1/2)*t2^(-1/2)");
  CHECK(to_string(LaurentPolynomial(1)) == "0");
  CHECK_THROWS_AS(two + f, std::invalid_argument);
}

TEST_CASE("homology of the 2x2 unknot") {
  const Grid g(kUnknot2);
  const auto h = bigraded_homology(g);
  REQUIRE(h.pieces.size() == 2);
  CHECK(h.pieces.at(Bigrading{0, {0}}).free_rank == 1);
  CHECK(h.pieces.at(Bigrading{-1, {-2}}).free_rank == 1);
  CHECK(h.torsion_free());
  CHECK(to_string(h.poincare) == "1 + q^-1*t^-1");
  CHECK(to_string(h.euler) == "1 - t^-1");

  const auto hat = hat_reduction(h, g.components());
  REQUIRE(hat.pieces.size() == 1);
  CHECK(hat.pieces.at(Bigrading{0, {0}}).free_rank == 1);
  CHECK(to_string(alexander_polynomial(g)) == "1");
}

TEST_CASE("trefoil") {
  const Grid g(kTrefoil5);
  REQUIRE(g.components().count == 1);
  const auto h = bigraded_homology(g, 4);
  CHECK(h.torsion_free());
  // tilde = hat (x) V^(n-1) with V of rank two
  CHECK(h.total_rank() == 3 * 16);

  const auto hat = hat_reduction(h, g.components());
  CHECK(hat.total_rank() == 3);
  std::vector<int> alexander;
  for (const auto& [b, p] : hat.pieces) {
    CHECK(p.free_rank == 1);
    alexander.push_back(b.alexander2[0]);
  }
  std::sort(alexander.begin(), alexander.end());
  CHECK(alexander == std::vector<int>{-2, 0, 2});
  CHECK(to_string(alexander_polynomial(g)) == "t - 1 + t^-1");

  // Euler characteristic of tilde is Delta * (1 - t^-1)^(n-1) up to sign and shift
  auto expected = poly1({{0, 2, 1}, {0, 0, -1}, {0, -2, 1}});
  for (int k = 0; k < 4; ++k) expected = expected * poly1({{0, 0, 1}, {0, -2, -1}});
  CHECK(normalize_alexander(h.euler, 1) == normalize_alexander(expected, 1));
}

TEST_CASE("trefoil agrees with the mod 2 oracle") {
  const Grid g(kTrefoil5);
  const auto h = bigraded_homology(g);
  CHECK(mod2_total_dimension(kTrefoil5) == h.total_rank());
  const auto oracle = mod2_knot_poincare(kTrefoil5);
  std::map<std::pair<int, int>, int> ours;
  for (const auto& [b, p] : h.pieces) ours[{b.maslov, b.alexander2[0]}] = p.free_rank;
  CHECK(ours == oracle);
}

TEST_CASE("winding-number Alexander grading matches the pair-count formula") {
  std::vector<GridDiagram> grids = knots_among(all_grids(4));
  const auto k3 = knots_among(all_grids(3));
  grids.insert(grids.end(), k3.begin(), k3.end());
  std::mt19937_64 rng(8);
  while (grids.size() < 300) {
    auto d = random_grid(5, rng);
    if (trace_components(d).count == 1) grids.push_back(d);
  }
  for (const auto& d : grids) {
    const Grid g(d);
    for (const auto& x : all_permutations(d.n)) REQUIRE(g.alexander2(x)[0] == winding_alexander2(d, x.images()));
  }
}

TEST_CASE("integer homology against the mod 2 oracle on every small grid") {
  // universal coefficients: dim H(Z/2) >= free rank, equal when torsion free
  std::vector<GridDiagram> grids = all_grids(3);
  const auto g4 = all_grids(4);
  grids.insert(grids.end(), g4.begin(), g4.end());
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) grids.push_back(random_grid(5, rng));
  for (const auto& d : grids) {
    const Grid g(d);
    const auto h = bigraded_homology(g);
    const int mod2 = mod2_total_dimension(d);
    REQUIRE(mod2 >= h.total_rank());
    bool even_torsion = false;
    for (const auto& [b, p] : h.pieces)
      for (auto t : p.torsion) even_torsion = even_torsion || t % 2 == 0;
    if (!even_torsion) REQUIRE(mod2 == h.total_rank());
  }
}

TEST_CASE("Euler characteristic of homology equals that of the chain complex") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 40; ++k) {
    const Grid g(random_grid(2 + k % 4, rng));
    REQUIRE(bigraded_homology(g).euler == chain_euler(g));
  }
}

TEST_CASE("homology does not depend on generator order") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20; ++k) {
    const Grid g(random_grid(3 + k % 2, rng));
    const auto reference = bigraded_homology(g);
    GradedComplex shuffled = graded_complex(g);
    for (auto& [b, gens] : shuffled.pieces) std::shuffle(gens.begin(), gens.end(), rng);
    const auto h = bigraded_homology(g, shuffled, 2);
    REQUIRE(h.poincare == reference.poincare);
    REQUIRE(h.torsion_poincare == reference.torsion_poincare);
  }
}

TEST_CASE("hat reduction divides on every small grid") {
  std::vector<GridDiagram> grids = all_grids(3);
  const auto g4 = all_grids(4);
  grids.insert(grids.end(), g4.begin(), g4.end());
  for (const auto& d : grids) {
    const Grid g(d);
    const auto h = bigraded_homology(g);
    HomologySummary hat;
    REQUIRE_NOTHROW(hat = hat_reduction(h, g.components()));
    // every knot with grid number at most 4 is an unknot
    if (g.components().count == 1) {
      REQUIRE(hat.total_rank() == 1);
      REQUIRE(to_string(normalize_alexander(hat.euler, 1)) == "1");
    }
  }
}
