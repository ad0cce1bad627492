#include "spinfloer/checks.hpp"

#include <set>
#include <sstream>

#include "spinfloer/polynomial.hpp"

namespace spinfloer {

namespace {

std::string label_text(TranspositionLabel t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

SpinElement z_times(SpinElement g) {
  g.bit ^= 1;
  return g;
}

SpinElement mul3(const SpinElement& a, const SpinElement& b, const SpinElement& c) {
  return multiply(multiply(a, b), c);
}

template <typename Differential>
CheckResult d_squared_with(const Grid& g, std::string name, Differential d) {
  CheckResult r{std::move(name)};
  for (const auto& x : all_permutations(g.size())) {
    ++r.cases;
    const auto dd = d(g, d(g, section(x)));
    if (!dd.is_zero()) r.fail("d^2 s(" + to_string(x) + ") = " + to_string(dd));
  }
  return r;
}

}  // namespace

CheckResult check_d_squared(const Grid& g) {
  return d_squared_with(g, "d2-minus", [](const Grid& gg, const auto& c) { return differential_minus(gg, c); });
}

CheckResult check_graded_d_squared(const Grid& g) {
  return d_squared_with(g, "d2-graded", [](const Grid& gg, const auto& c) { return graded_differential(gg, c); });
}

CheckResult check_mod2_reduction(const Grid& g) {
  CheckResult r{"mod2-reduction"};
  for (const auto& x : all_permutations(g.size())) {
    ++r.cases;
    const auto spin = differential_minus(g, section(x)).reduced_mod2();
    const auto plain = unsigned_differential_mod2(g, x).reduced_mod2();
    if (spin != plain) r.fail("at " + to_string(x) + ": " + to_string(spin) + " vs " + to_string(plain));
  }
  return r;
}

CheckResult check_signed_matches_spin(const Grid& g, CocycleOrder order) {
  CheckResult r{"signed-matches-spin/" + to_string(order)};
  for (const auto& x : all_permutations(g.size())) {
    ++r.cases;
    if (differential_signed(g, x, order) != differential_minus(g, section(x)))
      r.fail("first difference at " + to_string(x));
  }
  return r;
}

CheckResult check_sign_axioms(const Grid& g, CocycleOrder order) {
  CheckResult r{"sign-axioms/" + to_string(order)};
  const auto rep = check_sign_axioms(g, spin_sign_function(g, order));
  r.cases = rep.squares + rep.vertical_annuli + rep.horizontal_annuli;
  r.failures = rep.violation_count;
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    std::ostringstream os;
    os << v.axiom << " at " << to_string(v.start) << " labels";
    for (const auto& t : v.labels) os << ' ' << label_text(t);
    r.detail = os.str();
  }
  return r;
}

CheckResult check_grading_identities(const Grid& g) {
  CheckResult r{"grading-identities"};
  const int n = g.size();
  const auto& comp = g.components();
  for (const auto& x : all_permutations(n)) {
    const auto bx = g.bigrading(x);
    for (const auto& term : empty_rectangles(g, x)) {
      ++r.cases;
      const auto mc = g.marker_counts(g.realize_rectangle(x, term.label));
      const auto by = g.bigrading(term.target);
      const std::string where = to_string(x) + " " + label_text(term.label);
      if (bx.maslov - by.maslov != 1 - 2 * mc.o_total()) {
        r.fail("Maslov at " + where);
        continue;
      }
      for (int i = 1; i <= comp.count; ++i) {
        int xs = 0;
        int os = 0;
        for (int c = 0; c < n; ++c) {
          const auto cc = static_cast<std::size_t>(c);
          if (comp.comp_of_x[cc] == i) xs += mc.x_counts[cc];
          if (comp.comp_of_o[cc] == i) os += mc.o_counts[static_cast<std::size_t>(comp.o_variable[cc])];
        }
        const auto k = static_cast<std::size_t>(i - 1);
        if (bx.alexander2[k] - by.alexander2[k] != 2 * (xs - os)) {
          r.fail("Alexander component " + std::to_string(i) + " at " + where);
          break;
        }
      }
    }
  }
  return r;
}

CheckResult check_spin_relations(int n) {
  CheckResult r{"spin-relations"};
  const auto z = spin_central(n);
  const auto one = spin_identity(n);
  auto expect = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  };
  expect(multiply(z, z) == one, "z^2 != 1");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto tij = lift(n, {i, j});
      const std::string ij = label_text({i, j});
      expect(multiply(z, tij) == multiply(tij, z), "z does not commute with t" + ij);
      expect(lift(n, {j, i}) == z_times(tij), "t_ji != z t_ij for " + ij);
      expect(multiply(tij, tij) == z, "t" + ij + "^2 != z");
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto tjk = lift(n, {j, k});
        const auto tik = lift(n, {i, k});
        const std::string ijk = ij + label_text({j, k});
        expect(mul3(tij, tjk, tij) == tik, "t_ij t_jk t_ij != t_ik for " + ijk);
        expect(mul3(tjk, tij, tjk) == tik, "t_jk t_ij t_jk != t_ik for " + ijk);
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          const auto tkl = lift(n, {k, l});
          expect(multiply(tij, tkl) == z_times(multiply(tkl, tij)),
                 "t" + ij + " and t" + label_text({k, l}) + " commute");
        }
      }
    }
  }
  return r;
}

CheckResult check_cocycle_condition(int n, std::int64_t samples, std::mt19937_64& rng) {
  CheckResult r{"cocycle-condition"};
  auto one = [&](const Permutation& x, const Permutation& y, const Permutation& w) {
    ++r.cases;
    const int d = cocycle(y, w) * cocycle(compose(x, y), w) * cocycle(x, compose(y, w)) * cocycle(x, y);
    if (d != 1) r.fail("x=" + to_string(x) + " y=" + to_string(y) + " w=" + to_string(w));
  };
  if (samples == 0) {
    const auto perms = all_permutations(n);
    for (const auto& x : perms)
      for (const auto& y : perms)
        for (const auto& w : perms) one(x, y, w);
    return r;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
  for (std::int64_t s = 0; s < samples; ++s)
    one(Permutation::unrank(n, pick(rng)), Permutation::unrank(n, pick(rng)), Permutation::unrank(n, pick(rng)));
  return r;
}

CheckResult check_group_order(int n) {
  CheckResult r{"group-order"};
  std::set<SpinElement> seen{spin_identity(n)};
  std::vector<SpinElement> frontier{spin_identity(n)};
  std::vector<SpinElement> gens{spin_central(n)};
  for (int i = 0; i + 1 < n; ++i) gens.push_back(lift(n, {i, i + 1}));
  while (!frontier.empty()) {
    std::vector<SpinElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        const auto h = multiply(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  r.cases = static_cast<std::int64_t>(seen.size());
  if (seen.size() != 2 * factorial(n))
    r.fail("closure has " + std::to_string(seen.size()) + " elements, expected " + std::to_string(2 * factorial(n)));
  return r;
}

}  // namespace spinfloer
