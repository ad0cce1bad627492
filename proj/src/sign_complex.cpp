#include "spinfloer/sign_complex.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace spinfloer {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Minus: return "minus";
    case Flavor::TildeGraded: return "tilde";
    case Flavor::Mod2Minus: return "mod2-minus";
    case Flavor::Mod2Unsigned: return "mod2-unsigned";
  }
  return "unknown";
}

std::string to_string(CocycleOrder o) {
  return o == CocycleOrder::GeneratorFirst ? "generator-first" : "transposition-first";
}

std::vector<RectangleTerm> empty_rectangles(const Grid& g, const Permutation& x) {
  std::vector<RectangleTerm> out;
  const SpinElement sx = section(x);
  for (const auto& [label, target] : g.rectangles_from(x)) {
    const RectangleInstance r = g.realize_rectangle(x, label);
    if (!is_empty(r)) continue;
    const MarkerCounts mc = g.marker_counts(r);
    RectangleTerm t;
    t.label = label;
    t.target = target;
    t.monomial = Monomial::from_exponents(mc.o_counts);
    t.o_total = mc.o_total();
    t.x_total = mc.x_total();
    t.spin_sign = right_mul_transposition(sx, label).bit ? -1 : 1;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

ChainElement spin_differential(const Grid& g, const SpinElement& x, bool graded_only) {
  ChainElement out;
  const std::int64_t base = x.bit ? -1 : 1;
  for (const auto& t : empty_rectangles(g, x.perm)) {
    if (graded_only && (t.o_total != 0 || t.x_total != 0)) continue;
    out.add(t.target, t.monomial, base * t.spin_sign);
  }
  return out;
}

template <typename Basis>
ChainElement extend_linearly(const Grid& g, const ChainElement& c, Basis&& basis) {
  ChainElement out;
  for (const auto& [x, poly] : c.terms()) {
    const ChainElement dx = basis(g, section(x));
    for (const auto& [m, coef] : poly.terms()) out.add_scaled(dx, m, coef);
  }
  return out;
}

}  // namespace

ChainElement differential_minus(const Grid& g, const SpinElement& x) {
  return spin_differential(g, x, false);
}

ChainElement differential_minus(const Grid& g, const ChainElement& c) {
  return extend_linearly(g, c, [](const Grid& gg, const SpinElement& e) { return differential_minus(gg, e); });
}

ChainElement graded_differential(const Grid& g, const SpinElement& x) {
  return spin_differential(g, x, true);
}

ChainElement graded_differential(const Grid& g, const ChainElement& c) {
  return extend_linearly(g, c, [](const Grid& gg, const SpinElement& e) { return graded_differential(gg, e); });
}

ChainElement unsigned_differential_mod2(const Grid& g, const Permutation& x) {
  ChainElement out;
  for (const auto& [label, target] : g.rectangles_from(x)) {
    const RectangleInstance r = g.realize_rectangle(x, label);
    if (!is_empty(r)) continue;
    out.add(target, Monomial::from_exponents(g.marker_counts(r).o_counts), 1);
  }
  return out.reduced_mod2();
}

ChainElement differential(const Grid& g, const SpinElement& x, Flavor flavor) {
  switch (flavor) {
    case Flavor::Minus: return differential_minus(g, x);
    case Flavor::TildeGraded: return graded_differential(g, x);
    case Flavor::Mod2Minus: return differential_minus(g, x).reduced_mod2();
    case Flavor::Mod2Unsigned: return unsigned_differential_mod2(g, x.perm);
  }
  throw std::invalid_argument("unknown flavor");
}

namespace {

int ordered_cocycle(const Permutation& x, TranspositionLabel label, CocycleOrder order) {
  const Permutation tau = Permutation::transposition(x.size(), label.a, label.b);
  return order == CocycleOrder::GeneratorFirst ? cocycle(x, tau) : cocycle(tau, x);
}

}  // namespace

int sign_assignment(const Grid& g, const Permutation& x, TranspositionLabel label, CocycleOrder order) {
  const RectangleInstance r = g.realize_rectangle(x, label);
  if (!is_empty(r)) throw std::invalid_argument("sign_assignment: rectangle is not empty");
  const int torn = is_horizontally_torn(r) ? -1 : 1;
  return torn * ordered_cocycle(x, label, order);
}

ChainElement differential_signed(const Grid& g, const Permutation& x, CocycleOrder order) {
  ChainElement out;
  for (const auto& [label, target] : g.rectangles_from(x)) {
    const RectangleInstance r = g.realize_rectangle(x, label);
    if (!is_empty(r)) continue;
    const int torn = is_horizontally_torn(r) ? -1 : 1;
    out.add(target, Monomial::from_exponents(g.marker_counts(r).o_counts),
            torn * ordered_cocycle(x, label, order));
  }
  return out;
}

SignFunction spin_sign_function(const Grid& g, CocycleOrder order) {
  return [&g, order](const Permutation& x, TranspositionLabel label) {
    return sign_assignment(g, x, label, order);
  };
}

namespace {

std::vector<std::vector<RectangleTerm>> rectangles_by_rank(const Grid& g, const std::vector<Permutation>& perms) {
  std::vector<std::vector<RectangleTerm>> out(perms.size());
  for (const auto& x : perms) out[x.rank()] = empty_rectangles(g, x);
  return out;
}

void paint(std::string& cells, const Grid& g, const Permutation& x, TranspositionLabel label) {
  const RectangleInstance r = g.realize_rectangle(x, label);
  const int n = g.size();
  for (int i = 0; i < r.cols.length; ++i) {
    for (int j = 0; j < r.rows.length; ++j) {
      const int c = (r.cols.start + i) % n;
      const int row = (r.rows.start + j) % n;
      ++cells[static_cast<std::size_t>(row * n + c)];
    }
  }
}

constexpr std::size_t kMaxWitnesses = 8;

}  // namespace

SignAxiomReport check_sign_axioms(const Grid& g, const SignFunction& s) {
  const int n = g.size();
  const auto perms = all_permutations(n);
  const auto rects = rectangles_by_rank(g, perms);

  struct Decomposition {
    int product;
    TranspositionLabel first;
    TranspositionLabel second;
  };
  // Key: start, end and the cell multiplicities of r1 * r2.
  std::map<std::string, std::vector<Decomposition>> domains;

  SignAxiomReport report;
  auto record = [&](std::string axiom, const Permutation& x, std::vector<TranspositionLabel> labels) {
    ++report.violation_count;
    if (report.violations.size() < kMaxWitnesses) report.violations.push_back({std::move(axiom), x, std::move(labels)});
  };

  for (const auto& x : perms) {
    for (const auto& r1 : rects[x.rank()]) {
      const int s1 = s(x, r1.label);
      for (const auto& r2 : rects[r1.target.rank()]) {
        const int product = s1 * s(r1.target, r2.label);
        if (r2.target == x) {
          if (r2.label == r1.label) {
            ++report.vertical_annuli;
            if (product != -1) record("V", x, {r1.label, r2.label});
          } else {
            ++report.horizontal_annuli;
            if (product != 1) record("H", x, {r1.label, r2.label});
          }
          continue;
        }
        std::string key = std::to_string(x.rank()) + ":" + std::to_string(r2.target.rank()) + ":";
        std::string cells(static_cast<std::size_t>(n * n), '\0');
        paint(cells, g, x, r1.label);
        paint(cells, g, r1.target, r2.label);
        key += cells;
        domains[key].push_back({product, r1.label, r2.label});
      }
    }
  }

  for (const auto& [key, decs] : domains) {
    ++report.squares;
    const auto colon = key.find(':');
    const Permutation start = Permutation::unrank(n, std::stoull(key.substr(0, colon)));
    if (decs.size() != 2) {
      std::vector<TranspositionLabel> labels;
      for (const auto& d : decs) {
        labels.push_back(d.first);
        labels.push_back(d.second);
      }
      record("Sq-structure", start, std::move(labels));
      continue;
    }
    if (decs[0].product != -decs[1].product) {
      record("Sq", start, {decs[0].first, decs[0].second, decs[1].first, decs[1].second});
    }
  }
  return report;
}

CoboundaryResult check_coboundary_equivalence(const Grid& g, const SignFunction& s1, const SignFunction& s2) {
  const int n = g.size();
  const auto perms = all_permutations(n);
  const auto rects = rectangles_by_rank(g, perms);
  const std::size_t count = perms.size();

  struct Edge {
    std::size_t to;
    int weight;
  };
  std::vector<std::vector<Edge>> adjacency(count);
  for (const auto& x : perms) {
    for (const auto& r : rects[x.rank()]) {
      const int w = s1(x, r.label) * s2(x, r.label);
      adjacency[x.rank()].push_back({r.target.rank(), w});
      adjacency[r.target.rank()].push_back({x.rank(), w});
    }
  }

  CoboundaryResult result;
  result.gauge.assign(count, 0);
  result.component_of.assign(count, -1);
  for (std::size_t root = 0; root < count; ++root) {
    if (result.component_of[root] >= 0) continue;
    const int id = result.graph_components++;
    result.component_of[root] = id;
    result.gauge[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : adjacency[v]) {
        if (result.component_of[e.to] >= 0) continue;
        result.component_of[e.to] = id;
        result.gauge[e.to] = result.gauge[v] * e.weight;
        queue.push_back(e.to);
      }
    }
  }

  result.consistent = true;
  for (const auto& x : perms) {
    for (const auto& r : rects[x.rank()]) {
      const int w = s1(x, r.label) * s2(x, r.label);
      if (result.gauge[x.rank()] * result.gauge[r.target.rank()] != w) {
        result.consistent = false;
        if (!result.witness) result.witness = std::make_pair(x, r.label);
      }
    }
  }
  return result;
}

}  // namespace spinfloer
