#include "spinfloer/homology.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

#include "spinfloer/sign_complex.hpp"

namespace spinfloer {

int HomologySummary::total_rank() const {
  int r = 0;
  for (const auto& [b, p] : pieces) r += p.free_rank;
  return r;
}

bool HomologySummary::torsion_free() const {
  for (const auto& [b, p] : pieces)
    if (!p.torsion.empty()) return false;
  return true;
}

GradedComplex graded_complex(const Grid& g) {
  GradedComplex c;
  for (const auto& x : all_permutations(g.size())) c.pieces[g.bigrading(x)].push_back(x);
  return c;
}

IntegerMatrix graded_boundary(const Grid& g, const std::vector<Permutation>& source,
                              const std::vector<Permutation>& target) {
  std::unordered_map<Permutation, int, PermutationHash> row_of;
  for (std::size_t k = 0; k < target.size(); ++k) row_of.emplace(target[k], static_cast<int>(k));
  IntegerMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (std::size_t col = 0; col < source.size(); ++col) {
    const ChainElement dx = graded_differential(g, section(source[col]));
    for (const auto& [y, poly] : dx.terms()) {
      const auto it = row_of.find(y);
      if (it == row_of.end()) throw std::logic_error("graded differential left its bigrading");
      for (const auto& [mono, coef] : poly.terms()) m.add(it->second, static_cast<int>(col), coef);
    }
  }
  m.normalize();
  return m;
}

namespace {

Bigrading lowered(const Bigrading& b) { return {b.maslov - 1, b.alexander2}; }

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("invariant factor does not fit in 64 bits");
  return v.get_si();
}

struct MapData {
  int rank = 0;
  std::vector<std::int64_t> factors;  // invariant factors > 1
};

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

LaurentPolynomial::Key key_of(const Bigrading& b) {
  LaurentPolynomial::Key k{b.maslov};
  k.insert(k.end(), b.alexander2.begin(), b.alexander2.end());
  return k;
}

Bigrading bigrading_of(const LaurentPolynomial::Key& k) {
  return {k[0], std::vector<int>(k.begin() + 1, k.end())};
}

}  // namespace

HomologySummary bigraded_homology(const Grid& g, int threads) {
  return bigraded_homology(g, graded_complex(g), threads);
}

HomologySummary bigraded_homology(const Grid& g, const GradedComplex& complex, int threads) {
  // One boundary map out of every piece that has a nonempty target piece.
  std::vector<Bigrading> sources;
  for (const auto& [b, gens] : complex.pieces)
    if (complex.pieces.count(lowered(b))) sources.push_back(b);

  std::vector<MapData> maps(sources.size());
  parallel_for(sources.size(), threads, [&](std::size_t k) {
    const auto& src = complex.pieces.at(sources[k]);
    const auto& dst = complex.pieces.at(lowered(sources[k]));
    const SmithForm s = smith_normal_form(graded_boundary(g, src, dst), false);
    maps[k].rank = s.rank();
    for (const auto& d : s.diagonal)
      if (d != 1) maps[k].factors.push_back(to_int64(d));
  });
  std::map<Bigrading, const MapData*> out_of;
  for (std::size_t k = 0; k < sources.size(); ++k) out_of[sources[k]] = &maps[k];

  const int l = g.components().count;
  HomologySummary h;
  h.flavor = "tilde";
  h.components = l;
  h.poincare = LaurentPolynomial(l);
  for (const auto& [b, gens] : complex.pieces) {
    PieceHomology p;
    p.generators = static_cast<int>(gens.size());
    if (const auto it = out_of.find(b); it != out_of.end()) p.rank_out = it->second->rank;
    Bigrading above{b.maslov + 1, b.alexander2};
    if (const auto it = out_of.find(above); it != out_of.end()) {
      p.rank_in = it->second->rank;
      p.torsion = it->second->factors;
    }
    p.free_rank = p.generators - p.rank_in - p.rank_out;
    if (p.free_rank == 0 && p.torsion.empty()) continue;
    h.poincare.add(key_of(b), p.free_rank);
    for (auto d : p.torsion) {
      auto [it, inserted] = h.torsion_poincare.try_emplace(d, LaurentPolynomial(l));
      it->second.add(key_of(b), 1);
    }
    h.pieces.emplace(b, std::move(p));
  }
  h.euler = h.poincare.at_q_minus_one();
  return h;
}

HomologySummary hat_reduction(const HomologySummary& tilde, const ComponentData& components) {
  if (tilde.flavor != "tilde") throw std::invalid_argument("hat_reduction expects a tilde summary");
  const int l = components.count;
  auto reduce = [&](LaurentPolynomial p) {
    for (int i = 1; i <= l; ++i)
      for (int k = 1; k < components.segments[static_cast<std::size_t>(i - 1)]; ++k) p = p.divide_tilde_factor(i);
    return p;
  };

  HomologySummary h;
  h.flavor = "hat";
  h.components = l;
  h.poincare = reduce(tilde.poincare);
  for (const auto& [d, poly] : tilde.torsion_poincare) {
    auto reduced = reduce(poly);
    if (!reduced.is_zero()) h.torsion_poincare.emplace(d, std::move(reduced));
  }
  for (const auto& [key, c] : h.poincare.terms()) {
    if (c < 0) throw NotDivisible("hat reduction produced a negative rank");
    h.pieces[bigrading_of(key)].free_rank = static_cast<int>(c);
  }
  for (const auto& [d, poly] : h.torsion_poincare) {
    for (const auto& [key, c] : poly.terms()) {
      if (c < 0) throw NotDivisible("hat reduction produced a negative torsion count");
      auto& torsion = h.pieces[bigrading_of(key)].torsion;
      torsion.insert(torsion.end(), static_cast<std::size_t>(c), d);
    }
  }
  for (auto& [b, p] : h.pieces) std::sort(p.torsion.begin(), p.torsion.end());
  h.euler = h.poincare.at_q_minus_one();
  return h;
}

LaurentPolynomial chain_euler(const Grid& g) {
  LaurentPolynomial e(g.components().count);
  for (const auto& x : all_permutations(g.size())) {
    const Bigrading b = g.bigrading(x);
    e.add(0, b.alexander2, (b.maslov % 2 == 0) ? 1 : -1);
  }
  return e;
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& euler, int components) {
  if (euler.is_zero()) return euler;
  const int l = euler.t_vars();
  LaurentPolynomial::Key shift(static_cast<std::size_t>(l + 1), 0);
  for (int i = 1; i <= l; ++i) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [k, c] : euler.terms()) {
      lo = std::min(lo, k[static_cast<std::size_t>(i)]);
      hi = std::max(hi, k[static_cast<std::size_t>(i)]);
    }
    // Keys are doubled exponents, so the midpoint shift is (lo + hi) / 2.
    const int centre = lo + hi;
    if (centre % 2 == 0) shift[static_cast<std::size_t>(i)] = -centre / 2;
  }
  LaurentPolynomial p = euler.shifted(shift);
  bool flip = false;
  if (components == 1) {
    flip = p.total() < 0;
  } else {
    flip = p.terms().rbegin()->second < 0;
  }
  return flip ? p.negated() : p;
}

LaurentPolynomial alexander_polynomial(const Grid& g, int threads) {
  const HomologySummary hat = hat_reduction(bigraded_homology(g, threads), g.components());
  return normalize_alexander(hat.euler, g.components().count);
}

}  // namespace spinfloer
