#include "spinfloer/moves.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "spinfloer/sign_complex.hpp"

namespace spinfloer {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, const std::string& line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number in move '" + line + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad number in move '" + line + "'");
  return v;
}

StabilizationVariant parse_variant(const std::string& s) {
  if (s.size() != 3) throw std::invalid_argument("bad stabilization variant '" + s + "'");
  StabilizationVariant v;
  if (s[0] == 'X') {
    v.split = MarkerType::X;
  } else if (s[0] == 'O') {
    v.split = MarkerType::O;
  } else {
    throw std::invalid_argument("bad stabilization variant '" + s + "'");
  }
  const std::string corner = s.substr(1);
  if (corner == "NW") {
    v.empty = Corner::NW;
  } else if (corner == "NE") {
    v.empty = Corner::NE;
  } else if (corner == "SW") {
    v.empty = Corner::SW;
  } else if (corner == "SE") {
    v.empty = Corner::SE;
  } else {
    throw std::invalid_argument("bad stabilization variant '" + s + "'");
  }
  return v;
}

// (dc, dr) offsets of a corner inside a 2x2 block.
std::pair<int, int> offsets(Corner c) {
  switch (c) {
    case Corner::NW: return {0, 1};
    case Corner::NE: return {1, 1};
    case Corner::SW: return {0, 0};
    case Corner::SE: return {1, 0};
  }
  return {0, 0};
}

std::vector<int> inverse_rows(const std::vector<int>& rows) {
  std::vector<int> inv(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) inv[at(rows[c])] = static_cast<int>(c);
  return inv;
}

// Disjoint or strictly nested; interleaved or touching spans fail.
bool spans_compatible(int a1, int b1, int a2, int b2) {
  if (a1 > b1) std::swap(a1, b1);
  if (a2 > b2) std::swap(a2, b2);
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  const bool disjoint = b1 < a2 || b2 < a1;
  const bool nested = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
  return disjoint || nested;
}

GridDiagram stabilize(const GridDiagram& g, const MoveSpec& m) {
  const int n = g.n;
  if (m.index < 0 || m.index >= n) throw BadPosition("stabilization position out of range");
  if (n + 1 > kMaxDegree) throw BadPosition("stabilization would exceed the maximal grid size");
  const bool split_x = m.variant.split == MarkerType::X;
  const auto& z_rows = split_x ? g.x_rows : g.o_rows;
  const auto& w_rows = split_x ? g.o_rows : g.x_rows;

  int c = m.index;
  int r = 0;
  if (m.along_row) {
    r = m.index;
    c = inverse_rows(z_rows)[at(r)];
  } else {
    r = z_rows[at(c)];
  }
  const int c_w = inverse_rows(w_rows)[at(r)];  // other marker in row r
  const int r_w = w_rows[at(c)];                // other marker in column c
  const auto [dc, dr] = offsets(m.variant.empty);

  auto col_map = [&](int k) { return k <= c ? k : k + 1; };
  auto row_map = [&](int k) { return k <= r ? k : k + 1; };

  std::vector<int> z(at(n + 1), -1);
  std::vector<int> w(at(n + 1), -1);
  for (int k = 0; k < n; ++k) {
    if (k == c) continue;
    z[at(col_map(k))] = row_map(z_rows[at(k)]);
    w[at(col_map(k))] = k == c_w ? r + dr : row_map(w_rows[at(k)]);
  }
  // The block: Z on one diagonal, W opposite the empty corner; column c + dc
  // keeps the W that column c had.
  z[at(c + dc)] = r + 1 - dr;
  w[at(c + dc)] = row_map(r_w);
  z[at(c + 1 - dc)] = r + dr;
  w[at(c + 1 - dc)] = r + 1 - dr;

  GridDiagram out{n + 1, split_x ? w : z, split_x ? z : w};
  validate(out);
  return out;
}

struct Block {
  MarkerType split;
  Corner empty;
};

// Recognizes a destabilizable 2x2 block with bottom-left cell (c, r).
std::optional<Block> destabilization_block(const GridDiagram& g, int c, int r) {
  const int n = g.n;
  if (n < 3 || c < 0 || r < 0 || c > n - 2 || r > n - 2) return std::nullopt;
  // 0 empty, 1 O, 2 X
  auto cell = [&](int dc, int dr) {
    if (g.o_rows[at(c + dc)] == r + dr) return 1;
    if (g.x_rows[at(c + dc)] == r + dr) return 2;
    return 0;
  };
  for (Corner corner : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
    const auto [dc, dr] = offsets(corner);
    if (cell(dc, dr) != 0) continue;
    const int w = cell(1 - dc, 1 - dr);
    const int z1 = cell(dc, 1 - dr);
    const int z2 = cell(1 - dc, dr);
    if (w == 0 || z1 == 0 || z1 != z2 || z1 == w) continue;
    return Block{z1 == 2 ? MarkerType::X : MarkerType::O, corner};
  }
  return std::nullopt;
}

GridDiagram destabilize(const GridDiagram& g, const MoveSpec& m) {
  const auto block = destabilization_block(g, m.col, m.row);
  if (!block) throw BadPosition("no destabilizable 2x2 block at (" + std::to_string(m.col) + ", " + std::to_string(m.row) + ")");
  const int n = g.n;
  const auto [dc, dr] = offsets(block->empty);
  const int drop_col = m.col + 1 - dc;
  const int drop_row = m.row + 1 - dr;
  auto col_map = [&](int k) { return k < drop_col ? k : k - 1; };
  auto row_map = [&](int k) { return k < drop_row ? k : k - 1; };

  std::vector<int> o(at(n - 1), -1);
  std::vector<int> x(at(n - 1), -1);
  for (int k = 0; k < n; ++k) {
    if (k == drop_col) continue;
    const int ro = g.o_rows[at(k)];
    const int rx = g.x_rows[at(k)];
    if (ro != drop_row) o[at(col_map(k))] = row_map(ro);
    if (rx != drop_row) x[at(col_map(k))] = row_map(rx);
  }
  auto& z = block->split == MarkerType::X ? x : o;
  z[at(col_map(m.col + dc))] = row_map(m.row + dr);
  GridDiagram out{n - 1, o, x};
  validate(out);
  return out;
}

}  // namespace

std::string to_string(const StabilizationVariant& v) {
  std::string s = v.split == MarkerType::X ? "X" : "O";
  switch (v.empty) {
    case Corner::NW: return s + "NW";
    case Corner::NE: return s + "NE";
    case Corner::SW: return s + "SW";
    case Corner::SE: return s + "SE";
  }
  return s;
}

MoveSpec parse_move(const std::string& line) {
  const auto t = tokens(line);
  auto fail = [&]() -> MoveSpec { throw std::invalid_argument("unrecognized move '" + line + "'"); };
  if (t.empty()) return fail();
  MoveSpec m;
  if (t[0] == "cyclic" && t.size() == 2) {
    if (t[1] == "up") {
      m.kind = MoveKind::CyclicUp;
    } else if (t[1] == "down") {
      m.kind = MoveKind::CyclicDown;
    } else if (t[1] == "left") {
      m.kind = MoveKind::CyclicLeft;
    } else if (t[1] == "right") {
      m.kind = MoveKind::CyclicRight;
    } else {
      return fail();
    }
    return m;
  }
  if (t[0] == "commute" && t.size() == 3) {
    if (t[1] == "cols" || t[1] == "columns") {
      m.kind = MoveKind::CommuteColumns;
    } else if (t[1] == "rows") {
      m.kind = MoveKind::CommuteRows;
    } else {
      return fail();
    }
    m.index = parse_int(t[2], line);
    return m;
  }
  if (t[0] == "stabilize" && t.size() == 4) {
    m.kind = MoveKind::Stabilize;
    if (t[1] == "row") {
      m.along_row = true;
    } else if (t[1] == "col" || t[1] == "column") {
      m.along_row = false;
    } else {
      return fail();
    }
    m.index = parse_int(t[2], line);
    m.variant = parse_variant(t[3]);
    return m;
  }
  if (t[0] == "destabilize" && t.size() == 3) {
    m.kind = MoveKind::Destabilize;
    m.col = parse_int(t[1], line);
    m.row = parse_int(t[2], line);
    return m;
  }
  return fail();
}

std::vector<MoveSpec> parse_move_script(const std::string& text) {
  std::vector<MoveSpec> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (tokens(line).empty()) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

std::string to_string(const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::CyclicUp: return "cyclic up";
    case MoveKind::CyclicDown: return "cyclic down";
    case MoveKind::CyclicLeft: return "cyclic left";
    case MoveKind::CyclicRight: return "cyclic right";
    case MoveKind::CommuteColumns: return "commute cols " + std::to_string(m.index);
    case MoveKind::CommuteRows: return "commute rows " + std::to_string(m.index);
    case MoveKind::Stabilize:
      return std::string("stabilize ") + (m.along_row ? "row " : "col ") + std::to_string(m.index) + " " +
             to_string(m.variant);
    case MoveKind::Destabilize: return "destabilize " + std::to_string(m.col) + " " + std::to_string(m.row);
  }
  return "?";
}

bool commutation_is_legal(const GridDiagram& g, const MoveSpec& m) {
  const int i = m.index;
  if (i < 0 || i > g.n - 2) return false;
  if (m.kind == MoveKind::CommuteColumns)
    return spans_compatible(g.o_rows[at(i)], g.x_rows[at(i)], g.o_rows[at(i + 1)], g.x_rows[at(i + 1)]);
  if (m.kind == MoveKind::CommuteRows) {
    const auto o_col = inverse_rows(g.o_rows);
    const auto x_col = inverse_rows(g.x_rows);
    return spans_compatible(o_col[at(i)], x_col[at(i)], o_col[at(i + 1)], x_col[at(i + 1)]);
  }
  return false;
}

GridDiagram apply_move(const GridDiagram& g, const MoveSpec& m) {
  validate(g);
  const int n = g.n;
  GridDiagram out = g;
  switch (m.kind) {
    case MoveKind::CyclicUp:
    case MoveKind::CyclicDown: {
      const int step = m.kind == MoveKind::CyclicUp ? 1 : n - 1;
      for (int c = 0; c < n; ++c) {
        out.o_rows[at(c)] = (g.o_rows[at(c)] + step) % n;
        out.x_rows[at(c)] = (g.x_rows[at(c)] + step) % n;
      }
      return out;
    }
    case MoveKind::CyclicLeft:
    case MoveKind::CyclicRight: {
      const int step = m.kind == MoveKind::CyclicRight ? 1 : n - 1;
      for (int c = 0; c < n; ++c) {
        out.o_rows[at((c + step) % n)] = g.o_rows[at(c)];
        out.x_rows[at((c + step) % n)] = g.x_rows[at(c)];
      }
      return out;
    }
    case MoveKind::CommuteColumns:
    case MoveKind::CommuteRows: {
      if (m.index < 0 || m.index > n - 2) throw BadPosition("commutation index out of range");
      if (!commutation_is_legal(g, m)) throw IllegalCommutation("spans interleave or touch: " + to_string(m));
      const int i = m.index;
      if (m.kind == MoveKind::CommuteColumns) {
        std::swap(out.o_rows[at(i)], out.o_rows[at(i + 1)]);
        std::swap(out.x_rows[at(i)], out.x_rows[at(i + 1)]);
      } else {
        auto swap_row = [&](int r) { return r == i ? i + 1 : r == i + 1 ? i : r; };
        for (int c = 0; c < n; ++c) {
          out.o_rows[at(c)] = swap_row(g.o_rows[at(c)]);
          out.x_rows[at(c)] = swap_row(g.x_rows[at(c)]);
        }
      }
      return out;
    }
    case MoveKind::Stabilize: return stabilize(g, m);
    case MoveKind::Destabilize: return destabilize(g, m);
  }
  return out;
}

std::vector<MoveSpec> legal_commutations(const GridDiagram& g) {
  std::vector<MoveSpec> out;
  for (MoveKind kind : {MoveKind::CommuteColumns, MoveKind::CommuteRows}) {
    for (int i = 0; i + 1 < g.n; ++i) {
      MoveSpec m;
      m.kind = kind;
      m.index = i;
      if (commutation_is_legal(g, m)) out.push_back(m);
    }
  }
  return out;
}

std::vector<MoveSpec> all_stabilizations(const GridDiagram& g) {
  std::vector<MoveSpec> out;
  for (int r = 0; r < g.n; ++r)
    for (MarkerType t : {MarkerType::X, MarkerType::O})
      for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
        MoveSpec m;
        m.kind = MoveKind::Stabilize;
        m.index = r;
        m.along_row = true;
        m.variant = {t, c};
        out.push_back(m);
      }
  return out;
}

std::vector<MoveSpec> legal_destabilizations(const GridDiagram& g) {
  std::vector<MoveSpec> out;
  for (int c = 0; c + 1 < g.n; ++c)
    for (int r = 0; r + 1 < g.n; ++r)
      if (destabilization_block(g, c, r)) {
        MoveSpec m;
        m.kind = MoveKind::Destabilize;
        m.col = c;
        m.row = r;
        out.push_back(m);
      }
  return out;
}

MoveSpec random_legal_move(const GridDiagram& g, std::mt19937_64& rng, int max_size) {
  std::vector<std::vector<MoveSpec>> families;
  std::vector<MoveSpec> cyclic;
  for (MoveKind k : {MoveKind::CyclicUp, MoveKind::CyclicDown, MoveKind::CyclicLeft, MoveKind::CyclicRight}) {
    MoveSpec m;
    m.kind = k;
    cyclic.push_back(m);
  }
  families.push_back(std::move(cyclic));
  if (auto c = legal_commutations(g); !c.empty()) families.push_back(std::move(c));
  if (g.n < max_size) families.push_back(all_stabilizations(g));
  if (auto d = legal_destabilizations(g); !d.empty()) families.push_back(std::move(d));
  const auto& family = families[std::uniform_int_distribution<std::size_t>(0, families.size() - 1)(rng)];
  return family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
}

SpinElement sigma_lift(int n) {
  GeneratorWord w;
  for (int i = 0; i + 1 < n; ++i) w.factors.push_back({i, i + 1});
  return evaluate(n, w);
}

SpinElement phi_cyclic_vertical(const SpinElement& x) { return multiply(sigma_lift(x.perm.size()), x); }

SpinElement phi_cyclic_horizontal(const SpinElement& x) {
  const int n = x.perm.size();
  SpinElement y = multiply(x, inverse(sigma_lift(n)));
  const int eps_sigma = (n - 1) % 2;
  y.bit ^= eps_sigma * signature(x.perm);
  return y;
}

ChainElement apply_phi(const ChainElement& c, PhiKind kind, const std::vector<int>& variable_map) {
  ChainElement out;
  for (const auto& [y, poly] : c.terms()) {
    const SpinElement e = kind == PhiKind::Vertical ? phi_cyclic_vertical(section(y)) : phi_cyclic_horizontal(section(y));
    const std::int64_t sign = e.bit ? -1 : 1;
    for (const auto& [m, coef] : poly.terms()) out.add(e.perm, m.relabeled(variable_map), sign * coef);
  }
  return out;
}

PhiCheck check_phi(const GridDiagram& g, PhiKind kind, const std::vector<Permutation>* sample) {
  MoveSpec move;
  move.kind = kind == PhiKind::Vertical ? MoveKind::CyclicUp : MoveKind::CyclicRight;
  const Grid gg(g);
  const Grid gh(apply_move(g, move));
  const int n = g.n;

  PhiCheck report;
  report.kind = kind;
  const auto& cg = gg.components();
  const auto& ch = gh.components();
  report.variable_map.assign(at(n), 0);
  report.component_map.assign(at(cg.count), 0);
  for (int c = 0; c < n; ++c) {
    const int image = kind == PhiKind::Vertical ? c : (c + 1) % n;
    report.variable_map[at(cg.o_variable[at(c)])] = ch.o_variable[at(image)];
    report.component_map[at(cg.comp_of_o[at(c)] - 1)] = ch.comp_of_o[at(image)];
  }

  const std::vector<Permutation> everything = sample ? std::vector<Permutation>{} : all_permutations(n);
  const auto& gens = sample ? *sample : everything;
  auto phi = [&](const SpinElement& e) { return kind == PhiKind::Vertical ? phi_cyclic_vertical(e) : phi_cyclic_horizontal(e); };

  std::set<SpinElement> images;
  bool first = true;
  for (const auto& x : gens) {
    ++report.generators;
    const SpinElement sx = section(x);
    const SpinElement px = phi(sx);
    images.insert(px);
    images.insert(phi(SpinElement{x, 1}));

    const ChainElement lhs = apply_phi(differential_minus(gg, sx), kind, report.variable_map);
    const ChainElement rhs = differential_minus(gh, px);
    if (!(lhs == rhs)) {
      if (!report.first_mismatch) report.first_mismatch = x;
      ++report.chain_mismatches;
    }

    const Bigrading bg = gg.bigrading(x);
    const Bigrading bh = gh.bigrading(px.perm);
    const int dm = bh.maslov - bg.maslov;
    std::vector<int> da(at(cg.count));
    for (int i = 0; i < cg.count; ++i)
      da[at(i)] = bh.alexander2[at(report.component_map[at(i)] - 1)] - bg.alexander2[at(i)];
    if (first) {
      report.maslov_shift = dm;
      report.alexander2_shift = da;
      first = false;
    } else if (dm != report.maslov_shift || da != report.alexander2_shift) {
      report.shifts_constant = false;
    }
  }
  report.bijective = images.size() == 2 * gens.size();
  return report;
}

namespace {

// Variable i of the result is variable map[i] - 1 of p (maps are 1-based).
LaurentPolynomial permute_components(const LaurentPolynomial& p, const std::vector<int>& map) {
  LaurentPolynomial out(p.t_vars());
  for (const auto& [key, c] : p.terms()) {
    LaurentPolynomial::Key k(key.size());
    k[0] = key[0];
    for (std::size_t i = 0; i < map.size(); ++i) k[i + 1] = key[at(map[i])];
    out.add(k, c);
  }
  return out;
}

LaurentPolynomial::Key minimum_exponents(const LaurentPolynomial& p) {
  LaurentPolynomial::Key lo(at(p.t_vars() + 1), 0);
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    for (std::size_t i = 1; i < key.size(); ++i) lo[i] = first ? key[i] : std::min(lo[i], key[i]);
    first = false;
  }
  return lo;
}

// Shift s with p.shifted(s) == r, Alexander variables only.
std::optional<LaurentPolynomial::Key> alexander_shift(const LaurentPolynomial& p, const LaurentPolynomial& r) {
  if (p.is_zero() || r.is_zero()) {
    if (p == r) return LaurentPolynomial::Key(at(p.t_vars() + 1), 0);
    return std::nullopt;
  }
  const auto lp = minimum_exponents(p);
  const auto lr = minimum_exponents(r);
  LaurentPolynomial::Key s(lp.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) s[i] = lr[i] - lp[i];
  if (p.shifted(s) == r) return s;
  return std::nullopt;
}

LaurentPolynomial power_product(int t_vars, const std::vector<int>& exponents) {
  LaurentPolynomial p = LaurentPolynomial::constant(t_vars, 1);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (int k = 0; k < exponents[i]; ++k) p = p * LaurentPolynomial::tilde_factor(t_vars, static_cast<int>(i) + 1);
  return p;
}

}  // namespace

InvarianceReport invariance_report(const GridDiagram& g1, const GridDiagram& g2, int threads) {
  const Grid a(g1);
  const Grid b(g2);
  InvarianceReport r;
  auto second = std::async(std::launch::async, [&] { return bigraded_homology(b, threads); });
  r.tilde1 = bigraded_homology(a, threads);
  r.tilde2 = second.get();
  r.hat1 = hat_reduction(r.tilde1, a.components());
  r.hat2 = hat_reduction(r.tilde2, b.components());

  const int l = a.components().count;
  r.components_match = l == b.components().count;
  if (!r.components_match) return r;

  std::vector<int> perm(at(l));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const auto hat2 = permute_components(r.hat2.poincare, perm);
    const auto shift = alexander_shift(r.hat1.poincare, hat2);
    if (!shift) continue;
    r.hat_equal = true;
    r.component_map = perm;
    r.alexander2_shift.assign(shift->begin() + 1, shift->end());

    std::vector<int> grow(at(l));
    std::vector<int> shrink(at(l));
    r.segment_change.assign(at(l), 0);
    for (int i = 0; i < l; ++i) {
      const int d = b.components().segments[at(perm[at(i)] - 1)] - a.components().segments[at(i)];
      r.segment_change[at(i)] = d;
      (d > 0 ? grow : shrink)[at(i)] = std::abs(d);
    }
    const auto lhs = r.tilde1.poincare.shifted(*shift) * power_product(l, grow);
    const auto rhs = permute_components(r.tilde2.poincare, perm) * power_product(l, shrink);
    r.tilde_relation = lhs == rhs;
    break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

}  // namespace spinfloer
