#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinfloer/checks.hpp"
#include "spinfloer/grid_io.hpp"
#include "spinfloer/homology.hpp"
#include "spinfloer/moves.hpp"

using namespace spinfloer;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kBadInput = 2;

// Thrown for anything the user supplied that we cannot use.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string half(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

json bigrading_json(const Bigrading& b) {
  return {{"maslov", b.maslov}, {"alexander2", b.alexander2}};
}

json summary_json(const HomologySummary& h) {
  json pieces = json::array();
  for (const auto& [b, p] : h.pieces) {
    json piece = bigrading_json(b);
    piece["free_rank"] = p.free_rank;
    piece["torsion"] = p.torsion;
    pieces.push_back(std::move(piece));
  }
  json torsion = json::object();
  for (const auto& [d, poly] : h.torsion_poincare) torsion[std::to_string(d)] = to_string(poly);
  return {{"flavor", h.flavor},
          {"components", h.components},
          {"pieces", std::move(pieces)},
          {"poincare", to_string(h.poincare)},
          {"euler", to_string(h.euler)},
          {"torsion_poincare", std::move(torsion)},
          {"total_rank", h.total_rank()}};
}

void print_summary(const HomologySummary& h) {
  std::cout << h.flavor << " homology, " << h.pieces.size() << " nonzero piece(s), total rank " << h.total_rank()
            << "\n";
  for (const auto& [b, p] : h.pieces) {
    if (p.free_rank == 0 && p.torsion.empty()) continue;
    std::cout << "  M=" << b.maslov << " A=(";
    for (std::size_t i = 0; i < b.alexander2.size(); ++i) std::cout << (i ? "," : "") << half(b.alexander2[i]);
    std::cout << ")  rank " << p.free_rank;
    for (auto d : p.torsion) std::cout << " + Z/" << d;
    std::cout << "\n";
  }
  std::cout << "poincare: " << to_string(h.poincare) << "\n";
  std::cout << "euler:    " << to_string(h.euler) << "\n";
}

json check_json(const CheckResult& r) {
  return {{"name", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}};
}

struct Options {
  int threads = 1;
  std::uint64_t seed = 1;
  bool as_json = false;
};

int cmd_validate(const std::string& path) {
  const Grid g(read_grid_file(path));
  std::cout << "ok: n=" << g.size() << " components=" << g.components().count << "\n";
  return kOk;
}

int cmd_info(const std::string& path, const std::string& generator, const Options& opt) {
  const Grid g(read_grid_file(path));
  const auto& comp = g.components();
  json out = {{"n", g.size()},
              {"components", comp.count},
              {"segments", comp.segments},
              {"o_variable", comp.o_variable},
              {"component_of_o", comp.comp_of_o}};
  if (!generator.empty()) {
    Permutation x;
    try {
      x = parse_permutation(generator);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad generator: ") + e.what());
    }
    if (x.size() != g.size()) throw InputError("generator must have " + std::to_string(g.size()) + " entries");
    out["generator"] = bigrading_json(g.bigrading(x));
    out["generator"]["images"] = x.images();
  }
  if (opt.as_json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "n = " << g.size() << "\ncomponents = " << comp.count << "\nsegments =";
  for (int s : comp.segments) std::cout << ' ' << s;
  std::cout << "\n";
  if (out.contains("generator")) {
    const auto b = g.bigrading(parse_permutation(generator));
    std::cout << "M = " << b.maslov << "\nA =";
    for (int a : b.alexander2) std::cout << ' ' << half(a);
    std::cout << "\n";
  }
  return kOk;
}

struct CheckFlags {
  bool d2 = false;
  bool signs = false;
  bool spin = false;
  bool mod2 = false;
  bool gradings = false;
  std::int64_t samples = 10000;
};

int cmd_check(const std::string& path, CheckFlags f, const Options& opt) {
  const Grid g(read_grid_file(path));
  if (!(f.d2 || f.signs || f.spin || f.mod2 || f.gradings)) f.d2 = f.signs = f.spin = f.mod2 = f.gradings = true;

  std::vector<CheckResult> results;
  if (f.d2) {
    results.push_back(check_d_squared(g));
    results.push_back(check_graded_d_squared(g));
  }
  if (f.signs) {
    results.push_back(check_sign_axioms(g, CocycleOrder::GeneratorFirst));
    results.push_back(check_signed_matches_spin(g, CocycleOrder::GeneratorFirst));
  }
  if (f.mod2) results.push_back(check_mod2_reduction(g));
  if (f.gradings) results.push_back(check_grading_identities(g));
  if (f.spin) {
    const int n = g.size();
    std::mt19937_64 rng(opt.seed);
    results.push_back(check_spin_relations(n));
    results.push_back(check_cocycle_condition(n, n <= 4 ? 0 : f.samples, rng));
    if (n <= 7) results.push_back(check_group_order(n));
  }

  bool all = true;
  json out = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    out.push_back(check_json(r));
  }
  if (opt.as_json) {
    std::cout << json{{"passed", all}, {"checks", std::move(out)}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
      if (!r.passed()) std::cout << ", " << r.failures << " failures; first: " << r.detail;
      std::cout << ")\n";
    }
  }
  return all ? kOk : kPropertyFailed;
}

int cmd_homology(const std::string& path, const std::string& flavor, const Options& opt) {
  const Grid g(read_grid_file(path));
  auto h = bigraded_homology(g, opt.threads);
  if (flavor == "hat") {
    try {
      h = hat_reduction(h, g.components());
    } catch (const NotDivisible& e) {
      std::cerr << "hat reduction failed: " << e.what() << "\n";
      return kPropertyFailed;
    }
  }
  if (opt.as_json)
    std::cout << summary_json(h).dump(2) << "\n";
  else
    print_summary(h);
  return kOk;
}

int cmd_alexander(const std::string& path, const Options& opt) {
  const Grid g(read_grid_file(path));
  LaurentPolynomial delta;
  try {
    delta = alexander_polynomial(g, opt.threads);
  } catch (const NotDivisible& e) {
    std::cerr << "hat reduction failed: " << e.what() << "\n";
    return kPropertyFailed;
  }
  if (opt.as_json)
    std::cout << json{{"components", g.components().count}, {"alexander", to_string(delta)}}.dump(2) << "\n";
  else
    std::cout << to_string(delta) << "\n";
  return kOk;
}

int cmd_move(const std::string& path, const std::string& script, const std::string& out_path) {
  auto g = read_grid_file(path);
  std::vector<MoveSpec> moves;
  try {
    moves = parse_move_script(read_text(script));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad move script: ") + e.what());
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      g = apply_move(g, moves[i]);
    } catch (const std::invalid_argument& e) {
      throw InputError("move " + std::to_string(i + 1) + " (" + to_string(moves[i]) + "): " + e.what());
    }
  }
  if (out_path.empty() || out_path == "-")
    std::cout << format_grid(g);
  else
    write_grid_file(out_path, g);
  return kOk;
}

int cmd_invariance(const std::string& p1, const std::string& p2, const Options& opt) {
  const auto g1 = read_grid_file(p1);
  const auto g2 = read_grid_file(p2);
  const auto rep = invariance_report(g1, g2, opt.threads);
  json out = {{"ok", rep.ok()},
              {"components_match", rep.components_match},
              {"hat_equal", rep.hat_equal},
              {"tilde_relation", rep.tilde_relation},
              {"component_map", rep.component_map},
              {"alexander2_shift", rep.alexander2_shift},
              {"segment_change", rep.segment_change},
              {"hat1", to_string(rep.hat1.poincare)},
              {"hat2", to_string(rep.hat2.poincare)},
              {"tilde1", to_string(rep.tilde1.poincare)},
              {"tilde2", to_string(rep.tilde2.poincare)}};
  if (opt.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "hat 1:   " << to_string(rep.hat1.poincare) << "\n"
              << "hat 2:   " << to_string(rep.hat2.poincare) << "\n"
              << "components match: " << (rep.components_match ? "yes" : "no") << "\n"
              << "hat equal up to Alexander shift: " << (rep.hat_equal ? "yes" : "no") << "\n"
              << "tilde factor relation: " << (rep.tilde_relation ? "yes" : "no") << "\n";
    if (rep.components_match) {
      std::cout << "segment change:";
      for (int s : rep.segment_change) std::cout << ' ' << s;
      std::cout << "\n";
    }
    std::cout << (rep.ok() ? "invariants match" : "invariants differ") << "\n";
  }
  return rep.ok() ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-extension grid homology toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker threads for homology")->check(CLI::Range(1, 256));
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_flag("--json", opt.as_json, "emit JSON");

  std::string file;
  std::string file2;

  auto* validate_cmd = app.add_subcommand("validate", "check that a grid file is well formed");
  validate_cmd->add_option("grid", file, "grid file")->required();

  std::string generator;
  auto* info_cmd = app.add_subcommand("info", "sizes, components and generator gradings");
  info_cmd->add_option("grid", file, "grid file")->required();
  info_cmd->add_option("--generator", generator, "generator as images, e.g. \"1 0 2\"");

  CheckFlags flags;
  auto* check_cmd = app.add_subcommand("check", "run property suites (all when none is selected)");
  check_cmd->add_option("grid", file, "grid file")->required();
  check_cmd->add_flag("--d2", flags.d2, "d o d = 0 for the minus and graded differentials");
  check_cmd->add_flag("--signs", flags.signs, "sign assignment axioms and signed differential");
  check_cmd->add_flag("--spin-relations", flags.spin, "relations, cocycle condition and order of the spin group");
  check_cmd->add_flag("--mod2", flags.mod2, "mod 2 reduction against the unsigned differential");
  check_cmd->add_flag("--gradings", flags.gradings, "rectangle grading identities");
  check_cmd->add_option("--samples", flags.samples, "random cocycle triples when n > 4")->check(CLI::PositiveNumber);

  std::string flavor = "tilde";
  auto* homology_cmd = app.add_subcommand("homology", "bigraded homology");
  homology_cmd->add_option("grid", file, "grid file")->required();
  homology_cmd->add_option("--flavor", flavor, "tilde or hat")->check(CLI::IsMember({"tilde", "hat"}));

  auto* alexander_cmd = app.add_subcommand("alexander", "normalized Alexander polynomial");
  alexander_cmd->add_option("grid", file, "grid file")->required();

  std::string script;
  std::string out_path;
  auto* move_cmd = app.add_subcommand("move", "apply a move script");
  move_cmd->add_option("grid", file, "grid file")->required();
  move_cmd->add_option("--script", script, "move script")->required();
  move_cmd->add_option("-o,--output", out_path, "output grid file (default stdout)");

  auto* invariance_cmd = app.add_subcommand("invariance", "compare the invariants of two grids");
  invariance_cmd->add_option("grid1", file, "first grid file")->required();
  invariance_cmd->add_option("grid2", file2, "second grid file")->required();

  // Global flags are accepted after the verb as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*info_cmd) return cmd_info(file, generator, opt);
    if (*check_cmd) return cmd_check(file, flags, opt);
    if (*homology_cmd) return cmd_homology(file, flavor, opt);
    if (*alexander_cmd) return cmd_alexander(file, opt);
    if (*move_cmd) return cmd_move(file, script, out_path);
    if (*invariance_cmd) return cmd_invariance(file, file2, opt);
  } catch (const std::exception& e) {
    // GridError, InputError and anything else thrown while reading input
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
