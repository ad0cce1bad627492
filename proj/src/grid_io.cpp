#include "spinfloer/grid_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace spinfloer {

namespace {

[[noreturn]] void malformed(int line, const std::string& what) {
  throw GridError(GridErrorKind::Malformed, "line " + std::to_string(line) + ": " + what);
}

// Whole-token integer parse; rejects "3x", "+", overflow.
int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    malformed(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) malformed(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

GridDiagram parse_grid(const std::string& text) {
  std::optional<int> n;
  std::optional<std::vector<int>> o_rows;
  std::optional<std::vector<int>> x_rows;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<int> values;
    for (std::string tok; ls >> tok;) values.push_back(parse_int(tok, line));

    if (key == "n") {
      if (n) malformed(line, "duplicate n record");
      if (values.size() != 1) malformed(line, "n takes exactly one value");
      n = values.front();
    } else if (key == "O" || key == "X") {
      auto& slot = key == "O" ? o_rows : x_rows;
      if (slot) malformed(line, "duplicate " + key + " record");
      slot = std::move(values);
    } else {
      malformed(line, "unknown record '" + key + "'");
    }
  }
  if (!n) throw GridError(GridErrorKind::Malformed, "missing n record");
  if (!o_rows) throw GridError(GridErrorKind::Malformed, "missing O record");
  if (!x_rows) throw GridError(GridErrorKind::Malformed, "missing X record");
  if (*n >= 0 && (o_rows->size() != static_cast<std::size_t>(*n) || x_rows->size() != static_cast<std::size_t>(*n)))
    throw GridError(GridErrorKind::Malformed, "O and X need exactly n = " + std::to_string(*n) + " entries");

  GridDiagram g{*n, std::move(*o_rows), std::move(*x_rows)};
  validate(g);
  return g;
}

GridDiagram read_grid_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GridError(GridErrorKind::Malformed, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_grid(ss.str());
}

std::string format_grid(const GridDiagram& g) {
  std::ostringstream os;
  os << "n " << g.n << "\nO";
  for (int r : g.o_rows) os << ' ' << r;
  os << "\nX";
  for (int r : g.x_rows) os << ' ' << r;
  os << '\n';
  return os.str();
}

void write_grid_file(const std::string& path, const GridDiagram& g) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << format_grid(g);
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace spinfloer
