#include "orbital/io.hpp"

#include <fstream>
#include <sstream>

#include "orbital/errors.hpp"

namespace orbital {

namespace {

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
  }
  return {};
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

}  // namespace

Perm parse_permutation(const std::string& line, int degree) {
  if (line.find('(') != std::string::npos) {
    // disjoint cycle notation
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    std::vector<bool> moved(degree, false);
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      if (line[pos] != '(') throw ParseError("expected '(' in cycle notation: " + line);
      std::size_t close = line.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced cycle: " + line);
      std::istringstream body(line.substr(pos + 1, close - pos - 1));
      std::vector<int> cycle;
      int v;
      while (body >> v) cycle.push_back(v);
      if (!body.eof()) throw ParseError("bad cycle entry: " + line);
      for (int point : cycle) {
        if (point < 0 || point >= degree)
          throw ParseError("cycle point out of range: " + std::to_string(point));
        if (moved[point]) throw ParseError("point repeated across cycles: " + std::to_string(point));
        moved[point] = true;
      }
      for (std::size_t i = 0; i + 1 < cycle.size(); ++i) images[cycle[i]] = cycle[i + 1];
      if (cycle.size() >= 2) images[cycle.back()] = cycle.front();
      pos = close + 1;
    }
    return Perm(std::move(images));
  }
  std::istringstream body(line);
  std::vector<int> images;
  int v;
  while (body >> v) images.push_back(v);
  if (!body.eof()) throw ParseError("bad image table entry: " + line);
  if (static_cast<int>(images.size()) != degree)
    throw ParseError("image table has " + std::to_string(images.size()) + " entries, expected " +
                     std::to_string(degree));
  try {
    return Perm(std::move(images));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid permutation: ") + e.what());
  }
}

PermGroup read_group(std::istream& in) {
  std::string header = next_content_line(in);
  std::istringstream hs(header);
  std::string tag;
  int n = 0;
  hs >> tag >> n;
  if (tag != "perm-group" || n < 1 || !hs)
    throw ParseError("expected header 'perm-group <n>', got: " + header);
  std::vector<Perm> gens;
  for (;;) {
    std::string line = next_content_line(in);
    if (line.empty()) break;
    gens.push_back(parse_permutation(line, n));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup read_group_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g) {
  out << "perm-group " << g.degree() << "\n";
  for (const Perm& p : g.generators()) {
    for (int i = 0; i < g.degree(); ++i) {
      if (i) out << ' ';
      out << p[i];
    }
    out << "\n";
  }
}

CoherentConfiguration read_scheme(std::istream& in) {
  std::string header = next_content_line(in);
  std::istringstream hs(header);
  std::string tag;
  int n = 0, r = 0;
  hs >> tag >> n >> r;
  if (tag != "coherent-config" || n < 1 || r < 1 || !hs)
    throw ParseError("expected header 'coherent-config <n> <r>', got: " + header);
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    std::string line = next_content_line(in);
    if (line.empty()) throw ParseError("scheme file: missing row " + std::to_string(row));
    std::istringstream body(line);
    int v;
    int count = 0;
    while (body >> v) {
      if (v < 0 || v >= r) throw ParseError("color id out of range: " + std::to_string(v));
      colors.push_back(v);
      ++count;
    }
    if (count != n)
      throw ParseError("scheme row " + std::to_string(row) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(n));
  }
  auto x = CoherentConfiguration::from_matrix(n, std::move(colors));
  if (x.rank() != r)
    throw ParseError("scheme file declares rank " + std::to_string(r) + " but uses " +
                     std::to_string(x.rank()) + " colors");
  return x;
}

CoherentConfiguration read_scheme_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_scheme(in);
}

void write_scheme(std::ostream& out, const CoherentConfiguration& x) {
  const int n = x.degree();
  out << "coherent-config " << n << ' ' << x.rank() << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << x.color(a, b);
    }
    out << "\n";
  }
}

std::vector<BinaryRelation> read_relations(std::istream& in) {
  std::string header = next_content_line(in);
  std::istringstream hs(header);
  std::string tag;
  int n = 0, m = 0;
  hs >> tag >> n >> m;
  if (tag != "relations" || n < 1 || m < 1 || !hs)
    throw ParseError("expected header 'relations <n> <m>', got: " + header);
  std::vector<BinaryRelation> rels;
  for (int i = 0; i < m; ++i) {
    std::string line = next_content_line(in);
    if (line.empty()) throw ParseError("relations file: missing relation " + std::to_string(i));
    std::istringstream body(line);
    std::vector<int> entries;
    int v;
    while (body >> v) entries.push_back(v);
    if (entries.empty() || entries.size() % 2 != 0)
      throw ParseError("relation " + std::to_string(i) + " needs an even number of entries");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 0; j < entries.size(); j += 2) {
      if (entries[j] < 0 || entries[j] >= n || entries[j + 1] < 0 || entries[j + 1] >= n)
        throw ParseError("relation pair out of range in relation " + std::to_string(i));
      pairs.emplace_back(entries[j], entries[j + 1]);
    }
    rels.emplace_back(n, std::move(pairs));
  }
  return rels;
}

ColorBijection read_color_bijection(std::istream& in, int rank) {
  std::vector<int> map(rank, -1);
  int assigned = 0;
  for (;;) {
    std::string line = next_content_line(in);
    if (line.empty()) break;
    std::istringstream body(line);
    int from = -1, to = -1;
    body >> from >> to;
    if (!body || from < 0 || from >= rank || to < 0 || to >= rank)
      throw ParseError("bad psi line: " + line);
    if (map[from] != -1) throw ParseError("psi maps color twice: " + std::to_string(from));
    map[from] = to;
    ++assigned;
  }
  if (assigned != rank) throw ParseError("psi file does not cover all colors");
  try {
    return ColorBijection(std::move(map));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("psi is not a bijection: ") + e.what());
  }
}

void write_iso_set(std::ostream& out, const IsoSet& s) {
  if (s.symbolic_sym) {
    out << "SYM " << s.degree << "\n";
    return;
  }
  if (s.perms.empty()) {
    out << "EMPTY\n";
    return;
  }
  out << s.perms.size() << "\n";
  for (const Perm& p : s.perms) {
    for (int i = 0; i < s.degree; ++i) {
      if (i) out << ' ';
      out << p[i];
    }
    out << "\n";
  }
}

}  // namespace orbital
