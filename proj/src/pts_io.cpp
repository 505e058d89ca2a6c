#include "mcf/pts_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcf {

namespace {
std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}
}  // namespace

PtsFile parse_pts(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PtsFile f;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      std::istringstream h(line);
      std::string tag;
      if (!(h >> tag >> f.N >> f.q) || tag != "PG") throw std::invalid_argument("point file must start with \"PG N q\"");
      header = true;
      continue;
    }
    std::vector<Elem> v;
    std::istringstream row(line);
    std::string tok;
    while (std::getline(row, tok, ',')) {
      tok = trim(tok);
      std::size_t used = 0;
      long x = -1;
      try {
        x = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty() || x < 0 || x >= f.q)
        throw std::invalid_argument("bad coordinate on line " + std::to_string(lineno));
      v.push_back(static_cast<Elem>(x));
    }
    if (static_cast<int>(v.size()) != f.N + 1)
      throw std::invalid_argument("wrong coordinate count on line " + std::to_string(lineno));
    f.points.push_back(std::move(v));
  }
  if (!header) throw std::invalid_argument("empty point file");
  return f;
}

PtsFile read_pts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pts(ss.str());
}

PointSet to_point_set(const Space& space, const PtsFile& file) {
  if (file.N != space.dim() || file.q != space.q())
    throw std::invalid_argument("point file header does not match the space");
  PointSet S = space.empty_set();
  for (const auto& v : file.points)
    if (!S.insert(space.index_of(v))) throw std::invalid_argument("repeated projective point in point file");
  return S;
}

std::string format_pts(const Space& space, const PointSet& S) {
  std::string out = "PG " + std::to_string(space.dim()) + " " + std::to_string(space.q()) + "\n";
  for (PointIdx p : S.indices()) {
    auto c = space.coords(p);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(c[k]);
    }
    out += "\n";
  }
  return out;
}

void write_pts_file(const std::string& path, const Space& space, const PointSet& S) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << format_pts(space, S);
}

}  // namespace mcf
