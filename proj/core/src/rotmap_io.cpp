#include "splitcyc/rotmap_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "splitcyc/error.hpp"

namespace splitcyc {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

RotationMap read_rotmap(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(lineno, "empty input");
  {
    std::istringstream ss(line);
    std::string tag;
    int version = 0;
    if (!(ss >> tag >> version) || tag != "rotmap") fail(lineno, "expected 'rotmap 1'");
    if (version != 1) fail(lineno, "unsupported rotmap version " + std::to_string(version));
  }
  if (!next_content_line(in, line, lineno)) fail(lineno, "missing 'vertices' line");
  long long n = 0;
  {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag >> n) || tag != "vertices" || n <= 0) fail(lineno, "expected 'vertices <V>' with V > 0");
  }

  std::vector<std::vector<Vertex>> rot(n);
  std::vector<int> line_of(n, 0);
  for (long long k = 0; k < n; ++k) {
    if (!next_content_line(in, line, lineno)) fail(lineno, "expected " + std::to_string(n) + " rotation lines");
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "missing ':'");
    long long v = -1;
    {
      std::istringstream ss(line.substr(0, colon));
      if (!(ss >> v) || v < 0 || v >= n) fail(lineno, "bad vertex id");
      std::string rest;
      if (ss >> rest) fail(lineno, "bad vertex id");
    }
    if (line_of[v]) fail(lineno, "vertex " + std::to_string(v) + " already given on line " + std::to_string(line_of[v]));
    line_of[v] = lineno;
    std::istringstream ss(line.substr(colon + 1));
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long w = -1;
      try {
        w = std::stoll(tok, &used);
      } catch (const std::exception&) {
        fail(lineno, "bad neighbor '" + tok + "'");
      }
      if (used != tok.size()) fail(lineno, "bad neighbor '" + tok + "'");
      if (w < 0 || w >= n) fail(lineno, "neighbor " + tok + " out of range");
      rot[v].push_back(static_cast<Vertex>(w));
    }
  }
  if (next_content_line(in, line, lineno)) fail(lineno, "trailing content");

  if (auto bad = check_rotations(rot)) {
    int at = bad->vertex < static_cast<Vertex>(line_of.size()) ? line_of[bad->vertex] : lineno;
    throw Error(bad->code, "line " + std::to_string(at) + ": " + bad->detail);
  }
  if (n == 3 && rot[0].size() == 2 && rot[1].size() == 2 && rot[2].size() == 2)
    throw Error(ErrorCode::DegenerateSphere, "line " + std::to_string(line_of[0]) + ": the 3-cycle in the sphere");
  return RotationMap::build(std::move(rot));
}

RotationMap read_rotmap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_rotmap(in);
}

void write_rotmap(std::ostream& out, const RotationMap& map) {
  out << "rotmap 1\n" << "vertices " << map.vertex_count() << '\n';
  for (Vertex v = 0; v < map.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : map.rotation(v)) out << ' ' << w;
    out << '\n';
  }
}

void write_rotmap_file(const std::string& path, const RotationMap& map) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_rotmap(out, map);
}

}  // namespace splitcyc
