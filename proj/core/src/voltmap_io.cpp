#include "splitcyc/voltmap_io.hpp"

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

VoltageBaseMap read_voltmap(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(lineno, "empty input");
  {
    std::istringstream ss(line);
    std::string tag;
    int version = 0;
    if (!(ss >> tag >> version) || tag != "voltmap" || version != 1) fail(lineno, "expected 'voltmap 1'");
  }
  if (!next_content_line(in, line, lineno)) fail(lineno, "missing 'n' line");
  int n = 0;
  {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag >> n) || tag != "n") fail(lineno, "expected 'n <modulus>'");
  }
  if (!next_content_line(in, line, lineno)) fail(lineno, "missing 'rotation:' line");
  const std::string key = "rotation:";
  auto at = line.find(key);
  if (at == std::string::npos) fail(lineno, "expected 'rotation: a1 ... a_{n-1}'");
  std::istringstream ss(line.substr(at + key.size()));
  std::vector<int> seq;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int a = 0;
    try {
      a = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(lineno, "bad voltage '" + tok + "'");
    }
    if (used != tok.size()) fail(lineno, "bad voltage '" + tok + "'");
    seq.push_back(a);
  }
  const int rotation_line = lineno;
  if (next_content_line(in, line, lineno)) fail(lineno, "trailing content");
  try {
    return make_base(n, std::move(seq));
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(rotation_line) + ": " + e.what());
  }
}

VoltageBaseMap read_voltmap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_voltmap(in);
}

void write_voltmap(std::ostream& out, const VoltageBaseMap& base) {
  out << "voltmap 1\n" << "n " << base.n << "\nrotation:";
  for (int a : base.sequence) out << ' ' << a;
  out << '\n';
}

}  // namespace splitcyc
