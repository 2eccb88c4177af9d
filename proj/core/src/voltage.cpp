#include "splitcyc/voltage.hpp"

#include <algorithm>
#include <cctype>

#include "splitcyc/error.hpp"

namespace splitcyc {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Appends lo, hi, lo+1, hi-1, ... meeting in the middle.
void interleave(std::vector<int>& q, int first, int second) {
  int a = first, b = second;
  const int step_a = first < second ? 1 : -1;
  while (step_a > 0 ? a <= b : a >= b) {
    q.push_back(a);
    if (a != b) q.push_back(b);
    a += step_a;
    b -= step_a;
  }
}

}  // namespace

VoltageBaseMap make_base(int n, std::vector<int> sequence) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidParameter, "modulus must be odd and >= 3, got " + std::to_string(n));
  if (static_cast<int>(sequence.size()) != n - 1)
    throw Error(ErrorCode::NotAPermutation,
                "expected " + std::to_string(n - 1) + " voltages, got " + std::to_string(sequence.size()));
  std::vector<char> seen(n, 0);
  for (int a : sequence) {
    if (a <= 0 || a >= n) throw Error(ErrorCode::NotAPermutation, "voltage " + std::to_string(a) + " not in 1.." + std::to_string(n - 1));
    if (seen[a]) throw Error(ErrorCode::NotAPermutation, "voltage " + std::to_string(a) + " repeated");
    seen[a] = 1;
  }
  return VoltageBaseMap{n, std::move(sequence)};
}

std::vector<VoltageTriple> base_faces(const VoltageBaseMap& base) {
  const VoltageBaseMap b = make_base(base.n, base.sequence);
  const int n = b.n;
  const int m = n - 1;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < m; ++k) pos[b.sequence[k]] = k;
  auto next = [&](int a) { return b.sequence[(pos[n - a] + 1) % m]; };

  std::vector<char> used(n, 0);
  std::vector<VoltageTriple> out;
  for (int a : b.sequence) {
    if (used[a]) continue;
    std::vector<int> face;
    for (int x = a; !used[x]; x = next(x)) {
      used[x] = 1;
      face.push_back(x);
    }
    if (face.size() != 3) {
      std::string s;
      for (int x : face) s += " " + std::to_string(x);
      throw Error(ErrorCode::NonTriangularFace, "base face of length " + std::to_string(face.size()) + ":" + s);
    }
    if ((face[0] + face[1] + face[2]) % n != 0)
      throw Error(ErrorCode::NonzeroFaceSum, "base face (" + std::to_string(face[0]) + "," + std::to_string(face[1]) +
                                                 "," + std::to_string(face[2]) + ") sums to nonzero");
    out.push_back({face[0], face[1], face[2]});
  }
  return out;
}

RotationMap derive(const VoltageBaseMap& base) {
  try {
    make_base(base.n, base.sequence);
  } catch (const Error& e) {
    throw Error(ErrorCode::DerivedNotSimple, e.what());
  }
  try {
    base_faces(base);
  } catch (const Error& e) {
    throw Error(ErrorCode::DerivedNotTriangular, e.what());
  }
  const int n = base.n;
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) {
    rot[i].reserve(n - 1);
    for (int a : base.sequence) rot[i].push_back(mod(i + a, n));
  }
  return RotationMap::build(std::move(rot));
}

VoltageBaseMap gross_tucker_base(int s) {
  if (s < 1) throw Error(ErrorCode::InvalidParameter, "s must be >= 1, got " + std::to_string(s));
  const int n = 12 * s + 7;
  std::vector<int> q{1};
  for (int j = 0; j < s; ++j) q.insert(q.end(), {9 * s + 6 + j, 2 * j + 2, 5 * s + 4 + j, 2 * j + 3});
  q.push_back(9 * s + 5);
  for (int j = 0; j < s; ++j) q.insert(q.end(), {n - 1 - 2 * j, 5 * s + 2 - j, n - 2 - 2 * j, 9 * s + 4 - j});
  interleave(q, 6 * s + 4, 8 * s + 4);
  q.push_back(10 * s + 6);
  interleave(q, 4 * s + 2, 2 * s + 2);
  q.push_back(5 * s + 3);
  return make_base(n, std::move(q));
}

VoltageBaseMap bundled_base(BundledBase name) {
  switch (name) {
    case BundledBase::A:
      return make_base(19, {1, 3, 10, 15, 7, 16, 17, 11, 4, 14, 13, 2, 18, 5, 9, 12, 8, 6});
    case BundledBase::B:
      return gross_tucker_base(1);
    case BundledBase::C:
      return make_base(19, {1, 4, 10, 12, 11, 6, 15, 16, 2, 9, 13, 5, 3, 18, 7, 17, 14, 8});
  }
  throw Error(ErrorCode::InvalidParameter, "unknown base");
}

BundledBase parse_bundled_name(const std::string& name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'A': return BundledBase::A;
      case 'B': return BundledBase::B;
      case 'C': return BundledBase::C;
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown bundled base '" + name + "' (expected A, B or C)");
}

std::string to_string(BundledBase name) {
  switch (name) {
    case BundledBase::A: return "A";
    case BundledBase::B: return "B";
    case BundledBase::C: return "C";
  }
  return "?";
}

bool check_translation_automorphism(const RotationMap& map) {
  const int n = map.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = map.rotation(v);
    const auto& t = map.rotation((v + 1) % n);
    if (r.size() != t.size()) return false;
    if (r.empty()) continue;
    // t must be r shifted by one, up to a cyclic offset
    auto it = std::find(t.begin(), t.end(), (r[0] + 1) % n);
    if (it == t.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - t.begin());
    for (std::size_t k = 0; k < r.size(); ++k)
      if (t[(off + k) % t.size()] != (r[k] + 1) % n) return false;
  }
  return true;
}

}  // namespace splitcyc
