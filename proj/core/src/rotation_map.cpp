#include "splitcyc/rotation_map.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "splitcyc/error.hpp"

namespace splitcyc {

namespace {

constexpr int kDenseLimit = 4096;

}  // namespace

std::optional<RotationViolation> check_rotations(const std::vector<std::vector<Vertex>>& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 0) return RotationViolation{ErrorCode::EmptyRotation, 0, "map has no vertices"};
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (rot[v].empty()) {
      if (n == 1) continue;
      return RotationViolation{ErrorCode::EmptyRotation, v, "vertex " + std::to_string(v) + " has an empty rotation"};
    }
    for (Vertex w : rot[v]) {
      if (w < 0 || w >= n)
        return RotationViolation{ErrorCode::VertexOutOfRange, v,
                                 "vertex " + std::to_string(v) + " lists " + std::to_string(w)};
      if (w == v)
        return RotationViolation{ErrorCode::SelfLoop, v, "vertex " + std::to_string(v) + " lists itself"};
      if (seen[w])
        return RotationViolation{ErrorCode::RepeatedNeighbor, v,
                                 "vertex " + std::to_string(v) + " lists " + std::to_string(w) + " twice"};
      seen[w] = 1;
    }
    for (Vertex w : rot[v]) seen[w] = 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rot[v]) {
      if (std::find(rot[w].begin(), rot[w].end(), v) == rot[w].end())
        return RotationViolation{ErrorCode::AsymmetricAdjacency, v,
                                 "vertex " + std::to_string(v) + " lists " + std::to_string(w) +
                                     " but " + std::to_string(w) + " does not list " + std::to_string(v)};
    }
  }
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rot[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) {
    Vertex lost = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    return RotationViolation{ErrorCode::Disconnected, lost,
                             "vertex " + std::to_string(lost) + " is not reachable from 0"};
  }
  return std::nullopt;
}

RotationMap RotationMap::build(std::vector<std::vector<Vertex>> rotations) {
  if (auto bad = check_rotations(rotations)) throw Error(bad->code, bad->detail);

  RotationMap m;
  m.rot_ = std::move(rotations);
  const int n = m.vertex_count();
  m.offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) m.offset_[v + 1] = m.offset_[v] + static_cast<int>(m.rot_[v].size());
  m.heads_.reserve(m.offset_[n]);
  for (const auto& r : m.rot_) m.heads_.insert(m.heads_.end(), r.begin(), r.end());

  if (n <= kDenseLimit) {
    m.pos_.assign(static_cast<std::size_t>(n) * n, -1);
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < m.degree(v); ++i) m.pos_[static_cast<std::size_t>(v) * n + m.rot_[v][i]] = i;
  } else {
    m.sorted_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& s = m.sorted_[v];
      for (int i = 0; i < m.degree(v); ++i) s.emplace_back(m.rot_[v][i], i);
      std::sort(s.begin(), s.end());
    }
  }

  m.opp_.resize(m.heads_.size());
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < m.degree(v); ++i) m.opp_[m.offset_[v] + i] = m.position(m.rot_[v][i], v);
  return m;
}

int RotationMap::position(Vertex v, Vertex w) const noexcept {
  const int n = vertex_count();
  if (v < 0 || v >= n || w < 0 || w >= n) return -1;
  if (!pos_.empty()) return pos_[static_cast<std::size_t>(v) * n + w];
  const auto& s = sorted_[v];
  auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, std::int32_t>{w, -1});
  return (it != s.end() && it->first == w) ? it->second : -1;
}

std::pair<Vertex, int> RotationMap::face_next(Vertex v, int i) const noexcept {
  Vertex w = neighbor(v, i);
  int j = opposite_index(v, i) + 1;
  if (j == degree(w)) j = 0;
  return {w, j};
}

FaceTable RotationMap::faces() const {
  FaceTable t;
  t.face_of_dart.assign(heads_.size(), -1);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (int i = 0; i < degree(v); ++i) {
      if (t.face_of_dart[dart_id(v, i)] >= 0) continue;
      const auto id = static_cast<std::int32_t>(t.faces.size());
      Face f;
      Vertex a = v;
      int k = i;
      while (t.face_of_dart[dart_id(a, k)] < 0) {
        t.face_of_dart[dart_id(a, k)] = id;
        f.push_back(a);
        std::tie(a, k) = face_next(a, k);
      }
      t.faces.push_back(std::move(f));
    }
  }
  return t;
}

int RotationMap::face_count() const {
  // a single isolated vertex is the sphere with one face
  if (heads_.empty()) return 1;
  return static_cast<int>(faces().faces.size());
}

int RotationMap::euler_characteristic() const {
  return vertex_count() - edge_count() + face_count();
}

int RotationMap::genus() const {
  int chi = euler_characteristic();
  if (chi % 2 != 0) throw Error(ErrorCode::OddChi, "euler characteristic " + std::to_string(chi));
  return (2 - chi) / 2;
}

std::vector<Face> faces(const RotationMap& map) { return map.faces().faces; }

int genus(const RotationMap& map) { return map.genus(); }

bool is_simplicial_triangulation(const RotationMap& map) {
  if (map.vertex_count() == 3 && map.edge_count() == 3) return false;
  if (map.dart_count() == 0) return false;
  for (const auto& f : map.faces().faces)
    if (f.size() != 3) return false;
  return true;
}

bool is_face_triangle(const RotationMap& map, Vertex a, Vertex b, Vertex c) {
  int i = map.position(a, b);
  if (i < 0 || !map.adjacent(b, c) || !map.adjacent(c, a)) return false;
  auto [v1, j1] = map.face_next(a, i);
  if (map.neighbor(v1, j1) != c) return false;
  auto [v2, j2] = map.face_next(v1, j1);
  return map.neighbor(v2, j2) == a;
}

}  // namespace splitcyc
