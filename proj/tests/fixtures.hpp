#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "splitcyc/rotation_map.hpp"
#include "splitcyc/surgery.hpp"
#include "splitcyc/voltage.hpp"

namespace fixtures {

using splitcyc::RotationMap;
using splitcyc::Vertex;

inline RotationMap tetrahedron() {
  return RotationMap::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

// 0 on top, 5 below, equator 1 2 3 4
inline RotationMap octahedron() {
  return RotationMap::build({{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {4, 3, 2, 1}});
}

inline splitcyc::VoltageBaseMap k7_base() { return splitcyc::make_base(7, {1, 3, 2, 6, 4, 5}); }

inline RotationMap k7() { return splitcyc::derive(k7_base()); }

inline splitcyc::Triangle first_face(const RotationMap& m) {
  const auto f = m.faces().faces.front();
  return {f[0], f[1], f[2]};
}

// two K7 tori glued along a face; the seam is the triangle 0 1 3 (the ids of
// the first face of K7)
inline RotationMap double_k7() {
  const RotationMap a = k7();
  return splitcyc::glue_along_triangle(a, first_face(a), a, first_face(a));
}

// inserts a new vertex inside the face (a, b, c)
inline RotationMap subdivide(const RotationMap& m, Vertex a, Vertex b, Vertex c) {
  auto rot = m.rotations();
  const Vertex x = m.vertex_count();
  // in face (a, b, c), b follows c around a; the new vertex goes between them
  auto insert_after = [&](Vertex at, Vertex after, Vertex v) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), after) + 1, v);
  };
  insert_after(a, c, x);
  insert_after(b, a, x);
  insert_after(c, b, x);
  rot.push_back({a, c, b});
  return RotationMap::build(std::move(rot));
}

// sphere triangulation grown from the tetrahedron by random subdivisions
inline RotationMap random_sphere(int extra, std::mt19937& rng) {
  RotationMap m = tetrahedron();
  for (int k = 0; k < extra; ++k) {
    const auto fs = m.faces().faces;
    const auto& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    m = subdivide(m, f[0], f[1], f[2]);
  }
  return m;
}

// random connected graph with a random rotation system
inline RotationMap random_map(int n, double p, std::mt19937& rng) {
  std::vector<std::vector<Vertex>> rot(n);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace(u, v);
  for (auto [u, v] : edges) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return RotationMap::build(std::move(rot));
}

// all simple cycles of length 3..max_len, each once (smallest vertex first,
// second vertex smaller than the last)
inline std::vector<std::vector<Vertex>> simple_cycles(const RotationMap& m, int max_len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on(m.vertex_count(), 0);
  auto dfs = [&](auto&& self, Vertex root) -> void {
    const Vertex a = path.back();
    if (path.size() >= 3 && m.adjacent(a, root) && path[1] < a) out.push_back(path);
    if (static_cast<int>(path.size()) == max_len) return;
    for (Vertex w : m.rotation(a)) {
      if (w <= root || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, root);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex r = 0; r < m.vertex_count(); ++r) {
    path = {r};
    on[r] = 1;
    dfs(dfs, r);
    on[r] = 0;
  }
  return out;
}

// no two consecutive cycle edges bound a face, seam included
inline bool corner_free(const RotationMap& m, const std::vector<Vertex>& c) {
  const std::size_t L = c.size();
  for (std::size_t i = 0; i < L; ++i) {
    const Vertex a = c[(i + L - 1) % L], b = c[i], d = c[(i + 1) % L];
    const int deg = m.degree(b);
    const int delta = (m.position(b, a) - m.position(b, d) + deg) % deg;
    if (delta == 1 || delta == deg - 1) return false;
  }
  return true;
}

}  // namespace fixtures
