#include "splitcyc/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "splitcyc/error.hpp"

namespace splitcyc {

namespace {

std::string show(const std::vector<Vertex>& cyc) {
  std::string s = "(";
  for (std::size_t i = 0; i < cyc.size(); ++i) s += (i ? "," : "") + std::to_string(cyc[i]);
  return s + ")";
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Rotation at corner b of face (a, b, c) read from c around to a.
std::vector<Vertex> open_corner(const RotationMap& map, Vertex b, Vertex c) {
  const auto& r = map.rotation(b);
  const int d = static_cast<int>(r.size());
  const int start = map.position(b, c);
  std::vector<Vertex> out;
  out.reserve(d);
  for (int k = 0; k < d; ++k) out.push_back(r[(start + k) % d]);
  return out;
}

}  // namespace

std::vector<Subsurface> cut_along(const RotationMap& map, const std::vector<Vertex>& cycle) {
  const int L = static_cast<int>(cycle.size());
  const int n = map.vertex_count();
  if (L < 3) throw Error(ErrorCode::NotACycle, "cycle " + show(cycle) + " has fewer than 3 vertices");
  std::vector<char> on(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n) throw Error(ErrorCode::NotACycle, "vertex " + std::to_string(v) + " out of range");
    if (on[v]) throw Error(ErrorCode::NotACycle, "cycle " + show(cycle) + " repeats " + std::to_string(v));
    on[v] = 1;
  }
  std::set<std::pair<Vertex, Vertex>> cut;
  for (int i = 0; i < L; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % L];
    if (!map.adjacent(a, b))
      throw Error(ErrorCode::EdgeMissing, "no edge " + std::to_string(a) + "-" + std::to_string(b));
    cut.emplace(std::min(a, b), std::max(a, b));
  }

  const FaceTable ft = map.faces();
  const int F = static_cast<int>(ft.faces.size());
  std::vector<int> parent(F);
  std::iota(parent.begin(), parent.end(), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < map.degree(v); ++i) {
      Vertex w = map.neighbor(v, i);
      if (w < v || cut.count({v, w})) continue;
      int f1 = ft.face_of_dart[map.dart_id(v, i)];
      int f2 = ft.face_of_dart[map.dart_id(w, map.opposite_index(v, i))];
      parent[find(parent, f1)] = find(parent, f2);
    }
  }

  std::vector<int> comp_of(F, -1);
  std::vector<Subsurface> out;
  for (int f = 0; f < F; ++f) {
    int r = find(parent, f);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[comp_of[r]].faces.push_back(f);
  }

  if (out.size() == 1) {
    auto& s = out[0];
    s.boundary_cycles = 2;
    s.vertices = n + L;
    s.edges = map.edge_count() + L;
    s.face_count = F;
    s.chi = s.vertices - s.edges + s.face_count;
    s.genus = (2 - s.chi - s.boundary_cycles) / 2;
    return out;
  }

  std::vector<int> vmark(n, -1);
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto& s = out[c];
    std::set<std::pair<Vertex, Vertex>> edges;
    for (int f : s.faces) {
      const Face& fc = ft.faces[f];
      for (std::size_t k = 0; k < fc.size(); ++k) {
        Vertex a = fc[k], b = fc[(k + 1) % fc.size()];
        if (vmark[a] != static_cast<int>(c)) {
          vmark[a] = static_cast<int>(c);
          ++s.vertices;
        }
        edges.emplace(std::min(a, b), std::max(a, b));
      }
    }
    s.edges = static_cast<int>(edges.size());
    s.face_count = static_cast<int>(s.faces.size());
    s.boundary_cycles = 1;
    s.chi = s.vertices - s.edges + s.face_count;
    s.genus = (2 - s.chi - s.boundary_cycles) / 2;
  }
  return out;
}

RotationMap glue_along_triangle(const RotationMap& A, const Triangle& fa, const RotationMap& B,
                                const Triangle& fb) {
  auto face_name = [](const Triangle& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
  };
  if (!is_face_triangle(A, fa[0], fa[1], fa[2]))
    throw Error(ErrorCode::NotAFace, face_name(fa) + " is not a face of the first map");
  if (!is_face_triangle(B, fb[0], fb[1], fb[2]))
    throw Error(ErrorCode::NotAFace, face_name(fb) + " is not a face of the second map");

  const int na = A.vertex_count();
  const int nb = B.vertex_count();
  // b-vertex -> glued id
  std::vector<Vertex> relabel(nb, -1);
  relabel[fb[2]] = fa[0];
  relabel[fb[1]] = fa[1];
  relabel[fb[0]] = fa[2];
  Vertex next = na;
  for (Vertex v = 0; v < nb; ++v)
    if (relabel[v] < 0) relabel[v] = next++;

  std::vector<std::vector<Vertex>> rot(next);
  for (Vertex v = 0; v < na; ++v) rot[v] = A.rotation(v);
  for (Vertex v = 0; v < nb; ++v) {
    if (v == fb[0] || v == fb[1] || v == fb[2]) continue;
    auto& r = rot[relabel[v]];
    for (Vertex w : B.rotation(v)) r.push_back(relabel[w]);
  }
  for (int k = 0; k < 3; ++k) {
    // corner fa[k] of (fa[k-1], fa[k], fa[k+1]) meets corner fb[2-k]
    Vertex a = fa[k], a_next = fa[(k + 1) % 3];
    Vertex b = fb[2 - k], b_next = fb[(2 - k + 1) % 3];
    std::vector<Vertex> seq = open_corner(A, a, a_next);
    std::vector<Vertex> bseq = open_corner(B, b, b_next);
    for (std::size_t i = 1; i + 1 < bseq.size(); ++i) seq.push_back(relabel[bseq[i]]);
    rot[a] = std::move(seq);
  }
  if (auto bad = check_rotations(rot)) throw Error(ErrorCode::ResultNotSimple, bad->detail);
  return RotationMap::build(std::move(rot));
}

namespace {

int common_neighbors(const RotationMap& map, Vertex u, Vertex v) {
  int c = 0;
  for (Vertex w : map.rotation(u))
    if (w != v && map.adjacent(v, w)) ++c;
  return c;
}

bool is_k4_sphere(const RotationMap& map) {
  return map.vertex_count() == 4 && map.edge_count() == 6 && map.genus() == 0;
}

}  // namespace

RotationMap contract_edge(const RotationMap& map, Edge edge) {
  auto [u, v] = edge;
  const std::string name = std::to_string(u) + "-" + std::to_string(v);
  const int iu = map.position(u, v);
  if (iu < 0) throw Error(ErrorCode::NotContractible, "no edge " + name);
  if (!is_simplicial_triangulation(map)) throw Error(ErrorCode::NotContractible, "map is not a triangulation");
  if (is_k4_sphere(map)) throw Error(ErrorCode::IsK4Sphere, "K4 in the sphere has no contractible edge");
  if (common_neighbors(map, u, v) != 2)
    throw Error(ErrorCode::NotContractible, "edge " + name + " lies on a non-facial triangle");

  const int iv = map.position(v, u);
  const auto& ru = map.rotation(u);
  const auto& rv = map.rotation(v);
  const int du = map.degree(u), dv = map.degree(v);
  // ru = (v, w1..wp), rv = (u, z1..zq) with z1 = wp and zq = w1
  std::vector<Vertex> merged;
  for (int k = 1; k < du; ++k) merged.push_back(ru[(iu + k) % du]);
  for (int k = 2; k < dv - 1; ++k) merged.push_back(rv[(iv + k) % dv]);
  const Vertex apex1 = rv[(iv + 1) % dv];
  const Vertex apex2 = rv[(iv + dv - 1) % dv];

  const int n = map.vertex_count();
  auto id = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<std::vector<Vertex>> rot;
  rot.reserve(n - 1);
  for (Vertex x = 0; x < n; ++x) {
    if (x == v) continue;
    std::vector<Vertex> r;
    if (x == u) {
      r = merged;
    } else {
      for (Vertex w : map.rotation(x)) {
        if (w == v) {
          if (x == apex1 || x == apex2) continue;
          w = u;
        }
        r.push_back(w);
      }
    }
    for (auto& w : r) w = id(w);
    rot.push_back(std::move(r));
  }
  return RotationMap::build(std::move(rot));
}

std::vector<Edge> contractible_edges(const RotationMap& map) {
  std::vector<Edge> out;
  if (!is_simplicial_triangulation(map) || is_k4_sphere(map)) return out;
  for (Vertex u = 0; u < map.vertex_count(); ++u)
    for (Vertex v : map.rotation(u))
      if (u < v && common_neighbors(map, u, v) == 2) out.emplace_back(u, v);
  return out;
}

}  // namespace splitcyc
