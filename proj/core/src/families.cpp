#include "splitcyc/families.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "splitcyc/error.hpp"
#include "splitcyc/surgery.hpp"
#include "splitcyc/voltage.hpp"

namespace splitcyc {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::vector<Vertex> reduce(std::initializer_list<long long> xs, int n, int shift = 0) {
  std::vector<Vertex> out;
  for (long long x : xs) out.push_back(mod(x + shift, n));
  return out;
}

// rotation starting at the smallest vertex, in the smaller of both directions
std::vector<Vertex> canonical(std::vector<Vertex> c) {
  auto rotate_min = [](std::vector<Vertex> v) {
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    return v;
  };
  auto a = rotate_min(c);
  std::reverse(c.begin(), c.end());
  auto b = rotate_min(c);
  return std::min(a, b);
}

using Tri = std::array<Vertex, 3>;

Tri sorted_tri(Vertex a, Vertex b, Vertex c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// base face of the derived triangle {a, b, c}, as its canonical voltage triple
Tri base_key(const RotationMap& m, Vertex a, Vertex b, Vertex c) {
  const int n = m.vertex_count();
  if (!is_face_triangle(m, a, b, c)) std::swap(b, c);
  Tri t{mod(b - a, n), mod(c - b, n), mod(a - c, n)};
  std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
  return t;
}

// boundary of a triangle set when it is a single simple cycle and the closure
// has the requested genus
std::optional<std::vector<Vertex>> punctured_boundary(const std::vector<Tri>& tris, int want_genus) {
  std::map<std::pair<Vertex, Vertex>, int> edges;
  std::set<Vertex> verts;
  for (const Tri& t : tris) {
    for (int e = 0; e < 3; ++e) {
      Vertex x = t[e], y = t[(e + 1) % 3];
      ++edges[{std::min(x, y), std::max(x, y)}];
      verts.insert(x);
    }
  }
  std::map<Vertex, std::vector<Vertex>> adj;
  int boundary = 0;
  for (const auto& [e, c] : edges) {
    if (c > 2) return std::nullopt;
    if (c == 1) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
      ++boundary;
    }
  }
  if (boundary == 0) return std::nullopt;
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return std::nullopt;
  const long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                        static_cast<long long>(tris.size());
  if (1 - chi != 2LL * want_genus) return std::nullopt;

  const Vertex start = adj.begin()->first;
  std::vector<Vertex> cyc{start};
  Vertex prev = start, cur = std::min(adj[start][0], adj[start][1]);
  while (cur != start) {
    cyc.push_back(cur);
    const auto& nb = adj[cur];
    Vertex nx = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nx;
  }
  if (static_cast<int>(cyc.size()) != boundary) return std::nullopt;
  return cyc;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Gamma: return "gamma";
    case FamilyKind::GammaIK: return "gamma_ik";
    case FamilyKind::GammaPrimeIK: return "gamma_prime_ik";
    case FamilyKind::TypeJ: return "type_j";
  }
  return "?";
}

FamilyCycle gamma(int s) {
  if (s < 3) throw Error(ErrorCode::SOutOfRange, "gamma needs s >= 3, got " + std::to_string(s));
  const int n = 12 * s + 7;
  FamilyCycle c;
  c.s = s;
  c.kind = FamilyKind::Gamma;
  c.vertices = reduce({0, 5, 2, 9LL * s + 8, 6, 1, 4, 5LL * s + 6}, n);
  return c;
}

FamilyCycle gamma_family(int s, int i, int k, Variant variant) {
  if (s < 2) throw Error(ErrorCode::ParamOutOfRange, "s must be >= 2, got " + std::to_string(s));
  if (i < 1 || i > s - 1)
    throw Error(ErrorCode::ParamOutOfRange, "i must lie in [1, " + std::to_string(s - 1) + "], got " + std::to_string(i));
  const int n = 12 * s + 7;
  FamilyCycle c;
  c.s = s;
  c.i = i;
  c.k = mod(k, n);
  if (variant == Variant::Plain) {
    c.kind = FamilyKind::GammaIK;
    c.vertices = reduce({0, 2LL * i + 3, 2, 9LL * s + 7 + i, 2LL * i + 4, 1, 2LL * i + 2, 5LL * s + 5 + i}, n, c.k);
  } else {
    c.kind = FamilyKind::GammaPrimeIK;
    c.vertices = reduce({0, 2LL * i + 2, 2, 5LL * s + 4 + i, 2LL * i + 3, 1, 2LL * i + 1, 9LL * s + 7 + i}, n, c.k);
  }
  return c;
}

FamilyCycle type_j_boundary(int s, int j) {
  if (s < 1) throw Error(ErrorCode::ParamOutOfRange, "s must be >= 1, got " + std::to_string(s));
  const int jmax = s / 2;  // ceil((s-1)/2)
  if (j < 1 || j > jmax)
    throw Error(ErrorCode::ParamOutOfRange, "j must lie in [1, " + std::to_string(jmax) + "], got " + std::to_string(j));

  const RotationMap m = derive(gross_tucker_base(s));
  const int n = m.vertex_count();
  const auto& r0 = m.rotation(0);
  const int d = static_cast<int>(r0.size());
  const int width = 4 * j + 1;

  struct Window {
    std::vector<Tri> tris;
    std::set<Tri> keys;
  };
  std::vector<Window> windows;
  for (int st = 0; st < d; ++st) {
    Window w;
    for (int x = 0; x < width; ++x) {
      Vertex a = r0[(st + x) % d], b = r0[(st + x + 1) % d];
      w.tris.push_back(sorted_tri(0, a, b));
      w.keys.insert(base_key(m, 0, a, b));
    }
    if (static_cast<int>(w.keys.size()) == width) windows.push_back(std::move(w));
  }

  for (const Window& a : windows) {
    for (const Window& b : windows) {
      if (std::any_of(b.keys.begin(), b.keys.end(), [&](const Tri& k) { return a.keys.count(k) > 0; })) continue;
      for (int t = 1; t < n; ++t) {
        std::vector<Tri> tris = a.tris;
        for (const Tri& x : b.tris) tris.push_back(sorted_tri(mod(x[0] + t, n), mod(x[1] + t, n), mod(x[2] + t, n)));
        std::vector<Tri> uniq = tris;
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) continue;
        if (auto cyc = punctured_boundary(tris, j)) {
          FamilyCycle c;
          c.s = s;
          c.j = j;
          c.kind = FamilyKind::TypeJ;
          c.claimed_type = j;
          c.vertices = std::move(*cyc);
          return c;
        }
      }
    }
  }
  throw Error(ErrorCode::NotACycle, "no punctured genus-" + std::to_string(j) + " fan pair for s=" + std::to_string(s));
}

CloseResult verdict_for_cycle(const RotationMap& map, const std::vector<Vertex>& cycle, const StateOptions& options) {
  if (cycle.size() < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least 3 vertices");
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) throw Error(ErrorCode::NotACycle, "repeated vertex");
  for (Vertex v : cycle)
    if (v < 0 || v >= map.vertex_count()) throw Error(ErrorCode::NotACycle, "vertex " + std::to_string(v) + " out of range");
  SearchState st(map, cycle[0], options);
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    ExtendResult r = st.extend(cycle[i]);
    if (!r) {
      CloseResult out;
      if (r.reason == PruneReason::FacialCorner) {
        out.status = CloseStatus::SeamCorner;
      } else {
        out.status = CloseStatus::Closed;
        out.verdict.pruned_by = r.reason;
      }
      return out;
    }
  }
  if (!map.adjacent(cycle.back(), cycle.front()))
    throw Error(ErrorCode::NotAdjacent, "no closing edge " + std::to_string(cycle.back()) + "-" + std::to_string(cycle.front()));
  return st.close();
}

bool FamilyReport::all_passed() const {
  if (!irreducible || family_distinct != family_expected) return false;
  return std::all_of(members.begin(), members.end(), [](const MemberCheck& m) { return m.passed(); });
}

FamilyReport verify_families(int s, bool oracle_all, int workers) {
  if (s < 2) throw Error(ErrorCode::SOutOfRange, "verify_families needs s >= 2, got " + std::to_string(s));
  FamilyReport rep;
  rep.s = s;
  rep.n = 12 * s + 7;
  const RotationMap m = derive(gross_tucker_base(s));
  rep.genus = m.genus();
  rep.irreducible = contractible_edges(m).empty();

  std::vector<FamilyCycle> cycles;
  if (s >= 3) cycles.push_back(gamma(s));
  for (Variant var : {Variant::Plain, Variant::Prime})
    for (int i = 1; i <= s - 1; ++i)
      for (int k = 0; k < rep.n; ++k) cycles.push_back(gamma_family(s, i, k, var));
  std::map<std::size_t, std::string> missing;
  for (int j = 1; j <= s / 2; ++j) {
    try {
      cycles.push_back(type_j_boundary(s, j));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotACycle) throw;
      missing[cycles.size()] = e.what();
      FamilyCycle c;
      c.s = s;
      c.j = j;
      c.kind = FamilyKind::TypeJ;
      c.claimed_type = j;
      cycles.push_back(c);
    }
  }

  rep.members.resize(cycles.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < cycles.size();) {
      MemberCheck& mc = rep.members[idx];
      mc.cycle = cycles[idx];
      try {
        const auto& cyc = mc.cycle.vertices;
        std::set<Vertex> distinct(cyc.begin(), cyc.end());
        mc.simple = distinct.size() == cyc.size();
        for (std::size_t q = 0; mc.simple && q < cyc.size(); ++q)
          mc.simple = m.adjacent(cyc[q], cyc[(q + 1) % cyc.size()]);
        if (!mc.simple) {
          mc.note = missing.count(idx) ? missing.at(idx) : "not a simple cycle of the map";
          continue;
        }
        const CloseResult r = verdict_for_cycle(m, cyc);
        mc.splitting = r.verdict.separating && !r.verdict.contractible;
        mc.computed_type = r.verdict.separating ? r.verdict.type : -1;
        if (!r.verdict.separating) mc.note = "not separating";
        const bool check = oracle_all || mc.cycle.k == 0 || mc.cycle.kind == FamilyKind::Gamma ||
                           mc.cycle.kind == FamilyKind::TypeJ;
        if (check) {
          const auto parts = cut_along(m, cyc);
          mc.oracle_type = parts.size() == 2 ? std::min(parts[0].genus, parts[1].genus) : -1;
          mc.agrees = mc.oracle_type == mc.computed_type;
          if (!mc.agrees) mc.note = "fast verdict disagrees with cut_along";
        }
      } catch (const Error& e) {
        mc.agrees = false;
        mc.note = e.what();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < std::max(workers, 1); ++w) pool.emplace_back(work);
  work();
  pool.clear();

  std::set<std::vector<Vertex>> fam, gamma_orbit;
  for (const MemberCheck& mc : rep.members)
    if (mc.cycle.kind == FamilyKind::GammaIK || mc.cycle.kind == FamilyKind::GammaPrimeIK)
      fam.insert(canonical(mc.cycle.vertices));
  rep.family_distinct = static_cast<int>(fam.size());
  rep.family_expected = 2 * (s - 1) * rep.n;
  if (s >= 3) {
    const auto g = gamma(s).vertices;
    for (int t = 0; t < rep.n; ++t) {
      std::vector<Vertex> shifted;
      for (Vertex v : g) shifted.push_back(mod(v + t, rep.n));
      gamma_orbit.insert(canonical(shifted));
    }
    for (const auto& c : fam) rep.overlaps_with_gamma_orbit += static_cast<int>(gamma_orbit.count(c));
    const auto parts = cut_along(m, g);
    if (parts.size() == 2) {
      const Subsurface& small = parts[0].faces.size() <= parts[1].faces.size() ? parts[0] : parts[1];
      rep.gamma_side_triangles = small.face_count;
      rep.gamma_side_interior_edges = small.edges - static_cast<int>(g.size());
    }
  }
  return rep;
}

}  // namespace splitcyc
