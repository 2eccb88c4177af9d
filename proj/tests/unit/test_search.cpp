#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "../fixtures.hpp"
#include "doctest.h"
#include "splitcyc/bounds.hpp"
#include "splitcyc/enumerate.hpp"
#include "splitcyc/error.hpp"
#include "splitcyc/families.hpp"
#include "splitcyc/search_state.hpp"
#include "splitcyc/surgery.hpp"
#include "splitcyc/voltage.hpp"

using namespace splitcyc;

namespace {

const RotationMap& embedding_b() {
  static const RotationMap m = derive(gross_tucker_base(1));
  return m;
}

bool corner(const RotationMap& m, Vertex a, Vertex b, Vertex c) {
  const int d = m.degree(b);
  const int delta = (m.position(b, a) - m.position(b, c) + d) % d;
  return delta == 1 || delta == d - 1;
}

// Recomputes the colors of a path from scratch and checks the four tests on
// the final state.
bool naive_survives(const RotationMap& m, const std::vector<Vertex>& path) {
  const int n = m.vertex_count();
  std::map<std::pair<Vertex, Vertex>, Color> col;
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const Vertex p = path[k - 1], a = path[k], q = path[k + 1];
    if (corner(m, p, a, q)) return false;
    const int d = m.degree(a);
    const int ip = m.position(a, p), iq = m.position(a, q);
    for (int j = (iq + 1) % d; j != ip; j = (j + 1) % d) col[{a, m.neighbor(a, j)}] = Color::Red;
    for (int j = (ip + 1) % d; j != iq; j = (j + 1) % d) col[{a, m.neighbor(a, j)}] = Color::Blue;
  }
  for (const auto& [dart, c] : col) {
    auto it = col.find({dart.second, dart.first});
    if (it != col.end() && it->second != c) return false;
  }
  for (Vertex w = 0; w < n; ++w) {
    const int d = m.degree(w);
    std::vector<Color> in(d, Color::None);
    for (int i = 0; i < d; ++i) {
      auto it = col.find({m.neighbor(w, i), w});
      if (it != col.end()) in[i] = it->second;
    }
    std::vector<Color> seq;
    for (int i = 0; i < d; ++i) {
      if (in[i] == Color::None) continue;
      seq.push_back(in[i]);
      if (in[(i + 1) % d] == other(in[i])) return false;
    }
    int changes = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) changes += seq[i] != seq[(i + 1) % seq.size()];
    if (changes > 2) return false;
  }
  return true;
}

long long naive_count(const RotationMap& m, std::vector<Vertex>& path, int max_len) {
  long long count = 0;
  for (Vertex w : m.rotation(path.back())) {
    if (std::find(path.begin(), path.end(), w) != path.end()) continue;
    path.push_back(w);
    if (naive_survives(m, path)) {
      ++count;
      if (static_cast<int>(path.size()) < max_len) count += naive_count(m, path, max_len);
    }
    path.pop_back();
  }
  return count;
}

std::vector<Vertex> link_through(const RotationMap& m, Vertex center, Vertex start) {
  auto r = m.rotation(center);
  std::rotate(r.begin(), std::find(r.begin(), r.end(), start), r.end());
  return r;
}

}  // namespace

TEST_CASE("extending from the root colors nothing") {
  SearchState st(embedding_b(), 0);
  const Vertex v = embedding_b().neighbor(0, 0);
  CHECK(st.extend(v));
  CHECK(st.colored(Color::Red) + st.colored(Color::Blue) == 0);
  CHECK(st.length() == 2);
}

TEST_CASE("extend errors") {
  const RotationMap oct = fixtures::octahedron();
  SearchState st(oct, 0);
  try {
    st.extend(5);
    FAIL("expected NotAdjacent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdjacent);
  }
  st.extend(1);
  try {
    st.extend(0);
    FAIL("expected AlreadyOnPath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlreadyOnPath);
  }
  SearchState fresh(oct, 0);
  try {
    fresh.retract();
    FAIL("expected PathTooShort");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PathTooShort);
  }
}

TEST_CASE("facial corners are skipped") {
  const RotationMap& m = embedding_b();
  SearchState st(m, 0);
  const Vertex a = m.neighbor(0, 0);
  st.extend(a);
  // the neighbors of a next to 0 bound faces with (0, a)
  const int d = m.degree(a);
  const Vertex beside = m.neighbor(a, (m.position(a, 0) + 1) % d);
  const ExtendResult r = st.extend(beside);
  CHECK_FALSE(r);
  CHECK(r.reason == PruneReason::FacialCorner);
  CHECK(st.length() == 2);
}

TEST_CASE("extend then retract restores the state") {
  const RotationMap& m = embedding_b();
  SearchState st(m, 0);
  st.extend(m.neighbor(0, 3));
  const SearchState before = st;
  for (Vertex w : m.rotation(st.last())) {
    if (st.on_path(w)) continue;
    if (st.extend(w)) {
      CHECK_FALSE(st == before);
      st.retract();
    }
    CHECK(st == before);
  }
}

TEST_CASE("property: random extend/retract walks return to the start") {
  const RotationMap& m = embedding_b();
  std::mt19937 rng(23);
  SearchState st(m, 0);
  const SearchState initial = st;
  for (int round = 0; round < 20; ++round) {
    int pushed = 0;
    for (int step = 0; step < 100; ++step) {
      std::vector<Vertex> options;
      for (Vertex w : m.rotation(st.last()))
        if (!st.on_path(w)) options.push_back(w);
      if (options.empty()) break;
      if (st.extend(options[rng() % options.size()])) ++pushed;
      if (pushed > 0 && rng() % 4 == 0) {
        st.retract();
        --pushed;
      }
    }
    while (pushed-- > 0) st.retract();
    CHECK(st == initial);
  }
  for (Vertex v = 0; v < m.vertex_count(); ++v) CHECK(st.ledger(v).empty());
}

TEST_CASE("surviving depth-4 nodes match a from-scratch replay of the tests") {
  const RotationMap& m = embedding_b();
  for (int max_len : {3, 4}) {
    std::vector<Vertex> path{0};
    const long long naive = naive_count(m, path, max_len);
    SearchOptions opt;
    opt.max_length = max_len;
    CHECK(enumerate(m, 0, opt).visited == naive);
  }
  const RotationMap a = derive(bundled_base(BundledBase::A));
  std::vector<Vertex> path{0};
  SearchOptions opt;
  opt.max_length = 4;
  CHECK(enumerate(a, 0, opt).visited == naive_count(a, path, 4));
}

TEST_CASE("link of a vertex is contractible") {
  const RotationMap& m = embedding_b();
  const auto link = link_through(m, 5, 0);
  REQUIRE(link.size() == 18);
  const CloseResult r = verdict_for_cycle(m, link);
  REQUIRE(r.status == CloseStatus::Closed);
  const SplitVerdict& v = r.verdict;
  CHECK(v.separating);
  CHECK(v.side_arcs == 270);
  CHECK(v.side_genus == 20);
  CHECK(v.type == 0);
  CHECK(v.contractible);
  const auto parts = cut_along(m, link);
  REQUIRE(parts.size() == 2);
  CHECK(std::min(parts[0].face_count, parts[1].face_count) == 18);
  CHECK(std::max(parts[0].face_count, parts[1].face_count) == 96);
}

TEST_CASE("gamma_3 closes as a type-1 splitting cycle") {
  const RotationMap m = derive(gross_tucker_base(3));
  const CloseResult r = verdict_for_cycle(m, {0, 5, 2, 35, 6, 1, 4, 21}, {true, true, true});
  REQUIRE(r.status == CloseStatus::Closed);
  CHECK(r.verdict.separating);
  CHECK(r.verdict.side_arcs == 22);
  CHECK(r.verdict.side_genus == 1);
  CHECK(r.verdict.type == 1);
  CHECK_FALSE(r.verdict.hamiltonian);
}

TEST_CASE("close leaves the state unchanged and rejects short or open paths") {
  const RotationMap& m = embedding_b();
  SearchState st(m, 0);
  CHECK(st.close().status == CloseStatus::TooShort);
  const auto link = link_through(m, 5, 0);
  StateOptions off{false, false, true};
  SearchState s2(m, 0, off);
  for (std::size_t i = 1; i < link.size(); ++i) REQUIRE(s2.extend(link[i]));
  const SearchState before = s2;
  CHECK(s2.close().status == CloseStatus::Closed);
  CHECK(s2 == before);
  const RotationMap oct = fixtures::octahedron();
  SearchState s3(oct, 0);
  REQUIRE(s3.extend(1));
  REQUIRE(s3.extend(5));
  CHECK(s3.close().status == CloseStatus::NotAdjacent);
}

TEST_CASE("embedding B: type 4 cycles are Hamiltonian, type 1 prefixes always extend") {
  const RotationMap& m = embedding_b();
  std::vector<std::vector<Vertex>> type4, type1;
  auto visit = [&](const std::vector<Vertex>& c, const SplitVerdict& v) {
    if (!v.separating) return;
    if (v.type == 4) {
      type4.push_back(c);
      CHECK(v.hamiltonian);
    }
    if (v.type == 1) type1.push_back(c);
  };
  const TypeTable t = enumerate(m, 0, {}, visit);
  CHECK(type4.size() == 38);
  for (const auto& c : type4) CHECK(c.size() == 19);
  CHECK(type1.size() == 936);
  for (std::size_t k = 0; k < type1.size(); k += 7) {
    SearchState st(m, 0);
    for (std::size_t i = 1; i < type1[k].size(); ++i) REQUIRE(st.extend(type1[k][i]));
    const CloseResult r = st.close();
    CHECK(r.verdict.type == 1);
  }
  for (const TypeRow& row : t.rows) CHECK(row.directed % 2 == 0);
}

TEST_CASE("contractible cycles through the root are vertex links") {
  const RotationMap& m = embedding_b();
  std::set<std::vector<Vertex>> seen;
  auto visit = [&](const std::vector<Vertex>& c, const SplitVerdict& v) {
    if (!v.separating || !v.contractible) return;
    REQUIRE(c.size() == 18);
    std::vector<char> on(19, 0);
    for (Vertex x : c) on[x] = 1;
    const Vertex center = static_cast<Vertex>(std::find(on.begin(), on.end(), 0) - on.begin());
    auto link = link_through(m, center, 0);
    auto rev = link;
    std::reverse(rev.begin() + 1, rev.end());
    CHECK((c == link || c == rev));
    seen.insert(c);
  };
  const TypeTable t = enumerate(m, 0, {}, visit);
  CHECK(t.contractible_directed == 36);
  CHECK(seen.size() == 36);
}

TEST_CASE("direction symmetry of verdicts") {
  const RotationMap& m = embedding_b();
  std::map<std::vector<Vertex>, std::pair<bool, int>> verdicts;
  SearchOptions opt;
  opt.max_length = 11;
  enumerate(m, 0, opt, [&](const std::vector<Vertex>& c, const SplitVerdict& v) {
    verdicts[c] = {v.separating, v.type};
  });
  int checked = 0;
  for (const auto& [c, v] : verdicts) {
    if (!v.first) continue;
    auto rev = c;
    std::reverse(rev.begin() + 1, rev.end());
    auto it = verdicts.find(rev);
    REQUIRE(it != verdicts.end());
    CHECK(it->second == v);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("torus has no splitting cycle") {
  const TypeTable t = enumerate(fixtures::k7(), 0);
  CHECK(t.splitting_directed == 0);
  CHECK(t.rows.empty());
  CHECK(t.contractible_directed > 0);
}

TEST_CASE("glued double torus: the seam triangle splits") {
  const RotationMap d = fixtures::double_k7();
  const auto seam = fixtures::first_face(fixtures::k7());
  const TypeTable t = enumerate(d, seam[0]);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].nsc >= 1);
  CHECK(t.rows[0].min_length == 3);
}

TEST_CASE("enumerate preconditions") {
  try {
    enumerate(RotationMap::build({{1, 3}, {2, 0}, {3, 1}, {0, 2}}), 0);
    FAIL("expected NotTriangulation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTriangulation);
  }
  SearchOptions opt;
  opt.assume_transitive = true;
  try {
    enumerate(fixtures::octahedron(), 0, opt);
    FAIL("expected NotTransitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTransitive);
  }
  CHECK_NOTHROW(enumerate(embedding_b(), 0, opt));
}

TEST_CASE("worker count does not change the table") {
  SearchOptions one, many;
  one.max_length = many.max_length = 12;
  many.workers = 4;
  const TypeTable a = enumerate(embedding_b(), 0, one), b = enumerate(embedding_b(), 0, many);
  CHECK(a.visited == b.visited);
  CHECK(a.splitting_directed == b.splitting_directed);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].nsc == b.rows[i].nsc);
    CHECK(a.rows[i].min_length == b.rows[i].min_length);
  }
}

TEST_CASE("no-interior bound") {
  CHECK(no_interior_bound(0) == 3);
  CHECK(no_interior_bound(1) == 6);
  CHECK(no_interior_bound(10) == 14);
  int prev = 0;
  for (int g = 0; g <= 500; ++g) {
    const int k = no_interior_bound(g);
    CHECK(k >= prev);
    prev = k;
    CHECK(k == static_cast<int>(std::ceil((5 + std::sqrt(48.0 * g + 1)) / 2 - 1e-12)));
  }
  for (int s = 1; s <= 6; s += 2) {
    const int g = 1 + s * (12 * s + 7);
    if (g % 2 != 0) continue;
    const double t = 24.0 * s + 7;
    CHECK(no_interior_bound(g / 2) == static_cast<int>(std::ceil((5 + std::sqrt((1 + t * t) / 2)) / 2 - 1e-12)));
  }
  CHECK_THROWS_AS(no_interior_bound(-1), Error);
}
