#include "splitcyc/search_state.hpp"

#include <algorithm>
#include <string>

#include "splitcyc/error.hpp"

namespace splitcyc {

std::string_view to_string(PruneReason r) noexcept {
  switch (r) {
    case PruneReason::None: return "none";
    case PruneReason::FacialCorner: return "facial-corner";
    case PruneReason::OppositeColor: return "opposite-color";
    case PruneReason::PredecessorColor: return "predecessor-color";
    case PruneReason::SuccessorColor: return "successor-color";
    case PruneReason::Interleaved: return "interleaved";
  }
  return "?";
}

SearchState::SearchState(const RotationMap& map, Vertex root, StateOptions options)
    : map_(&map), options_(options) {
  const int n = map.vertex_count();
  if (root < 0 || root >= n) throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(root));
  complete_ = 2LL * map.edge_count() == static_cast<long long>(n) * (n - 1);
  genus_ = map.genus();
  on_path_.assign(n, 0);
  ledgers_.resize(n);
  for (Vertex v = 0; v < n; ++v) ledgers_[v].reset(map.degree(v));
  path_.push_back(root);
  on_path_[root] = 1;
}

bool SearchState::is_corner_face(Vertex a, Vertex b, Vertex c) const noexcept {
  const int d = map_->degree(b);
  const int delta = (map_->position(b, a) - map_->position(b, c) + d) % d;
  return delta == 1 || delta == d - 1;
}

PruneReason SearchState::color_corner(Vertex prev, Vertex at, Vertex next) {
  const RotationMap& m = *map_;
  const int d = m.degree(at);
  const int ip = m.position(at, prev);
  const int iq = m.position(at, next);
  const CyclicLedger& own = ledgers_[at];
  for (int k = 1; k < d; ++k) {
    const int j = (iq + k) % d;
    if (j == ip) continue;
    // strictly between next and prev going forward
    const Color c = ((j - iq + d) % d) < ((ip - iq + d) % d) ? Color::Red : Color::Blue;
    const Color back = own.at(j);
    if (back != Color::None && back != c) return PruneReason::OppositeColor;

    const Vertex w = m.neighbor(at, j);
    const int pw = m.opposite_index(at, j);
    CyclicLedger& led = ledgers_[w];
    led.insert(pw, c);
    journal_.push_back({w, pw});
    ++total_[c == Color::Red ? 0 : 1];

    const int dw = led.size();
    const Color o = other(c);
    if (led.at(pw == 0 ? dw - 1 : pw - 1) == o) return PruneReason::PredecessorColor;
    if (led.at(pw + 1 == dw ? 0 : pw + 1) == o) return PruneReason::SuccessorColor;
    if (options_.test4 && led.changes() > 2) return PruneReason::Interleaved;
  }
  return PruneReason::None;
}

void SearchState::undo_to(std::size_t mark) noexcept {
  while (journal_.size() > mark) {
    const Mark e = journal_.back();
    journal_.pop_back();
    CyclicLedger& led = ledgers_[e.head];
    --total_[led.at(e.pos) == Color::Red ? 0 : 1];
    led.erase(e.pos);
  }
}

ExtendResult SearchState::extend(Vertex v) {
  const Vertex a = last();
  if (v < 0 || v >= map_->vertex_count() || !map_->adjacent(a, v))
    throw Error(ErrorCode::NotAdjacent, std::to_string(v) + " is not adjacent to " + std::to_string(a));
  if (on_path_[v]) throw Error(ErrorCode::AlreadyOnPath, std::to_string(v) + " is already on the path");

  const std::size_t mark = journal_.size();
  if (path_.size() >= 2) {
    const Vertex p = path_[path_.size() - 2];
    if (options_.remark2 && is_corner_face(p, a, v)) return {false, PruneReason::FacialCorner};
    if (PruneReason r = color_corner(p, a, v); r != PruneReason::None) {
      undo_to(mark);
      return {false, r};
    }
  }
  frames_.push_back(mark);
  path_.push_back(v);
  on_path_[v] = 1;
  return {true, PruneReason::None};
}

void SearchState::retract() {
  if (path_.size() < 2) throw Error(ErrorCode::PathTooShort, "cannot retract the root");
  on_path_[path_.back()] = 0;
  path_.pop_back();
  undo_to(frames_.back());
  frames_.pop_back();
}

CloseResult SearchState::close() {
  CloseResult out;
  const int L = length();
  if (L < 3) {
    out.status = CloseStatus::TooShort;
    return out;
  }
  const Vertex r = root(), z = last();
  if (!map_->adjacent(z, r)) {
    out.status = CloseStatus::NotAdjacent;
    return out;
  }
  const Vertex y = path_[L - 2], v1 = path_[1];
  if (options_.remark2 && options_.seam_remark2 && (is_corner_face(y, z, r) || is_corner_face(z, r, v1))) {
    out.status = CloseStatus::SeamCorner;
    return out;
  }
  out.status = CloseStatus::Closed;

  const std::size_t mark = journal_.size();
  PruneReason why = color_corner(y, z, r);
  if (why == PruneReason::None) why = color_corner(z, r, v1);
  if (why != PruneReason::None) {
    undo_to(mark);
    out.verdict.pruned_by = why;
    return out;
  }
  try {
    out.verdict = complete_ ? complete_graph_verdict() : flood_verdict();
  } catch (...) {
    undo_to(mark);
    throw;
  }
  undo_to(mark);
  return out;
}

namespace {

std::string cycle_text(const std::vector<Vertex>& path) {
  std::string s = "(";
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "," : "") + std::to_string(path[i]);
  return s + ")";
}

}  // namespace

SplitVerdict SearchState::complete_graph_verdict() const {
  const int n = map_->vertex_count();
  const int L = length();
  SplitVerdict v;
  Color d = Color::None;
  for (Vertex w = 0; w < n; ++w) {
    if (on_path_[w]) continue;
    const CyclicLedger& led = ledgers_[w];
    const bool red = led.count(Color::Red) > 0, blue = led.count(Color::Blue) > 0;
    if (red == blue) return v;
    const Color cw = red ? Color::Red : Color::Blue;
    if (d == Color::None) d = cw;
    else if (d != cw) return v;
  }

  auto side_genus = [&](long long arcs) {
    const long long num = arcs - 2LL * L + 6;
    if (num < 0 || num % 12 != 0 || num / 12 > genus_)
      throw Error(ErrorCode::NonIntegralGenus, "cycle " + cycle_text(path_) + " gives (" + std::to_string(arcs) +
                                                   " - 2*" + std::to_string(L) + " + 6)/12");
    return static_cast<int>(num / 12);
  };

  v.separating = true;
  if (d == Color::None) {
    v.hamiltonian = true;
    v.side_color = Color::Red;
    v.side_arcs = total_[0];
    v.side_genus = side_genus(total_[0]);
    const int rest = side_genus(total_[1]);
    if (v.side_genus + rest != genus_)
      throw Error(ErrorCode::NonIntegralGenus, "Hamiltonian cycle " + cycle_text(path_) + " sides sum to " +
                                                   std::to_string(v.side_genus + rest));
  } else {
    v.side_color = other(d);
    v.side_arcs = total_[v.side_color == Color::Red ? 0 : 1];
    v.side_genus = side_genus(v.side_arcs);
  }
  v.type = std::min(v.side_genus, genus_ - v.side_genus);
  v.contractible = v.type == 0;
  return v;
}

SplitVerdict SearchState::flood_verdict() const {
  const RotationMap& m = *map_;
  const int n = m.vertex_count();
  const int L = length();
  SplitVerdict v;
  std::vector<Color> side(n, Color::None);
  std::vector<Vertex> stack;
  long long interior[2] = {0, 0};
  long long degree_sum[2] = {0, 0};
  for (Vertex s = 0; s < n; ++s) {
    if (on_path_[s] || side[s] != Color::None) continue;
    // one component of the off-path subgraph
    Color comp = Color::None;
    std::vector<Vertex> members;
    stack.push_back(s);
    side[s] = Color::Red;
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      members.push_back(w);
      const CyclicLedger& led = ledgers_[w];
      for (Color c : {Color::Red, Color::Blue}) {
        if (led.count(c) == 0) continue;
        if (comp == Color::None) comp = c;
        else if (comp != c) return v;
      }
      for (Vertex x : m.rotation(w))
        if (!on_path_[x] && side[x] == Color::None) {
          side[x] = Color::Red;
          stack.push_back(x);
        }
    }
    if (comp == Color::None) return v;
    const int k = comp == Color::Red ? 0 : 1;
    for (Vertex w : members) {
      side[w] = comp;
      ++interior[k];
      degree_sum[k] += m.degree(w);
    }
  }

  int g[2];
  for (int k = 0; k < 2; ++k) {
    const long long twice_e = 2LL * L + total_[k] + degree_sum[k];
    const long long three_f = twice_e - L;
    if (twice_e % 2 != 0 || three_f % 3 != 0)
      throw Error(ErrorCode::NonIntegralGenus, "cycle " + cycle_text(path_) + " has a non-triangulated side");
    const long long chi = L + interior[k] - twice_e / 2 + three_f / 3;
    if ((1 - chi) % 2 != 0 || chi > 1)
      throw Error(ErrorCode::NonIntegralGenus, "cycle " + cycle_text(path_) + " side chi " + std::to_string(chi));
    g[k] = static_cast<int>((1 - chi) / 2);
  }
  if (g[0] + g[1] != genus_)
    throw Error(ErrorCode::NonIntegralGenus, "cycle " + cycle_text(path_) + " sides sum to " +
                                                 std::to_string(g[0] + g[1]));
  const int k = interior[1] < interior[0] ? 1 : 0;
  v.separating = true;
  v.hamiltonian = interior[0] + interior[1] == 0;
  v.side_color = k == 0 ? Color::Red : Color::Blue;
  v.side_arcs = total_[k];
  v.side_genus = g[k];
  v.type = std::min(g[0], g[1]);
  v.contractible = v.type == 0;
  return v;
}

}  // namespace splitcyc
