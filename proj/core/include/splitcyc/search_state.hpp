#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "splitcyc/cyclic_ledger.hpp"
#include "splitcyc/rotation_map.hpp"

namespace splitcyc {

enum class PruneReason : std::uint8_t {
  None,
  FacialCorner,     // consecutive path edges bound a face
  OppositeColor, // test 1
  PredecessorColor, // test 2
  SuccessorColor,   // test 3
  Interleaved,      // test 4
};

std::string_view to_string(PruneReason r) noexcept;

struct ExtendResult {
  bool extended = false;
  PruneReason reason = PruneReason::None;
  explicit operator bool() const noexcept { return extended; }
};

struct SplitVerdict {
  bool separating = false;
  // side with no interior vertex (the red side of a Hamiltonian cycle)
  Color side_color = Color::None;
  long long side_arcs = 0;
  int side_genus = 0;
  int type = 0;
  bool contractible = false;
  bool hamiltonian = false;
  // set when the four tests rejected the closed cycle
  PruneReason pruned_by = PruneReason::None;
};

enum class CloseStatus : std::uint8_t { Closed, NotAdjacent, TooShort, SeamCorner };

struct CloseResult {
  CloseStatus status = CloseStatus::NotAdjacent;
  SplitVerdict verdict;
};

struct StateOptions {
  bool remark2 = true;
  bool seam_remark2 = true;
  bool test4 = true;
};

/// One node of the cycle tree: a simple path from the root with the colors
/// of every dart leaving an interior path vertex, each stored at its head.
///
/// Coloring at v_k for the subpath (p, v_k, q): darts strictly after q and
/// before p in rotation order are red, the others blue.
class SearchState {
 public:
  SearchState(const RotationMap& map, Vertex root, StateOptions options = {});
  // the state keeps a pointer to the map
  SearchState(RotationMap&&, Vertex, StateOptions = {}) = delete;

  const RotationMap& map() const noexcept { return *map_; }
  const std::vector<Vertex>& path() const noexcept { return path_; }
  Vertex root() const noexcept { return path_.front(); }
  Vertex last() const noexcept { return path_.back(); }
  int length() const noexcept { return static_cast<int>(path_.size()); }
  bool on_path(Vertex v) const noexcept { return on_path_[v] != 0; }
  const CyclicLedger& ledger(Vertex v) const noexcept { return ledgers_[v]; }
  long long colored(Color c) const noexcept { return total_[c == Color::Red ? 0 : 1]; }
  const StateOptions& options() const noexcept { return options_; }

  /// Throws NotAdjacent or AlreadyOnPath. On a pruned step the state is left
  /// unchanged.
  ExtendResult extend(Vertex v);

  /// Throws PathTooShort on a one-vertex path.
  void retract();

  /// Verdict for the cycle path + (last, root). Leaves the state unchanged.
  CloseResult close();

  bool operator==(const SearchState& o) const noexcept {
    return path_ == o.path_ && ledgers_ == o.ledgers_;
  }

 private:
  struct Mark {
    Vertex head;
    std::int32_t pos;
  };

  // colors the darts of `at` around (prev, at, next) and runs the tests
  PruneReason color_corner(Vertex prev, Vertex at, Vertex next);
  void undo_to(std::size_t mark) noexcept;
  bool is_corner_face(Vertex a, Vertex b, Vertex c) const noexcept;
  SplitVerdict complete_graph_verdict() const;
  SplitVerdict flood_verdict() const;

  const RotationMap* map_;
  StateOptions options_;
  bool complete_;
  int genus_;
  std::vector<Vertex> path_;
  std::vector<std::uint8_t> on_path_;
  std::vector<CyclicLedger> ledgers_;
  std::vector<Mark> journal_;
  std::vector<std::size_t> frames_;
  long long total_[2] = {0, 0};
};

}  // namespace splitcyc
