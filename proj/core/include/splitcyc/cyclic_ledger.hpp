#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace splitcyc {

enum class Color : std::uint8_t { None = 0, Red = 1, Blue = 2 };

inline Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }

/// Colors attached to the positions 0..size-1 of one rotation. Cyclic
/// successor/predecessor queries run over a 64-ary summary tree, so they cost
/// O(log_64 size). Keeps per-color totals, prefix counts and the number of
/// color changes met when walking once around the colored positions.
class CyclicLedger {
 public:
  CyclicLedger() = default;
  explicit CyclicLedger(int size) { reset(size); }

  void reset(int size) {
    size_ = size;
    color_.assign(size, Color::None);
    levels_.clear();
    int words = size;
    do {
      words = (words + 63) / 64;
      levels_.emplace_back(static_cast<std::size_t>(words), 0);
    } while (words > 1);
    fenwick_[0].assign(size + 1, 0);
    fenwick_[1].assign(size + 1, 0);
    count_[0] = count_[1] = 0;
    changes_ = 0;
  }

  int size() const noexcept { return size_; }
  Color at(int i) const noexcept { return color_[i]; }
  int count(Color c) const noexcept { return count_[idx(c)]; }
  int colored() const noexcept { return count_[0] + count_[1]; }
  bool empty() const noexcept { return colored() == 0; }
  /// Color changes around the cycle of colored positions (even, 0 when
  /// monochromatic).
  int changes() const noexcept { return changes_; }

  /// Nearest colored position strictly after i, cyclically; -1 if none
  /// besides i.
  int next(int i) const noexcept {
    int j = find_from(i + 1);
    if (j < 0) j = find_from(0);
    return j == i ? -1 : j;
  }

  /// Nearest colored position strictly before i, cyclically; -1 if none
  /// besides i.
  int prev(int i) const noexcept {
    int j = find_upto(i - 1);
    if (j < 0) j = find_upto(size_ - 1);
    return j == i ? -1 : j;
  }

  /// Positions colored c in [from, to) going forward cyclically.
  int count_between(Color c, int from, int to) const noexcept {
    if (from <= to) return prefix(c, to) - prefix(c, from);
    return count(c) - (prefix(c, from) - prefix(c, to));
  }

  void insert(int i, Color c) noexcept {
    const int p = prev(i);
    if (p >= 0) {
      const int s = next(i);
      changes_ += diff(color_[p], c) + diff(c, color_[s]) - diff(color_[p], color_[s]);
    }
    color_[i] = c;
    set_bit(i);
    ++count_[idx(c)];
    bump(c, i, 1);
  }

  void erase(int i) noexcept {
    const Color c = color_[i];
    const int p = prev(i);
    if (p >= 0) {
      const int s = next(i);
      changes_ -= diff(color_[p], c) + diff(c, color_[s]) - diff(color_[p], color_[s]);
    }
    color_[i] = Color::None;
    clear_bit(i);
    --count_[idx(c)];
    bump(c, i, -1);
  }

  bool operator==(const CyclicLedger& o) const noexcept {
    return size_ == o.size_ && color_ == o.color_ && changes_ == o.changes_;
  }

 private:
  static int idx(Color c) noexcept { return c == Color::Red ? 0 : 1; }
  static int diff(Color a, Color b) noexcept { return a != b ? 1 : 0; }

  void set_bit(int i) noexcept {
    for (auto& level : levels_) {
      std::uint64_t& w = level[i >> 6];
      const bool was_zero = w == 0;
      w |= std::uint64_t{1} << (i & 63);
      if (!was_zero) return;
      i >>= 6;
    }
  }

  void clear_bit(int i) noexcept {
    for (auto& level : levels_) {
      std::uint64_t& w = level[i >> 6];
      w &= ~(std::uint64_t{1} << (i & 63));
      if (w != 0) return;
      i >>= 6;
    }
  }

  // smallest set position >= i, or -1
  int find_from(int i) const noexcept {
    if (i >= size_) return -1;
    int lvl = 0;
    int pos = i;
    // climb until a word holds a candidate at or after pos
    for (;; ++lvl) {
      if (lvl == static_cast<int>(levels_.size())) return -1;
      const auto& level = levels_[lvl];
      const int w = pos >> 6;
      if (w >= static_cast<int>(level.size())) return -1;
      const std::uint64_t bits = level[w] & (~std::uint64_t{0} << (pos & 63));
      if (bits) {
        pos = (w << 6) + std::countr_zero(bits);
        break;
      }
      pos = w + 1;
    }
    // descend to the first set leaf below pos
    for (; lvl > 0; --lvl) pos = (pos << 6) + std::countr_zero(levels_[lvl - 1][pos]);
    return pos;
  }

  // largest set position <= i, or -1
  int find_upto(int i) const noexcept {
    if (i < 0) return -1;
    int lvl = 0;
    int pos = i;
    for (;; ++lvl) {
      if (lvl == static_cast<int>(levels_.size())) return -1;
      const auto& level = levels_[lvl];
      const int w = pos >> 6;
      const int sh = 63 - (pos & 63);
      const std::uint64_t bits = (level[w] << sh) >> sh;
      if (bits) {
        pos = (w << 6) + 63 - std::countl_zero(bits);
        break;
      }
      if (w == 0) return -1;
      pos = w - 1;
    }
    for (; lvl > 0; --lvl) pos = (pos << 6) + 63 - std::countl_zero(levels_[lvl - 1][pos]);
    return pos;
  }

  void bump(Color c, int i, int delta) noexcept {
    auto& f = fenwick_[idx(c)];
    for (int k = i + 1; k <= size_; k += k & -k) f[k] += delta;
  }

  // colored c in [0, i)
  int prefix(Color c, int i) const noexcept {
    const auto& f = fenwick_[idx(c)];
    int s = 0;
    for (int k = i; k > 0; k -= k & -k) s += f[k];
    return s;
  }

  int size_ = 0;
  std::vector<Color> color_;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<int> fenwick_[2];
  int count_[2] = {0, 0};
  int changes_ = 0;
};

}  // namespace splitcyc
