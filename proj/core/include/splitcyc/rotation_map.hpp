#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitcyc/error.hpp"

namespace splitcyc {

using Vertex = std::int32_t;

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
  bool operator==(const Dart&) const = default;
};

struct RotationViolation {
  ErrorCode code;
  Vertex vertex;
  std::string detail;
};

/// First invariant violation of a raw rotation table, if any.
std::optional<RotationViolation> check_rotations(const std::vector<std::vector<Vertex>>& rotations);

/// A face as the cyclic sequence of dart tails.
using Face = std::vector<Vertex>;

struct FaceTable {
  std::vector<Face> faces;
  // face id of the dart (v, i), indexed by RotationMap::dart_id
  std::vector<std::int32_t> face_of_dart;
};

/// Orientable combinatorial map stored as a rotation system. Immutable once
/// built. Darts are addressed as (vertex, rotation index).
///
/// Faces are traced with one fixed convention: the successor of u->v is v->w
/// where w follows u in the rotation at v.
class RotationMap {
 public:
  RotationMap() = default;

  /// Validates and builds. Throws Error on EmptyRotation, SelfLoop,
  /// VertexOutOfRange, RepeatedNeighbor, AsymmetricAdjacency, Disconnected.
  static RotationMap build(std::vector<std::vector<Vertex>> rotations);

  int vertex_count() const noexcept { return static_cast<int>(rot_.size()); }
  int edge_count() const noexcept { return static_cast<int>(heads_.size() / 2); }
  int dart_count() const noexcept { return static_cast<int>(heads_.size()); }
  int degree(Vertex v) const noexcept { return offset_[v + 1] - offset_[v]; }

  Vertex neighbor(Vertex v, int i) const noexcept { return heads_[offset_[v] + i]; }
  const std::vector<Vertex>& rotation(Vertex v) const noexcept { return rot_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rot_; }

  /// Rotation index of w around v, or -1 when not adjacent.
  int position(Vertex v, Vertex w) const noexcept;
  bool adjacent(Vertex v, Vertex w) const noexcept { return position(v, w) >= 0; }

  int dart_id(Vertex v, int i) const noexcept { return offset_[v] + i; }
  /// Rotation index of v around neighbor(v, i).
  int opposite_index(Vertex v, int i) const noexcept { return opp_[offset_[v] + i]; }

  /// Next dart in the same face as (v, i), returned as (head, index).
  std::pair<Vertex, int> face_next(Vertex v, int i) const noexcept;

  FaceTable faces() const;
  int face_count() const;
  int euler_characteristic() const;
  /// (2 - chi) / 2. Throws OddChi on odd characteristic.
  int genus() const;

  bool operator==(const RotationMap& o) const noexcept { return rot_ == o.rot_; }

 private:
  std::vector<std::vector<Vertex>> rot_;
  std::vector<std::int32_t> offset_;
  std::vector<Vertex> heads_;
  std::vector<std::int32_t> opp_;
  // dense V x V position table, -1 where absent; empty when V is large
  std::vector<std::int32_t> pos_;
  // sorted (neighbor, index) pairs per vertex, used when pos_ is empty
  std::vector<std::vector<std::pair<Vertex, std::int32_t>>> sorted_;
};

std::vector<Face> faces(const RotationMap& map);
int genus(const RotationMap& map);

/// All faces are triangles, the graph is simple and the map is not the
/// 3-cycle in the sphere.
bool is_simplicial_triangulation(const RotationMap& map);

/// True when some face of `map` is the directed triangle (a, b, c) up to
/// cyclic shift.
bool is_face_triangle(const RotationMap& map, Vertex a, Vertex b, Vertex c);

}  // namespace splitcyc
