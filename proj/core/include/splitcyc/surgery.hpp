#pragma once

#include <array>
#include <utility>
#include <vector>

#include "splitcyc/rotation_map.hpp"

namespace splitcyc {

/// Closure of a union of faces.
struct Subsurface {
  std::vector<int> faces;
  int boundary_cycles = 0;
  int vertices = 0;
  int edges = 0;
  int face_count = 0;
  int chi = 0;
  int genus = 0;
};

/// Splits the faces of `map` into components connected across edges not on
/// `cycle`. Separating iff the result has two entries. Slow reference path.
std::vector<Subsurface> cut_along(const RotationMap& map, const std::vector<Vertex>& cycle);

using Triangle = std::array<Vertex, 3>;

/// Removes faceA from mapA and faceB from mapB and identifies the boundaries
/// with opposite orientation: a0~b2, a1~b1, a2~b0. Vertices of mapA keep
/// their ids; the rest of mapB follows in increasing order.
RotationMap glue_along_triangle(const RotationMap& mapA, const Triangle& faceA,
                                const RotationMap& mapB, const Triangle& faceB);

using Edge = std::pair<Vertex, Vertex>;

/// Merges v into u. Vertices above v are shifted down by one.
RotationMap contract_edge(const RotationMap& map, Edge edge);

/// Edges whose only 3-cycles are their two incident faces. Empty for K4 in
/// the sphere.
std::vector<Edge> contractible_edges(const RotationMap& map);

}  // namespace splitcyc
