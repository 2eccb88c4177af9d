#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "splitcyc/rotation_map.hpp"
#include "splitcyc/search_state.hpp"

namespace splitcyc {

struct SearchOptions {
  std::optional<int> max_length;
  bool remark2 = true;
  bool seam_remark2 = true;
  bool test4 = true;
  bool assume_transitive = false;
  int workers = 1;
};

struct TypeRow {
  int type = 0;
  long long directed = 0;
  long long nsc = 0;
  // 0 when no cycle of this type was found
  int min_length = 0;
};

struct TypeTable {
  int genus = 0;
  int vertices = 0;
  Vertex root = 0;
  // types 1..genus/2
  std::vector<TypeRow> rows;
  // nodes of the cycle tree surviving every test, root excluded
  long long visited = 0;
  long long closed = 0;
  long long contractible_directed = 0;
  long long splitting_directed = 0;
  int contractible_min_length = 0;
};

/// Called for every closed cycle (the path, closing edge implied). With
/// several workers it runs concurrently and must be thread safe.
using CloseVisitor = std::function<void(const std::vector<Vertex>& cycle, const SplitVerdict& verdict)>;

/// Explores the tree of simple paths from `root`, closing every path whose
/// last vertex is adjacent to the root. Throws NotTriangulation, or
/// NotTransitive when options.assume_transitive does not hold.
TypeTable enumerate(const RotationMap& map, Vertex root, const SearchOptions& options = {},
                    const CloseVisitor& visitor = {});

}  // namespace splitcyc
