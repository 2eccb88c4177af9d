#pragma once

#include <string>
#include <vector>

#include "splitcyc/rotation_map.hpp"
#include "splitcyc/search_state.hpp"

namespace splitcyc {

enum class FamilyKind { Gamma, GammaIK, GammaPrimeIK, TypeJ };

std::string to_string(FamilyKind kind);

struct FamilyCycle {
  int s = 0;
  FamilyKind kind = FamilyKind::Gamma;
  int i = 0;
  int k = 0;
  int j = 0;
  std::vector<Vertex> vertices;
  int claimed_type = 1;
};

/// (0, 5, 2, 9s+8, 6, 1, 4, 5s+6) mod 12s+7. Throws SOutOfRange for s < 3.
FamilyCycle gamma(int s);

enum class Variant { Plain, Prime };

/// Plain: k + (0, 2i+3, 2, 9s+7+i, 2i+4, 1, 2i+2, 5s+5+i).
/// Prime: k + (0, 2i+2, 2, 5s+4+i, 2i+3, 1, 2i+1, 9s+7+i).
/// Requires s >= 2, 1 <= i <= s-1; k is reduced mod 12s+7. Throws
/// ParamOutOfRange.
FamilyCycle gamma_family(int s, int i, int k, Variant variant);

/// Boundary of a punctured genus-j surface made of two disjoint windows of
/// 4j+1 consecutive triangles around a vertex of the Gross-Tucker map, the
/// second one translated. Requires 1 <= j <= ceil((s-1)/2). Throws
/// ParamOutOfRange, or NotACycle when no such pair exists.
FamilyCycle type_j_boundary(int s, int j);

struct MemberCheck {
  FamilyCycle cycle;
  bool simple = false;
  bool splitting = false;
  int computed_type = -1;
  // from cut_along; -1 when not checked
  int oracle_type = -1;
  bool agrees = true;
  std::string note;
  bool passed() const { return simple && splitting && computed_type == cycle.claimed_type && agrees; }
};

struct FamilyReport {
  int s = 0;
  int n = 0;
  int genus = 0;
  bool irreducible = false;
  std::vector<MemberCheck> members;
  // distinct undirected cycles among the gamma_family members
  int family_distinct = 0;
  int family_expected = 0;
  // family members that coincide with a translate of gamma
  int overlaps_with_gamma_orbit = 0;
  // gamma side without interior vertices; -1 when s < 3
  int gamma_side_triangles = -1;
  int gamma_side_interior_edges = -1;
  bool all_passed() const;
};

/// Checks every family member on derive(gross_tucker_base(s)) with the fast
/// verdict, and cross-checks against cut_along on every member when
/// `oracle_all`, otherwise on gamma and the k = 0 members.
FamilyReport verify_families(int s, bool oracle_all = false, int workers = 1);

/// Fast verdict for an arbitrary cycle of `map`. Throws NotACycle or
/// NotAdjacent.
CloseResult verdict_for_cycle(const RotationMap& map, const std::vector<Vertex>& cycle,
                              const StateOptions& options = {false, false, true});

}  // namespace splitcyc
