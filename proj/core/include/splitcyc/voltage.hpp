#pragma once

#include <array>
#include <string>
#include <vector>

#include "splitcyc/rotation_map.hpp"

namespace splitcyc {

/// One-vertex base map over Z_n, stored as the cyclic order of dart
/// voltages at the vertex. The dart with voltage a is opposite to n - a.
struct VoltageBaseMap {
  int n = 0;
  std::vector<int> sequence;

  bool operator==(const VoltageBaseMap&) const = default;
};

/// Checks that n is odd and `sequence` lists every nonzero residue once.
/// Throws InvalidParameter or NotAPermutation.
VoltageBaseMap make_base(int n, std::vector<int> sequence);

using VoltageTriple = std::array<int, 3>;

/// Traced base faces. Throws NonTriangularFace or NonzeroFaceSum.
std::vector<VoltageTriple> base_faces(const VoltageBaseMap& base);

/// Covering map on Z_n: the rotation at i is (i + a_1, ..., i + a_{n-1}).
/// Throws DerivedNotSimple or DerivedNotTriangular.
RotationMap derive(const VoltageBaseMap& base);

/// Base map of the Gross-Tucker embedding of K_{12s+7}. Throws
/// InvalidParameter for s < 1.
VoltageBaseMap gross_tucker_base(int s);

enum class BundledBase { A, B, C };

/// The three Z_19 base maps.
VoltageBaseMap bundled_base(BundledBase name);
/// Accepts "A", "B", "C" (case-insensitive). Throws InvalidParameter.
BundledBase parse_bundled_name(const std::string& name);
std::string to_string(BundledBase name);

/// True when i -> i+1 (mod V) maps every rotation onto the next one.
bool check_translation_automorphism(const RotationMap& map);

}  // namespace splitcyc
