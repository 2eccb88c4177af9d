#include <algorithm>

#include "doctest.h"
#include "splitcyc/error.hpp"
#include "splitcyc/families.hpp"
#include "splitcyc/surgery.hpp"
#include "splitcyc/voltage.hpp"

using namespace splitcyc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::IoError;
}

int oracle_type(const RotationMap& m, const std::vector<Vertex>& c) {
  const auto parts = cut_along(m, c);
  return parts.size() == 2 ? std::min(parts[0].genus, parts[1].genus) : -1;
}

}  // namespace

TEST_CASE("gamma") {
  CHECK(gamma(3).vertices == std::vector<Vertex>{0, 5, 2, 35, 6, 1, 4, 21});
  CHECK(gamma(4).vertices == std::vector<Vertex>{0, 5, 2, 44, 6, 1, 4, 26});
  CHECK(gamma(3).claimed_type == 1);
  CHECK(code_of([] { gamma(2); }) == ErrorCode::SOutOfRange);
}

TEST_CASE("gamma families") {
  CHECK(gamma_family(3, 1, 0, Variant::Plain).vertices == gamma(3).vertices);
  CHECK(gamma_family(3, 2, 0, Variant::Prime).vertices == std::vector<Vertex>{0, 6, 2, 21, 7, 1, 5, 36});
  CHECK(gamma_family(3, 1, 43, Variant::Plain).k == 0);
  CHECK(gamma_family(3, 1, 2, Variant::Plain).vertices == std::vector<Vertex>{2, 7, 4, 37, 8, 3, 6, 23});
  CHECK(code_of([] { gamma_family(3, 0, 0, Variant::Plain); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { gamma_family(3, 3, 0, Variant::Prime); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { gamma_family(1, 1, 0, Variant::Prime); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("type j boundaries") {
  CHECK(code_of([] { type_j_boundary(3, 2); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { type_j_boundary(3, 0); }) == ErrorCode::ParamOutOfRange);
  const FamilyCycle c = type_j_boundary(3, 1);
  CHECK(c.vertices.size() == 8);
  CHECK(oracle_type(derive(gross_tucker_base(3)), c.vertices) == 1);
  const FamilyCycle c2 = type_j_boundary(5, 2);
  CHECK(c2.claimed_type == 2);
  CHECK(c2.vertices.size() == 12);
  const RotationMap m5 = derive(gross_tucker_base(5));
  CHECK(oracle_type(m5, c2.vertices) == 2);
  const CloseResult r = verdict_for_cycle(m5, c2.vertices);
  CHECK(r.verdict.separating);
  CHECK(r.verdict.type == 2);
}

TEST_CASE("property: translates of gamma split with the same type") {
  for (int s : {3, 4}) {
    const RotationMap m = derive(gross_tucker_base(s));
    const int n = m.vertex_count();
    for (int t = 0; t < n; t += 5) {
      std::vector<Vertex> c;
      for (Vertex v : gamma(s).vertices) c.push_back((v + t) % n);
      const CloseResult r = verdict_for_cycle(m, c);
      CHECK(r.verdict.separating);
      CHECK(r.verdict.type == 1);
      CHECK(oracle_type(m, c) == 1);
    }
  }
}

TEST_CASE("gamma bounds ten triangles") {
  for (int s = 3; s <= 5; ++s) {
    const auto parts = cut_along(derive(gross_tucker_base(s)), gamma(s).vertices);
    REQUIRE(parts.size() == 2);
    const Subsurface& small = parts[0].face_count < parts[1].face_count ? parts[0] : parts[1];
    CHECK(small.face_count == 10);
    CHECK(small.edges - 8 == 11);
    CHECK(small.genus == 1);
  }
}

TEST_CASE("family report for s=2 and s=3") {
  const FamilyReport r2 = verify_families(2);
  CHECK(r2.irreducible);
  CHECK(r2.family_expected == 62);
  CHECK(r2.family_distinct == 62);
  CHECK(r2.gamma_side_triangles == -1);

  const FamilyReport r3 = verify_families(3);
  CHECK(r3.genus == 130);
  CHECK(r3.irreducible);
  CHECK(r3.family_distinct == 172);
  CHECK(r3.gamma_side_triangles == 10);
  CHECK(r3.gamma_side_interior_edges == 11);
  // the plain i=1 family is the orbit of gamma
  CHECK(r3.overlaps_with_gamma_orbit == 43);
  int i1_pass = 0;
  for (const MemberCheck& m : r3.members) {
    CHECK(m.agrees);
    if (m.cycle.kind != FamilyKind::Gamma && m.cycle.kind != FamilyKind::TypeJ && m.cycle.i == 1)
      i1_pass += m.passed();
  }
  CHECK(i1_pass == 86);
  CHECK(code_of([] { verify_families(1); }) == ErrorCode::SOutOfRange);
}
