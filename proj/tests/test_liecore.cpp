#include "doctest.h"

#include "freudenthal.hpp"
#include "lowcohom/errors.hpp"
#include "lowcohom/liecore.hpp"

using namespace lowcohom;

namespace {

SimpleGroupType T(char f, int r) { return {static_cast<Family>(f - 'A'), r}; }

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(root_system(T('A', 4)).positive_roots.size() == 10);
  CHECK(root_system(T('B', 3)).positive_roots.size() == 9);
  CHECK(root_system(T('C', 4)).positive_roots.size() == 16);
  CHECK(root_system(T('D', 5)).positive_roots.size() == 20);
  CHECK(root_system(T('E', 6)).positive_roots.size() == 36);
  CHECK(root_system(T('E', 7)).positive_roots.size() == 63);
  CHECK(root_system(T('E', 8)).positive_roots.size() == 120);
  CHECK(root_system(T('F', 4)).positive_roots.size() == 24);
  CHECK(root_system(T('G', 2)).positive_roots.size() == 6);
}

TEST_CASE("group dimension agrees with root count") {
  for (auto t : {T('A', 7), T('B', 5), T('C', 6), T('D', 7), T('E', 6), T('E', 8), T('F', 4), T('G', 2)}) {
    const auto& rs = root_system(t);
    CHECK(group_dim(t) == t.rank + 2 * static_cast<int>(rs.positive_roots.size()));
  }
}

TEST_CASE("landmark degrees") {
  CHECK(weyl_dim(T('G', 2), {1, 0}) == 7);
  CHECK(weyl_dim(T('G', 2), {0, 1}) == 14);
  CHECK(weyl_dim(T('F', 4), {0, 0, 0, 1}) == 26);
  CHECK(weyl_dim(T('F', 4), {1, 0, 0, 0}) == 52);
  CHECK(weyl_dim(T('E', 6), {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(weyl_dim(T('E', 7), {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(weyl_dim(T('E', 8), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(weyl_dim(T('B', 5), {0, 0, 0, 0, 1}) == 32);
  CHECK(weyl_dim(T('D', 6), {0, 0, 0, 0, 0, 1}) == 32);
  CHECK(weyl_dim(T('D', 7), {0, 0, 0, 0, 0, 0, 1}) == 64);
  CHECK(weyl_dim(T('C', 3), {0, 0, 1}) == 14);
  CHECK(weyl_dim(T('A', 5), {0, 0, 1, 0, 0}) == 20);
}

TEST_CASE("Frobenius-Schur type") {
  CHECK(fs_type(T('A', 1), {1}) == FSType::quaternionic);
  CHECK(fs_type(T('A', 1), {2}) == FSType::real);
  CHECK(fs_type(T('A', 5), {0, 0, 1, 0, 0}) == FSType::quaternionic);
  CHECK(fs_type(T('A', 7), {0, 0, 0, 1, 0, 0, 0}) == FSType::real);
  CHECK(fs_type(T('A', 4), {2, 0, 0, 0}) == FSType::complex);
  CHECK(fs_type(T('C', 3), {0, 0, 1}) == FSType::quaternionic);
  CHECK(fs_type(T('C', 3), {0, 1, 0}) == FSType::real);
  CHECK(fs_type(T('B', 5), {0, 0, 0, 0, 1}) == FSType::quaternionic);
  CHECK(fs_type(T('B', 4), {0, 0, 0, 1}) == FSType::real);
  CHECK(fs_type(T('D', 6), {0, 0, 0, 0, 0, 1}) == FSType::quaternionic);
  CHECK(fs_type(T('D', 8), {0, 0, 0, 0, 0, 0, 0, 1}) == FSType::real);
  CHECK(fs_type(T('D', 5), {0, 0, 0, 0, 1}) == FSType::complex);
  CHECK(fs_type(T('E', 6), {1, 0, 0, 0, 0, 0}) == FSType::complex);
  CHECK(fs_type(T('E', 7), {0, 0, 0, 0, 0, 0, 1}) == FSType::quaternionic);
  CHECK(fs_type(T('F', 4), {0, 0, 0, 1}) == FSType::real);
}

TEST_CASE("canonical weights respect diagram symmetry") {
  CHECK(canonical_weight(T('A', 4), {0, 0, 0, 2}) == HighestWeight{2, 0, 0, 0});
  CHECK(canonical_weight(T('D', 4), {0, 0, 0, 1}) == HighestWeight{1, 0, 0, 0});
  CHECK(canonical_weight(T('D', 5), {0, 0, 0, 1, 0}) == HighestWeight{0, 0, 0, 1, 0});
  CHECK(canonical_weight(T('D', 5), {0, 0, 0, 0, 1}) == HighestWeight{0, 0, 0, 1, 0});
  CHECK(canonical_weight(T('E', 6), {0, 0, 0, 0, 0, 1}) == HighestWeight{1, 0, 0, 0, 0, 0});
}

TEST_CASE("enumeration is complete below a degree cap") {
  const auto list = enumerate_irreps(T('A', 1), 5);
  REQUIRE(list.size() == 5);
  CHECK(list.back().degree == 5);
  const auto a3 = enumerate_irreps(T('A', 3), 10);
  // 1, 4, 4*, 6, 10, 10*
  CHECK(a3.size() == 6);
}

TEST_CASE("parser reports positions") {
  CHECK(parse_typed_weight("A5[0,0,1,0,0]").weight == HighestWeight{0, 0, 1, 0, 0});
  CHECK(format_typed_weight(parse_typed_weight(" G2[ 1 , 0 ]")) == "G2[1,0]");
  CHECK_THROWS_AS(parse_typed_weight("A2[1]"), ParseError);
  CHECK_THROWS_AS(parse_typed_weight("D2[1,0]"), ParseError);
  try {
    parse_typed_weight("B3[0,1,x]");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(weyl_dim(T('A', 2), {1}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(T('A', 2), {-1, 0}), std::invalid_argument);
}

TEST_CASE("Freudenthal oracle agrees on small weights") {
  for (auto t : {T('A', 2), T('B', 2), T('G', 2), T('C', 3), T('D', 4)}) {
    for (const auto& info : enumerate_irreps(t, 200)) {
      CAPTURE(format_typed_weight({t, info.weight}));
      CHECK(oracle::freudenthal_dim(t, info.weight) == info.degree);
    }
  }
}
