#include <doctest.h>

#include "svt/errors.hpp"
#include "svt/symspaces.hpp"
#include "oracles.hpp"

using namespace svt;
using oracle::table_rank;

TEST_CASE("registry has the 13 rows") {
  auto& reg = registry();
  REQUIRE(reg.size() == 13);
  for (int i = 0; i < 13; ++i) CHECK(reg[i].case_id == i + 1);
  CHECK(reg[4].space == "U(2p,2q)/Sp(p,q)");
  CHECK(reg[4].g_check == "gl(p+q)");
  CHECK(reg[4].l_check == "(gl_2)^{p+q}");
  CHECK(reg[12].space == "Sp(2n,R)/GL(n,R)");
  CHECK(reg[12].g_check == "so(2n+1)");
  CHECK(reg[12].l_check == "(gl_1)^n");
}

TEST_CASE("validity") {
  CHECK_THROWS_AS(SymmetricSpace::make(9, 1, 1).validate(), Error);
  CHECK_THROWS_AS(SymmetricSpace::make(9, 3, 1).validate(), Error);
  CHECK(SymmetricSpace::make(9, 2, 1).is_valid());
  CHECK_THROWS_AS(SymmetricSpace::make(1, 3, 2), Error);  // 2p > n
  CHECK_THROWS_AS(SymmetricSpace::make(3, 2, 0, 1, 0), Error);  // r > r'
  CHECK_THROWS_AS(SymmetricSpace::make(7, 1, 0, 1, 0), Error);  // p+q even
  CHECK_THROWS_AS(SymmetricSpace::make(8, 1, 0, 2, 0), Error);  // p+q odd
  CHECK_THROWS_AS(parse_space("case14:n=2"), Error);
  CHECK_THROWS_AS(parse_space("fivecase"), Error);
}

TEST_CASE("case 9 with p+q odd is normalized to p even") {
  auto x = SymmetricSpace::make(9, 1, 2);
  CHECK(x.p == 2);
  CHECK(x.q == 1);
}

TEST_CASE("ranks") {
  CHECK(rank(SymmetricSpace::make(1, 7, 2)) == 2);
  CHECK(rank(SymmetricSpace::make(2, 2, 2)) == 4);
  CHECK(rank(SymmetricSpace::make(8, 1, 1, 2, 2)) == 2);
  for (int c = 1; c <= 13; ++c)
    for (auto& x : instances(c, 6)) CHECK_MESSAGE(rank(x) == table_rank(x), x.spec());
}

TEST_CASE("spec strings round trip") {
  for (int c = 1; c <= 13; ++c)
    for (auto& x : instances(c, 4)) CHECK(parse_space(x.spec()) == x);
  CHECK(parse_space("case3:r=1,s=0,rp=1,sp=2").spec() == "case3:r=1,s=0,rp=1,sp=2");
}

TEST_CASE("real Levi subgroups") {
  auto l1 = real_levi(SymmetricSpace::make(1, 5, 2));
  CHECK(l1.L_name() == "(C^x)^2 x GL(1,R)");
  CHECK(l1.L_cap_H_name() == "(R^x)^2 x GL(1,R)");
  auto l5 = real_levi(SymmetricSpace::make(5, 1, 2));
  CHECK(l5.L_name() == "U(2,0) x U(0,2)^2");
  CHECK(l5.L_cap_H_name() == "SU(2,0) x SU(0,2)^2");
  auto l13 = real_levi(SymmetricSpace::make(13, 3));
  CHECK(l13.L_name() == "U(1)^3");
  CHECK(l13.L_cap_H_name() == "{+-1}^3");
  // both readings of case 9, n odd are kept
  CHECK(real_levi(SymmetricSpace::make(9, 2, 3)).alt_readings.size() == 2);
}

TEST_CASE("complexified Levi matches l_X") {
  for (int c = 1; c <= 13; ++c)
    for (auto& x : instances(c, 6))
      CHECK_MESSAGE(complexified_dual(real_levi(x)) == l_check_factors(dual_data(x)), x.spec());
}

TEST_CASE("character lattices") {
  CHECK(levi_char_constraints(SymmetricSpace::make(13, 2)).trivial_on_LH.find("even") != std::string::npos);
  auto x13 = SymmetricSpace::make(13, 2);
  CHECK(char_trivial_on_LH(x13, {2, 4}));
  CHECK_FALSE(char_trivial_on_LH(x13, {2, 3}));
  auto x3 = SymmetricSpace::make(3, 1, 0, 2, 0);
  CHECK(char_trivial_on_LH(x3, {3, -3, 0}));
  CHECK_FALSE(char_trivial_on_LH(x3, {3, 2, 0}));
  CHECK(char_trivial_on_LH(SymmetricSpace::make(12, 2), {5, 7}));
}

TEST_CASE("rank-one fixtures") {
  auto& f = rank_one_fixtures();
  CHECK(f.size() == 12);
  for (auto& r : f) {
    CHECK(rank(r.space) == 1);
    CHECK(r.space.case_id == r.case_id);
  }
}
