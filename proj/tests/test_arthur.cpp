#include <doctest.h>

#include <algorithm>

#include "svt/arthur.hpp"
#include "svt/errors.hpp"

using namespace svt;

namespace {

LGroupDescriptor U(int n) { return dual_lgroup(ClassicalGroup::U(n, 0)); }
LGroupDescriptor Sp(int n) { return dual_lgroup(ClassicalGroup::Sp(n)); }

// Exponent ladder of R[a] shifted by s, written independently of inf_char.
std::vector<Rational> ladder(Rational s, int a) {
  std::vector<Rational> v;
  for (int j = 0; j < a; ++j) v.push_back(s + Rational(a - 1, 2) - j);
  return v;
}

std::vector<Rational> sorted_desc(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x > y; });
  return v;
}

}  // namespace

TEST_CASE("good parity grammar") {
  CHECK(is_good_parity(parse_psi(U(3), "chi(2)xR[1] + chi(-2)xR[1] + chi(0)xR[1]")));
  CHECK(is_good_parity(parse_psi(Sp(2), "d(1)xR[2] + Triv xR[1]")));
  auto bad = validate_good_parity(parse_psi(Sp(2), "d(2)xR[2] + Triv xR[1]"));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].index == 0);
  CHECK(bad[0].rule == "m+a-1 = 0 mod 2");
  // unitary parity: m + a = n mod 2
  CHECK_FALSE(is_good_parity(parse_psi(U(2), "chi(2)xR[1] + chi(-2)xR[1]")));
  // permutation invariance
  auto a = parse_psi(U(3), "chi(0)xR[1] + chi(2)xR[1] + chi(-2)xR[1]");
  CHECK(is_good_parity(a));
}

TEST_CASE("parsing rejects dimension errors") {
  CHECK_THROWS_AS(parse_psi(U(3), "chi(2)xR[1]"), Error);
  CHECK_THROWS_AS(parse_psi(U(3), "chi(2)xR[0] + chi(1)xR[3]"), Error);
  CHECK_THROWS_AS(parse_summands("d(3)"), Error);
}

TEST_CASE("component group") {
  CHECK(component_group(parse_psi(U(6), "chi(2)xR[2] + chi(6)xR[2] + chi(-4)xR[2]")) == 3);
  CHECK(component_group(parse_psi(dual_lgroup(ClassicalGroup::GL(3)), "d(3)xR[1] + Triv xR[1]")) == 0);
  CHECK(component_group(parse_psi(Sp(1), "Triv xR[3]")) == 1);
  auto rep = parse_psi(dual_lgroup(ClassicalGroup::SO(2, 2)), "d(2)xR[1] + Triv xR[1] + Triv xR[1]");
  CHECK_THROWS_AS(component_group(rep), Error);
}

TEST_CASE("infinitesimal characters") {
  auto ic = inf_char(parse_psi(U(2), "chi(4)xR[2]"));
  CHECK(ic.entries == std::vector<Rational>{Rational(5, 2), Rational(3, 2)});
  ic = inf_char(parse_psi(Sp(1), "Triv xR[3]"));
  CHECK(ic.entries == std::vector<Rational>{1, 0, -1});
  ic = inf_char(parse_psi(dual_lgroup(ClassicalGroup::SO(2, 1)), "d(3)xR[1]"));
  CHECK(ic.entries == std::vector<Rational>{Rational(3, 2), Rational(-3, 2)});

  // oracle: union of ladders at +-m/2
  auto psi = parse_psi(U(6), "chi(6)xR[2] + chi(2)xR[2] + chi(-4)xR[2]");
  std::vector<Rational> want;
  for (int m : {6, 2, -4})
    for (auto x : ladder(Rational(m, 2), 2)) want.push_back(x);
  CHECK(inf_char(psi).entries == sorted_desc(want));
  CHECK(inf_char(psi).is_regular());
  CHECK(inf_char(psi).is_half_integral_nonintegral());
  CHECK(inf_char(psi).entries.size() == 6);

  // mixed integral and half-integral entries
  auto mixed = parse_psi(U(4), "chi(3)xR[2] + chi(2)xR[2]");
  CHECK_FALSE(inf_char(mixed).is_half_integral_nonintegral());
}

TEST_CASE("SL(2) partitions") {
  auto so = dual_lgroup(ClassicalGroup::SO(4, 4));
  auto p = sl2_partition(parse_psi(so, "d(2)xR[1] + d(4)xR[1] + Triv xR[4]"));
  CHECK(p == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(sl2_partition(parse_psi(dual_lgroup(ClassicalGroup::SO(3, 2)), "d(3)xR[2]")) == std::vector<int>{2, 2});
  CHECK(sl2_partition(parse_psi(Sp(3), "Triv xR[7]")) == std::vector<int>{7});
}

TEST_CASE("canonical order") {
  auto psi = parse_psi(U(5), "chi(0)xR[1] + chi(-4)xR[1] + chi(2)xR[1] + chi(4)xR[1] + chi(-2)xR[1]");
  canonicalize(psi);
  CHECK(notation(psi) == "chi(4)xR[1] + chi(-4)xR[1] + chi(2)xR[1] + chi(-2)xR[1] + chi(0)xR[1]");
  auto sp = parse_psi(Sp(4), "Triv xR[1] + d(1)xR[2] + d(5)xR[2]");
  canonicalize(sp);
  CHECK(notation(sp) == "d(5)xR[2] + d(1)xR[2] + sgn^0 xR[1]");
}

TEST_CASE("GL(n,R) Arthur representations") {
  auto gl3 = dual_lgroup(ClassicalGroup::GL(3));
  auto r = gl_arthur_rep(parse_psi(gl3, "d(3)xR[1] + Triv xR[1]"));
  CHECK(r.levi == std::vector<int>{2, 1});
  CHECK(r.speh_blocks.size() == 1);
  CHECK(r.characters.size() == 1);
  CHECK(gl_arthur_rep(parse_psi(gl3, "Triv xR[3]")).levi == std::vector<int>{3});
  auto gl10 = dual_lgroup(ClassicalGroup::GL(10));
  CHECK(gl_arthur_rep(parse_psi(gl10, "d(1)xR[2] + d(2)xR[3]")).levi == std::vector<int>{4, 6});
}
