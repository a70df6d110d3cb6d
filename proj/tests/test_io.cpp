#include <doctest.h>

#include "svt/errors.hpp"
#include "svt/io.hpp"

using namespace svt;

TEST_CASE("group parsing") {
  CHECK(parse_group("GL(3,R)").name() == ClassicalGroup::GL(3).name());
  CHECK(parse_group("U(2, 1)").name() == ClassicalGroup::U(2, 1).name());
  CHECK(parse_group("Sp(8,R)").name() == ClassicalGroup::Sp(4).name());
  CHECK(parse_group("SO(3,2)").name() == ClassicalGroup::SO(3, 2).name());
  CHECK_THROWS_AS(parse_group("Sp(3,R)"), Error);
  CHECK_THROWS_AS(parse_group("U(3)"), Error);
  CHECK_THROWS_AS(parse_group("E8"), Error);
}

TEST_CASE("list parsing") {
  CHECK(parse_rational_list("(2, 1, -1)") == std::vector<Rational>{2, 1, -1});
  CHECK(parse_rational_list("3/2,-1/2") == std::vector<Rational>{Rational(3, 2), Rational(-1, 2)});
  CHECK(parse_int_list("[4,2,1]") == std::vector<int>{4, 2, 1});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,,2"), Error);
  CHECK_THROWS_AS(parse_int_list("1,x"), Error);
  CHECK(inline_or_file("d(1)xR[2]") == "d(1)xR[2]");
}

TEST_CASE("json shapes") {
  auto x = parse_space("case5:p=1,q=1");
  auto j = to_json(x);
  CHECK(j["spec"] == "case5:p=1,q=1");
  CHECK(j["rank"] == 2);
  CHECK(j.begin().key() == "spec");

  auto psi = parse_psi(dual_lgroup(x.group()), "chi(2)xR[2] + chi(-2)xR[2]");
  auto f = to_json(factorize(psi, x));
  CHECK(f["recomposed"] == notation(psi));
  CHECK(f["phi_d"].size() == 2);

  auto e = to_json(enumerate_eps(x, psi));
  CHECK(e["count"] == 1);
  CHECK(e["accepted"][0] == "(-1,-1)");

  MatrixReport r;
  r.checks.push_back({"a", "n=1", true, ""});
  r.checks.push_back({"b", "n=1", false, "[1]"});
  auto m = to_json(r);
  CHECK(m["failures"] == 1);
  CHECK_FALSE(m["checks"][0].contains("delta"));
  CHECK(m["checks"][1]["delta"] == "[1]");
}
