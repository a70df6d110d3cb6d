#include <doctest.h>

#include <set>

#include "svt/errors.hpp"
#include "svt/factorization.hpp"
#include "svt/spectrum.hpp"

using namespace svt;

namespace {

ArthurParameter psi_on(const SymmetricSpace& x, const std::string& s) {
  return parse_psi(dual_lgroup(x.group()), s);
}

std::vector<EpsCharacter> all_eps(int n) {
  std::vector<EpsCharacter> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    EpsCharacter e(n);
    for (int i = 0; i < n; ++i) e[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(e);
  }
  return out;
}

std::vector<Rational> R(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.push_back(Rational(x));
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("eps parsing") {
  CHECK(parse_eps("(-1,+1,1)") == EpsCharacter{-1, 1, 1});
  CHECK(parse_eps("-++") == EpsCharacter{-1, 1, 1});
  CHECK(eps_str({-1, 1}) == "(-1,+1)");
  CHECK_THROWS_AS(parse_eps("(2,1)"), Error);
}

TEST_CASE("membership examples") {
  auto x5 = parse_space("case5:p=1,q=1");
  auto psi5 = psi_on(x5, "chi(2)xR[2] + chi(-2)xR[2]");
  CHECK(eps_valid(x5, psi5, {-1, -1}));
  CHECK_FALSE(eps_valid(x5, psi5, {1, -1}));

  auto x6 = parse_space("case6:n=2");
  CHECK(eps_valid(x6, psi5, {1, 1}));

  auto x3 = parse_space("case3:r=1,s=0,rp=1,sp=2");
  auto psi3 = psi_on(x3, "chi(3)xR[1] + chi(-3)xR[1] + chi(0)xR[2]");
  int hits = 0;
  for (auto& e : all_eps(3)) {
    if (e[2] != 1) continue;
    if (eps_valid(x3, psi3, e)) {
      ++hits;
      CHECK(e == EpsCharacter{1, -1, 1});
    }
  }
  CHECK(hits == 1);
  // the tail slot is not constrained
  CHECK(eps_valid(x3, psi3, {1, -1, -1}));
  CHECK(free_slots(x3, psi3) == std::vector<int>{2});

  auto x1 = parse_space("case1:n=2,p=1");
  CHECK_THROWS_AS(eps_valid(x1, psi_on(x1, "d(1)xR[1]"), {1}), Error);
}

TEST_CASE("enumeration examples") {
  auto x5 = parse_space("case5:p=2,q=1");
  auto e5 = enumerate_eps(x5, psi_on(x5, "chi(8)xR[2] + chi(4)xR[2] + chi(-2)xR[2]"));
  REQUIRE(e5.accepted.size() == 1);
  CHECK(e5.accepted[0] == EpsCharacter{-1, -1, -1});

  auto x11 = parse_space("case11:n=5,p=2");
  auto e11 = enumerate_eps(x11, psi_on(x11, "d(5)xR[2] + d(1)xR[2] + Triv xR[3]"));
  REQUIRE(e11.accepted.size() == 1);
  CHECK(e11.accepted[0] == EpsCharacter{1, 1, 1});

  auto x3 = parse_space("case3:r=1,s=0,rp=1,sp=2");
  auto e3 = enumerate_eps(x3, psi_on(x3, "chi(3)xR[1] + chi(-3)xR[1] + chi(0)xR[2]"));
  CHECK(e3.accepted.size() == 1);
  CHECK(e3.discrepancy.empty());
}

TEST_CASE("rank bound") {
  auto x = parse_space("case6:n=25");
  std::string s;
  for (int i = 0; i < 25; ++i) s += (i ? " + " : "") + std::string("chi(") + std::to_string(2 * (12 - i)) + ")xR[2]";
  auto psi = psi_on(x, s);
  CHECK(component_group(psi) == 25);
  try {
    enumerate_eps(x, psi);
    FAIL("no rank error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLarge);
  }
}

TEST_CASE("parallel and serial enumeration agree") {
  for (int c : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12})
    for (auto& x : instances(c, 5))
      for (auto& psi : generate_ds_parameters(x, 7)) {
        auto a = enumerate_eps(x, psi);
        auto b = enumerate_eps_serial(x, psi);
        CHECK(a.accepted == b.accepted);
        CHECK(a.flagged == b.flagged);
      }
}

TEST_CASE("case 10 odd repeats a tail summand") {
  auto x = parse_space("case10:n=3");
  auto psi = psi_on(x, "d(3)xR[2] + Triv xR[1] + Triv xR[1]");
  CHECK_THROWS_AS(component_group(psi), Error);
  auto e = enumerate_eps(x, psi);
  CHECK(e.flagged);
  CHECK(e.accepted.size() == 1);
}

TEST_CASE("owners") {
  auto u22 = ClassicalGroup::U(2, 2);
  auto psi = parse_psi(dual_lgroup(u22), "chi(2)xR[2] + chi(6)xR[2]");
  auto cands = matching_spaces(u22, psi, 4);
  REQUIRE(cands.size() >= 2);
  CHECK(disjoint_owner(psi, {-1, -1}, cands)->spec() == "case5:p=1,q=1");
  CHECK(disjoint_owner(psi, {1, 1}, cands)->spec() == "case6:n=2");
  CHECK_FALSE(disjoint_owner(psi, {1, -1}, cands).has_value());

  auto sp8 = ClassicalGroup::Sp(4);
  auto psi2 = parse_psi(dual_lgroup(sp8), "d(5)xR[2] + d(1)xR[2] + Triv xR[1]");
  auto c2 = matching_spaces(sp8, psi2, 4);
  CHECK(disjoint_owner(psi2, {-1, -1, -1}, c2)->spec() == "case12:n=2");
  CHECK(disjoint_owner(psi2, {1, 1, 1}, c2)->spec() == "case11:n=4,p=2");

  auto so44 = ClassicalGroup::SO(4, 4);
  auto psi3 = parse_psi(dual_lgroup(so44), "d(3)xR[2] + d(1)xR[2]");
  auto c3 = matching_spaces(so44, psi3, 4);
  CHECK(c3.size() >= 2);
  CHECK_FALSE(disjoint_owner(psi3, {-1, 1}, c3).has_value());
}

TEST_CASE("paired spaces accept disjoint sets") {
  auto check_pair = [](const SymmetricSpace& a, const SymmetricSpace& b, int height) {
    for (auto& psi : generate_ds_parameters(a, height)) {
      auto ea = enumerate_eps(a, psi);
      auto eb = enumerate_eps(b, psi);
      std::set<EpsCharacter> sa(ea.accepted.begin(), ea.accepted.end());
      for (auto& e : eb.accepted) CHECK(sa.count(e) == 0);
    }
  };
  check_pair(parse_space("case5:p=2,q=1"), parse_space("case6:n=3"), 8);
  check_pair(parse_space("case11:n=4,p=2"), parse_space("case12:n=2"), 7);
  check_pair(parse_space("case9:p=2,q=2"), parse_space("case10:n=4"), 7);
  check_pair(parse_space("case3:r=1,s=1,rp=1,sp=1"), parse_space("case4:n=2"), 7);
}

TEST_CASE("case 3 counting") {
  for (auto& x : instances(3, 5)) {
    int pq = x.r + x.rp + x.s + x.sp;
    auto ps = generate_ds_parameters(x, 2 * pq + 1);
    if (ps.empty()) continue;
    auto e = enumerate_eps(x, ps.front());
    INFO(x.spec());
    if (pq % 2 == 0) {
      CHECK(static_cast<long long>(e.accepted.size()) == binom(x.k(), x.r));
      CHECK(e.discrepancy.empty());
    } else {
      REQUIRE(e.expected_count.has_value());
      CHECK(*e.expected_count == binom(x.k(), x.r));
      CHECK(e.accepted.size() == (x.r == x.s ? (1u << x.k()) : 0u));
      CHECK_FALSE(e.discrepancy.empty());
    }
  }
}

TEST_CASE("case 2 minimal K-type") {
  auto m = case2_min_ktype(R({2, 1, -1}), {-1, 1, 1});
  CHECK(m.p == 1);
  CHECK(m.mu_tilde == R({3, 1, -2}));

  // all indices matching the alternating baseline: no corrections
  auto m2 = case2_min_ktype(R({5, 2, -3}), {1, -1, 1});
  CHECK(m2.mu == m2.mu_tilde);
  CHECK(m2.p == 3);

  std::vector<Rational> rho4{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
  // at lambda = rho the shift doubles rho instead of cancelling it
  for (auto& e : all_eps(4)) CHECK(case2_min_ktype(rho4, e).mu_tilde == R({3, 1, -1, -3}));

  CHECK_THROWS_AS(case2_min_ktype(R({1, 1, 0}), {1, 1, 1}), Error);
  CHECK_THROWS_AS(case2_min_ktype(rho4, {1, 1, 1}), Error);
}

TEST_CASE("case 2 discrete series") {
  std::vector<Rational> rho4{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
  for (auto& e : all_eps(4)) {
    CHECK(case2_is_ds(rho4, e, Case2Variant::SOOnly));
    int p = case2_min_ktype(rho4, e).p;
    CHECK(case2_is_ds(rho4, e, Case2Variant::OFull) == (p % 2 == 1));
  }

  // the K-type has O-invariants iff every mu_i is even, SO-invariants iff
  // all mu_i share a parity
  for (auto& lam : std::vector<std::vector<Rational>>{R({3, 1, 0}), R({5, 2, -4}), R({2, -1, -3})})
    for (auto& e : all_eps(3)) {
      auto k = case2_min_ktype(lam, e);
      bool even = true, same = true;
      for (auto& m : k.mu) {
        even = even && m.numerator() % 2 == 0;
        same = same && (m.numerator() - k.mu[0].numerator()) % 2 == 0;
      }
      CHECK(case2_is_ds(lam, e, Case2Variant::OFull) == even);
      CHECK(case2_is_ds(lam, e, Case2Variant::SOOnly) == same);
    }

  // n = 3: the accepting set is the formula and its negation
  std::vector<std::vector<Rational>> lams{R({2, 1, -1}), R({3, 0, -2}), R({4, 1, 0}), R({1, 0, -1})};
  for (auto& lam : lams) {
    auto f = case2_formula_eps(lam);
    EpsCharacter neg = f;
    for (auto& v : neg) v = -v;
    CHECK(case2_formula_eps(lam, true) == neg);
    for (auto& e : all_eps(3)) {
      INFO(eps_str(e));
      CHECK(case2_is_ds(lam, e, Case2Variant::SOOnly) == (e == f || e == neg));
    }
  }
  CHECK(case2_formula_eps(R({2, 1, -1})) == EpsCharacter{-1, 1, 1});
  CHECK(case2_p0(R({2, 1, -1})) == 1);
  CHECK_THROWS_AS(case2_is_ds({Rational(1, 2), Rational(-1, 2), Rational(-3, 2)}, {1, 1, 1}, Case2Variant::SOOnly),
                  Error);
}

TEST_CASE("case 13 criterion") {
  CHECK(case13_is_ds({3, 2, 1}, Case13Chi::Trivial));
  CHECK_FALSE(case13_is_ds({4, 2, 1}, Case13Chi::Trivial));
  CHECK(case13_is_ds({2, 1}, Case13Chi::SgnDet));
  for (int l = 1; l <= 12; ++l) {
    CHECK(case13_is_ds({l}, Case13Chi::Trivial) == (l % 2 == 1));
    CHECK(case13_root_oracle({l}, Case13Chi::Trivial) == (l % 2 == 1));
    CHECK(case13_root_oracle({l}, Case13Chi::SgnDet) == (l % 2 == 0));
  }
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b < a; ++b)
      for (int c = 1; c < b; ++c)
        for (auto chi : {Case13Chi::Trivial, Case13Chi::SgnDet})
          CHECK(case13_is_ds({a, b, c}, chi) == case13_root_oracle({a, b, c}, chi));
  CHECK_THROWS_AS(case13_is_ds({2, 2}, Case13Chi::Trivial), Error);
}
