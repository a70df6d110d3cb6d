#include <doctest.h>

#include <random>

#include "svt/errors.hpp"
#include "svt/matrixlab.hpp"

using namespace svt;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

const IdentityCheck* find(const MatrixReport& r, const std::string& id) {
  for (auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  auto v = Laurent::monomial(1, 1);
  auto vi = Laurent::monomial(1, -1);
  CHECK((v + vi) * (v - vi) == Laurent::monomial(1, 2) - Laurent::monomial(1, -2));
  CHECK(v.bar() == vi);
  CHECK((v * v * v).at_minus_one() == Laurent(-1));
  CHECK((v - v).is_zero());
  CHECK(Laurent::monomial(-1, 3).unit_inverse() == Laurent::monomial(-1, -3));
  CHECK_FALSE((v + vi).is_unit_monomial());
}

TEST_CASE("w_n by hand") {
  CHECK(w_matrix(2) == from_rows({{0, 1}, {-1, 0}}));
  CHECK(w_matrix(3) == from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  for (int n = 1; n <= 9; ++n) {
    auto w = w_matrix(n);
    long long s = n % 2 == 0 ? -1 : 1;
    CHECK(w.transpose() == w.scaled(s));
    CHECK(w * w == ExactMatrix::identity(n).scaled(s));
  }
  CHECK_THROWS_AS(w_matrix(0), Error);
}

TEST_CASE("monomial inverse") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
      m.at(i, perm[i]) = Laurent::monomial(rng() % 2 ? 1 : -1, static_cast<int>(rng() % 9) - 4);
    REQUIRE(m.is_monomial());
    CHECK(m * m.monomial_inverse() == ExactMatrix::identity(n));
    CHECK(m.monomial_inverse() * m == ExactMatrix::identity(n));
  }
  auto u = ExactMatrix::identity(2) + elementary(2, 0, 1);
  CHECK_FALSE(u.is_monomial());
  CHECK_THROWS_AS(u.monomial_inverse(), Error);
}

TEST_CASE("T' J' inverse is the alternating diagonal") {
  for (int n = 2; n <= 10; ++n)
    for (int p = 1; 2 * p <= n; ++p) {
      auto jp = jprime_np(n, p);
      auto d = tprime_2p(n, p) * jp.monomial_inverse();
      INFO("n=", n, " p=", p);
      REQUIRE(d.is_diagonal());
      for (int i = 0; i < p; ++i) {
        CHECK(d.at(i, i) == Laurent(i % 2 == 0 ? 1 : -1));
        CHECK(d.at(n - p + i, n - p + i) == Laurent((p + i) % 2 == 0 ? 1 : -1));
      }
      for (int i = p; i < n - p; ++i) CHECK(d.at(i, i) == Laurent(1));
    }
}

TEST_CASE("J_{n,p} and its transpose") {
  // corner blocks w_p (top right) and its transpose (bottom left)
  CHECK(j_np(3, 1) == from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(j_np(4, 2) == from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
  CHECK_THROWS_AS(j_np(3, 2), Error);
}

TEST_CASE("printed SO image fails, corrected one passes") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; 2 * p <= n; ++p) {
      int a = (n + 1) % 2;
      INFO("n=", n, " p=", p);
      auto printed = check_xi_so_printed(n, p, a, 0);
      CHECK(printed.failures() > 0);
      REQUIRE(find(printed, "xi_so_printed.j_square") != nullptr);
      CHECK_FALSE(find(printed, "xi_so_printed.j_square")->pass);
      CHECK_FALSE(find(printed, "xi_so_printed.j_square")->delta.empty());
      CHECK(check_xi_so(n, p, a, 0).failures() == 0);
    }
}

TEST_CASE("individual suites") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(check_xi_pm(n).failures() == 0);
    for (int p = 0; 2 * p <= n; ++p) {
      CHECK(check_xi_sp(n, p, n % 2, 2).failures() == 0);
      CHECK(check_xi_so(n, p, (n + 1) % 2 - 2, 2).failures() == 0);
    }
  }
  for (int k = 1; k <= 6; ++k) CHECK(check_esp(k).failures() == 0);
  auto r1 = check_rank_one();
  CHECK(r1.failures() == 0);
  CHECK(find(r1, "rank_one.involutions_commute") != nullptr);
  CHECK_THROWS_AS(check_xi_sp(3, 1, 0, 0), Error);
}

TEST_CASE("full sweep, parallel and serial") {
  auto par = check_all(12);
  CHECK(par.checks.size() > 3000);
  CHECK(par.failures() == 0);
  auto a = check_all(6), b = check_all_serial(6);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].params == b.checks[i].params);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
}
