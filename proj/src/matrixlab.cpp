#include "svt/matrixlab.hpp"

#include <omp.h>

#include <functional>
#include <sstream>

#include "svt/errors.hpp"

namespace svt {

// ---- Laurent ----

Laurent Laurent::monomial(long long c, int e) {
  Laurent r;
  r.add_term(e, c);
  return r;
}

void Laurent::add_term(int e, long long c) {
  if (c == 0) return;
  auto& t = terms_[e];
  t += c;
  if (t == 0) terms_.erase(e);
}

bool Laurent::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (auto [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent Laurent::at_minus_one() const {
  long long s = 0;
  for (auto [e, c] : terms_) s += (e % 2 == 0) ? c : -c;
  return Laurent(s);
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit_monomial()) fail(ErrorCode::SizeViolation, "not a unit monomial: " + str());
  auto [e, c] = *terms_.begin();
  return monomial(c, -e);
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (e == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// ---- ExactMatrix ----

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diag(const std::vector<Laurent>& d) {
  ExactMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[i];
  return m;
}

static void same_size(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.size() != b.size())
    fail(ErrorCode::SizeViolation, "size " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  same_size(*this, o);
  ExactMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Laurent& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  same_size(*this, o);
  ExactMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + (-o); }

ExactMatrix ExactMatrix::scaled(const Laurent& c) const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::bar() const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].bar();
  return r;
}

ExactMatrix ExactMatrix::at_minus_one() const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].at_minus_one();
  return r;
}

bool ExactMatrix::is_monomial() const {
  std::vector<int> col(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int cnt = 0;
    for (int j = 0; j < n_; ++j) {
      if (at(i, j).is_zero()) continue;
      if (!at(i, j).is_unit_monomial()) return false;
      ++cnt;
      ++col[j];
    }
    if (cnt != 1) return false;
  }
  for (int c : col)
    if (c != 1) return false;
  return true;
}

ExactMatrix ExactMatrix::monomial_inverse() const {
  if (!is_monomial()) fail(ErrorCode::SizeViolation, "matrix is not monomial");
  ExactMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) r.at(j, i) = at(i, j).unit_inverse();
  return r;
}

bool ExactMatrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  int n = a.size(), m = b.size();
  ExactMatrix r(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) r.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

ExactMatrix blocks(const std::vector<std::vector<ExactMatrix>>& grid, const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  ExactMatrix r(n);
  int r0 = 0;
  for (size_t bi = 0; bi < sizes.size(); ++bi) {
    int c0 = 0;
    for (size_t bj = 0; bj < sizes.size(); ++bj) {
      const ExactMatrix& b = grid[bi][bj];
      if (b.size() != 0) {
        if (sizes[bi] != sizes[bj] || b.size() != sizes[bi])
          fail(ErrorCode::SizeViolation, "block size mismatch");
        for (int i = 0; i < b.size(); ++i)
          for (int j = 0; j < b.size(); ++j) r.at(r0 + i, c0 + j) = b.at(i, j);
      }
      c0 += sizes[bj];
    }
    r0 += sizes[bi];
  }
  return r;
}

ExactMatrix zero_matrix(int n) { return ExactMatrix(n); }

ExactMatrix antidiag_ones(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

ExactMatrix elementary(int n, int i, int j) {
  ExactMatrix m(n);
  m.at(i, j) = 1;
  return m;
}

ExactMatrix w_matrix(int n) {
  if (n < 1) fail(ErrorCode::SizeViolation, "w_n needs n >= 1");
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = (i % 2 == 0) ? 1 : -1;
  return m;
}

static void check_np(int n, int p) {
  if (p < 0 || n < 1 || 2 * p > n)
    fail(ErrorCode::SizeViolation, "need n >= 2p >= 0, got n=" + std::to_string(n) + " p=" + std::to_string(p));
}

// [[0,0,A],[0,I,0],[B,0,0]] with p x p corner blocks.
static ExactMatrix corner(int n, int p, const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      m.at(i, n - p + j) = a.at(i, j);
      m.at(n - p + i, j) = b.at(i, j);
    }
  for (int i = p; i < n - p; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix j_np(int n, int p) {
  check_np(n, p);
  if (p == 0) return ExactMatrix::identity(n);
  auto w = w_matrix(p);
  return corner(n, p, w, w.transpose());
}

ExactMatrix jprime_np(int n, int p) {
  check_np(n, p);
  if (p == 0) return ExactMatrix::identity(n);
  auto k = antidiag_ones(p);
  return corner(n, p, k, k);
}

ExactMatrix t_2p(int p) {
  if (p < 1) fail(ErrorCode::SizeViolation, "T_2p needs p >= 1");
  std::vector<Laurent> d;
  for (int i = 0; i < 2 * p; ++i) d.push_back(i % 2 == 0 ? 1 : -1);
  return ExactMatrix::diag(d);
}

ExactMatrix tprime_2p(int n, int p) {
  check_np(n, p);
  if (p == 0) return ExactMatrix::identity(n);
  auto w = w_matrix(p);
  return corner(n, p, w, -w.transpose());
}

ExactMatrix sigma(const ExactMatrix& w, const ExactMatrix& g) {
  return w * g.monomial_inverse().transpose() * w.monomial_inverse();
}

ExactMatrix dsigma(const ExactMatrix& w, const ExactMatrix& y) {
  return -(w * y.transpose() * w.monomial_inverse());
}

GaloisElement compose(const ExactMatrix& w, const GaloisElement& x, const GaloisElement& y, bool* j_squared) {
  GaloisElement r;
  r.m = x.j ? x.m * sigma(w, y.m) : x.m * y.m;
  r.j = x.j != y.j;
  if (j_squared) *j_squared = x.j && y.j;
  return r;
}

// ---- reports ----

int MatrixReport::failures() const {
  int f = 0;
  for (auto& c : checks)
    if (!c.pass) ++f;
  return f;
}

void MatrixReport::append(const MatrixReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (auto& [k, v] : kv) {
    if (!s.empty()) s += ",";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

void expect_eq(MatrixReport& r, const std::string& id, const std::string& p, const ExactMatrix& lhs,
               const ExactMatrix& rhs) {
  IdentityCheck c{id, p, lhs == rhs, ""};
  if (!c.pass) c.delta = (lhs - rhs).str();
  r.checks.push_back(c);
}

void expect(MatrixReport& r, const std::string& id, const std::string& p, bool ok, const std::string& why = "") {
  r.checks.push_back({id, p, ok, ok ? "" : why});
}

// Outer 2p coordinates of C^n = C^p + C^(n-2p) + C^p.
int outer(int n, int p, int i) { return i < p ? i : n - 2 * p + i; }

// Linear extension to gl(n) of a 2p x 2p matrix placed on the outer coordinates.
ExactMatrix embed_outer(int n, int p, const ExactMatrix& y) {
  ExactMatrix m(n);
  for (int i = 0; i < 2 * p; ++i)
    for (int j = 0; j < 2 * p; ++j) m.at(outer(n, p, i), outer(n, p, j)) = y.at(i, j);
  return m;
}

// Spanning set of the Lie algebra of the fixed points of g -> F ^t g^-1 F^-1.
std::vector<ExactMatrix> fixed_lie_algebra(const ExactMatrix& f) {
  std::vector<ExactMatrix> out;
  int n = f.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto e = elementary(n, i, j);
      auto y = e + dsigma(f, e);
      if (y.is_zero()) continue;
      bool dup = false;
      for (auto& o : out)
        if (o == y || o == -y) dup = true;
      if (!dup) out.push_back(y);
    }
  return out;
}

ExactMatrix weight_diag(int n, int p, int a, int b) {
  std::vector<Laurent> d;
  for (int i = 0; i < n; ++i) d.push_back(Laurent::monomial(1, (i < p || i >= n - p) ? a : b));
  return ExactMatrix::diag(d);
}

void restriction_pattern(MatrixReport& r, const std::string& id, const std::string& ps, const ExactMatrix& d, int n,
                         int p, int a, int b) {
  int na = 0, nb = 0;
  for (int i = 0; i < n; ++i) {
    auto& x = d.at(i, i);
    if (x == Laurent::monomial(1, a)) ++na;
    if (x == Laurent::monomial(1, b)) ++nb;
  }
  bool ok = d.is_diagonal() && (a == b ? na == n : (na == 2 * p && nb == n - 2 * p));
  expect(r, id, ps, ok, d.str());
}

// Shared relation checks for an embedding with j-image x and C^x-image d(v).
void embedding_relations(MatrixReport& r, const std::string& pre, const std::string& ps, int n, const ExactMatrix& x,
                         const ExactMatrix& d) {
  auto w = w_matrix(n);
  bool jj = false;
  auto sq = compose(w, {x, true}, {x, true}, &jj);
  // j^2 = -1 in W_R, which maps to d evaluated at z = -1
  expect_eq(r, pre + ".j_square", ps, sq.m, d.at_minus_one());
  auto conj = x * sigma(w, d) * x.monomial_inverse();
  expect_eq(r, pre + ".j_conj", ps, conj, d.bar());
}

}  // namespace

MatrixReport check_xi_sp(int n, int p, int a, int b) {
  check_np(n, p);
  if (b % 2 != 0 || (a - n) % 2 != 0) fail(ErrorCode::SizeViolation, "need b even and a = n mod 2");
  MatrixReport r;
  auto ps = params({{"n", n}, {"p", p}, {"a", a}, {"b", b}});
  auto d = weight_diag(n, p, a, b);
  restriction_pattern(r, "xi_sp.restriction", ps, d, n, p, a, b);
  ExactMatrix x = ExactMatrix::identity(n);
  if (n % 2 == 1)
    for (int i = n - p; i < n; ++i) x.at(i, i) = -1;
  embedding_relations(r, "xi_sp", ps, n, x, d);
  if (p == 0) return r;
  auto w2p = w_matrix(2 * p);
  expect_eq(r, "xi_sp.w2p_antisymmetric", ps, w2p.transpose(), -w2p);
  auto w = w_matrix(n);
  bool galois = true, commute = true;
  std::string bad;
  for (auto& y : fixed_lie_algebra(w2p)) {
    auto iy = embed_outer(n, p, y);
    if (!(x * dsigma(w, iy) * x.monomial_inverse() == iy)) {
      galois = false;
      bad = y.str();
    }
    if (!(d * iy == iy * d)) commute = false;
  }
  expect(r, "xi_sp.galois", ps, galois, bad);
  expect(r, "xi_sp.commute", ps, commute, "C^x image does not commute with Sp");
  return r;
}

namespace {

MatrixReport xi_so_common(int n, int p, int a_prime, int b, const ExactMatrix& x, const std::string& pre) {
  check_np(n, p);
  if (b % 2 != 0 || (a_prime - n + 1) % 2 != 0) fail(ErrorCode::SizeViolation, "need b even and a' = n-1 mod 2");
  MatrixReport r;
  auto ps = params({{"n", n}, {"p", p}, {"a'", a_prime}, {"b", b}});
  auto d = weight_diag(n, p, a_prime, b);
  restriction_pattern(r, pre + ".restriction", ps, d, n, p, a_prime, b);
  embedding_relations(r, pre, ps, n, x, d);
  if (p == 0) return r;
  // form defining O(2p) on the outer coordinates
  auto jfull = n % 2 == 1 ? j_np(n, p) : jprime_np(n, p);
  expect_eq(r, pre + ".form_symmetric", ps, jfull.transpose(), jfull);
  ExactMatrix r0(2 * p);
  for (int i = 0; i < 2 * p; ++i)
    for (int j = 0; j < 2 * p; ++j) r0.at(i, j) = jfull.at(outer(n, p, i), outer(n, p, j));
  auto w = w_matrix(n);
  // O(2p) realized this way is fixed by the pinned action of w_n
  bool inside = true, galois = true, commute = true;
  std::string bad;
  for (auto& y : fixed_lie_algebra(r0)) {
    auto iy = embed_outer(n, p, y);
    if (!(dsigma(w, iy) == dsigma(jfull, iy))) inside = false;
    if (!(x * dsigma(w, iy) * x.monomial_inverse() == embed_outer(n, p, r0 * y * r0.monomial_inverse()))) {
      galois = false;
      bad = y.str();
    }
    if (!(d * iy == iy * d)) commute = false;
  }
  expect(r, pre + ".galois", ps, galois, bad);
  expect(r, pre + ".commute", ps, commute, "C^x image does not commute with SO");
  if (n % 2 == 1) expect(r, pre + ".inside_fixed_points", ps, inside, "O(2p) not fixed by the pinned action");
  // T'_{2p} (J'_{n,p})^-1 is diagonal and restricts to T_{2p} on the outer coordinates
  auto tj = tprime_2p(n, p) * jprime_np(n, p).monomial_inverse();
  ExactMatrix expect_diag = ExactMatrix::identity(n);
  auto t = t_2p(p);
  for (int i = 0; i < 2 * p; ++i) expect_diag.at(outer(n, p, i), outer(n, p, i)) = t.at(i, i);
  expect_eq(r, pre + ".tprime_jprime_diagonal", ps, tj, expect_diag);
  bool inter = true;
  for (int i = 0; i < 2 * p; ++i)
    for (int j = 0; j < 2 * p; ++j) {
      auto e = elementary(2 * p, i, j);
      auto lhs = embed_outer(n, p, t * e * t.monomial_inverse());
      auto rhs = tj * embed_outer(n, p, e) * tj.monomial_inverse();
      if (!(lhs == rhs)) inter = false;
    }
  expect(r, pre + ".t_intertwining", ps, inter, "iota does not intertwine T_2p");
  return r;
}

}  // namespace

MatrixReport check_xi_so(int n, int p, int a_prime, int b) {
  check_np(n, p);
  ExactMatrix x = ExactMatrix::identity(n);
  if (p > 0) {
    auto w = w_matrix(p);
    x = corner(n, p, w, n % 2 == 1 ? w.transpose() : -w.transpose());
  }
  return xi_so_common(n, p, a_prime, b, x, "xi_so");
}

MatrixReport check_xi_so_printed(int n, int p, int a_prime, int b) {
  check_np(n, p);
  return xi_so_common(n, p, a_prime, b, tprime_2p(n, p) * w_matrix(n), "xi_so_printed");
}

MatrixReport check_xi_pm(int n) {
  if (n < 1) fail(ErrorCode::SizeViolation, "xi_pm needs n >= 1");
  MatrixReport r;
  auto ps = params({{"n", n}});
  auto w2n = w_matrix(2 * n), wn = w_matrix(n);
  auto In = ExactMatrix::identity(n);
  auto iota = [&](const ExactMatrix& g, const ExactMatrix& h) { return kron(h, g); };
  int s = n % 2 == 1 ? 1 : -1;  // (-1)^(n-1)

  // SL(2) generators with their inverses
  struct H {
    ExactMatrix h, hinv;
  };
  auto m2 = [](Laurent a, Laurent b, Laurent c, Laurent d) {
    ExactMatrix m(2);
    m.at(0, 0) = a, m.at(0, 1) = b, m.at(1, 0) = c, m.at(1, 1) = d;
    return m;
  };
  std::vector<H> gens = {
      {m2(1, 1, 0, 1), m2(1, -1, 0, 1)},
      {m2(1, 0, 1, 1), m2(1, 0, -1, 1)},
      {m2(Laurent::monomial(1, 1), 0, 0, Laurent::monomial(1, -1)),
       m2(Laurent::monomial(1, -1), 0, 0, Laurent::monomial(1, 1))},
  };
  bool block = true;
  for (auto& g : gens) {
    auto lhs = w2n * iota(In, g.hinv).transpose() * w2n.monomial_inverse();
    auto& h = g.h;
    auto rhs = kron(m2(h.at(0, 0), h.at(0, 1) * s, h.at(1, 0) * s, h.at(1, 1)), In);
    if (!(lhs == rhs)) block = false;
  }
  expect(r, "xi_pm.sl2_block", ps, block, "block formula fails");
  expect_eq(r, "xi_pm.w_ratio", ps, w2n.monomial_inverse() * iota(wn, ExactMatrix::identity(2)),
            kron(m2(0, n % 2 == 0 ? 1 : -1, 1, 0), In));

  // j-image: identity for n odd, c(j) = diag(-I_n, I_n) for n even
  ExactMatrix cj = ExactMatrix::identity(2 * n);
  if (n % 2 == 0)
    for (int i = 0; i < n; ++i) cj.at(i, i) = -1;
  auto cz = ExactMatrix::identity(2 * n).scaled(n % 2 == 0 ? Laurent::monomial(1, 1) : Laurent(1));
  std::string pre = n % 2 == 0 ? "xi_minus" : "xi_plus";
  bool jj = false;
  auto sq = compose(w2n, {cj, true}, {cj, true}, &jj);
  expect_eq(r, pre + ".j_square", ps, sq.m, cz.at_minus_one());
  expect_eq(r, pre + ".j_conj", ps, cj * sigma(w2n, cz) * cj.monomial_inverse(), cz.bar());

  // into the commutant of iota(SL(2))
  bool comm = true;
  for (auto& g : gens) {
    auto ih = iota(In, g.h);
    auto sig = w2n * iota(In, g.hinv).transpose() * w2n.monomial_inverse();
    if (!(cj * sig * cj.monomial_inverse() == ih)) comm = false;
    if (!(cz * ih == ih * cz)) comm = false;
  }
  expect(r, pre + ".commutant", ps, comm, "image does not commute with SL(2)");

  // homomorphism on the Galois relation
  bool lie = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto e = elementary(n, i, j);
      auto lhs = cj * dsigma(w2n, iota(e, ExactMatrix::identity(2))) * cj.monomial_inverse();
      if (!(lhs == iota(dsigma(wn, e), ExactMatrix::identity(2)))) lie = false;
    }
  expect(r, pre + ".galois_lie", ps, lie, "Lie algebra relation fails");
  std::vector<ExactMatrix> samples;
  {
    std::vector<Laurent> dg;
    for (int i = 0; i < n; ++i) dg.push_back(Laurent::monomial(i % 2 ? -1 : 1, i + 1));
    samples.push_back(ExactMatrix::diag(dg));
    ExactMatrix cyc(n);
    for (int i = 0; i < n; ++i) cyc.at(i, (i + 1) % n) = 1;
    samples.push_back(cyc);
    samples.push_back(wn);
  }
  bool grp = true;
  for (auto& g : samples) {
    auto lhs = cj * sigma(w2n, iota(g, ExactMatrix::identity(2))) * cj.monomial_inverse();
    if (!(lhs == iota(sigma(wn, g), ExactMatrix::identity(2)))) grp = false;
  }
  expect(r, pre + ".galois_monomial", ps, grp, "group relation fails on monomial samples");
  return r;
}

MatrixReport check_rank_one() {
  MatrixReport r;
  auto m4 = [](std::initializer_list<int> v) {
    ExactMatrix m(4);
    int k = 0;
    for (int x : v) {
      m.at(k / 4, k % 4) = x;
      ++k;
    }
    return m;
  };
  auto j1 = m4({0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0});
  auto j2 = m4({0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0});
  std::string ps = "rank-one";
  expect_eq(r, "rank_one.J1_transpose", ps, j1.transpose(), -j1);
  expect_eq(r, "rank_one.J1_inverse", ps, j1.monomial_inverse(), -j1);
  expect_eq(r, "rank_one.J2_transpose", ps, j2.transpose(), -j2);
  expect_eq(r, "rank_one.J2_inverse", ps, j2.monomial_inverse(), -j2);
  expect_eq(r, "rank_one.J1J2_anticommute", ps, j1 * j2, -(j2 * j1));
  // the involutions sigma_1, sigma_2 and theta commute (checked on gl(4))
  bool inv = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto e = elementary(4, i, j);
      auto theta = [](const ExactMatrix& y) { return -y.transpose(); };
      if (!(dsigma(j1, dsigma(j2, e)) == dsigma(j2, dsigma(j1, e)))) inv = false;
      if (!(dsigma(j1, theta(e)) == theta(dsigma(j1, e)))) inv = false;
      if (!(dsigma(j2, theta(e)) == theta(dsigma(j2, e)))) inv = false;
    }
  expect(r, "rank_one.involutions_commute", ps, inv, "sigma_1, sigma_2, theta do not commute");

  // case 11
  auto j = m4({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
  auto tau = m4({0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0});
  expect_eq(r, "case11.tau_transpose", ps, tau.transpose(), -tau);
  expect_eq(r, "case11.tau_inverse", ps, tau.monomial_inverse(), -tau);
  expect_eq(r, "case11.tau_square", ps, tau * tau, -ExactMatrix::identity(4));
  auto q = -(tau * j);
  expect_eq(r, "case11.form_symmetric", ps, q.transpose(), q);
  // x y' - y x' - z t' + t z'  and  x t' + y z' + z y' + t x'
  expect_eq(r, "case11.symplectic_form", ps, j, m4({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
  expect_eq(r, "case11.symmetric_form", ps, q, m4({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}));
  // sp(J) elements commuting with tau preserve -tau J; Y + tau Y tau^-1 spans them
  bool pres = true;
  for (auto& y : fixed_lie_algebra(j)) {
    auto yc = y + tau * y * tau.monomial_inverse();
    if (!(yc * tau == tau * yc)) pres = false;
    if (!(yc.transpose() * j + j * yc).is_zero()) pres = false;
    if (!(yc.transpose() * q + q * yc).is_zero()) pres = false;
  }
  expect(r, "case11.commutant_preserves_form", ps, pres, "tau-commutant does not preserve -tau J");
  return r;
}

MatrixReport check_esp(int k) {
  if (k < 1) fail(ErrorCode::SizeViolation, "E-group check needs k >= 1");
  MatrixReport r;
  auto ps = params({{"k", k}});
  auto w = w_matrix(2 * k);
  ExactMatrix t = ExactMatrix::identity(2 * k);
  for (int i = 0; i < k; ++i) t.at(i, i) = -1;
  expect_eq(r, "esp.similitude", ps, t.transpose() * w * t, -w);
  expect_eq(r, "esp.tw_square", ps, (t * w) * (t * w), ExactMatrix::identity(2 * k));
  // j acts on Sp(2k) by conjugation by t
  bool act = true;
  for (auto& y : fixed_lie_algebra(w))
    if (!(t * dsigma(w, y) * t == t * y * t)) act = false;
  expect(r, "esp.action_on_sp", ps, act, "j does not act by conjugation by t");
  return r;
}

namespace {

std::vector<std::function<MatrixReport()>> suite(int max_size) {
  std::vector<std::function<MatrixReport()>> tasks;
  for (int n = 1; n <= max_size; ++n) {
    for (int p = 0; 2 * p <= n; ++p) {
      int a0 = n % 2, a1 = (n + 1) % 2;
      for (int da : {0, 2, -2})
        for (int b : {0, 2}) {
          tasks.push_back([=] { return check_xi_sp(n, p, a0 + da, b); });
          tasks.push_back([=] { return check_xi_so(n, p, a1 + da, b); });
        }
    }
    tasks.push_back([=] { return check_xi_pm(n); });
  }
  for (int k = 1; k <= std::min(6, std::max(1, max_size / 2)); ++k) tasks.push_back([=] { return check_esp(k); });
  tasks.push_back([] { return check_rank_one(); });
  return tasks;
}

}  // namespace

MatrixReport check_all_serial(int max_size) {
  MatrixReport r;
  for (auto& t : suite(max_size)) r.append(t());
  return r;
}

MatrixReport check_all(int max_size) {
  auto tasks = suite(max_size);
  std::vector<MatrixReport> parts(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(tasks.size()); ++i) parts[i] = tasks[i]();
  MatrixReport r;
  for (auto& p : parts) r.append(p);
  return r;
}

}  // namespace svt
