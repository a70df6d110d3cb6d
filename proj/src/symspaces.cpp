#include "svt/symspaces.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "svt/errors.hpp"

namespace svt {

namespace {

std::string I(int v) { return std::to_string(v); }

bool odd(int v) { return ((v % 2) + 2) % 2 == 1; }

}  // namespace

SymmetricSpace SymmetricSpace::make(int case_id, int a, int b, int c, int d) {
  SymmetricSpace x;
  x.case_id = case_id;
  switch (case_id) {
    case 1: case 11: x.n = a; x.p = b; break;
    case 2: case 5: x.p = a; x.q = b; break;
    case 3: case 7: case 8:
      x.r = a; x.s = b; x.rp = c; x.sp = d;
      x.p = a + c;
      x.q = b + d;
      break;
    case 4: case 6: case 10: case 12: case 13: x.n = a; break;
    case 9:
      x.p = a;
      x.q = b;
      if (odd(a + b) && odd(a)) std::swap(x.p, x.q);
      break;
    default: fail(ErrorCode::InvalidSpace, "case id must be 1..13, got " + I(case_id));
  }
  x.validate();
  return x;
}

void SymmetricSpace::validate() const {
  auto bad = [&](const std::string& why) { fail(ErrorCode::InvalidSpace, "case " + I(case_id) + ": " + why); };
  if (n < 0 || p < 0 || q < 0 || r < 0 || s < 0 || rp < 0 || sp < 0) bad("negative parameter");
  switch (case_id) {
    case 1:
    case 11:
      if (p < 1) bad("p >= 1 required");
      if (2 * p > n) bad("2p <= n required");
      break;
    case 2:
    case 5:
      if (p + q < 1) bad("p+q >= 1 required");
      break;
    case 3:
    case 7:
    case 8:
      if (r > rp || s > sp) bad("r <= r' and s <= s' required");
      if (r + s < 1) bad("r+s >= 1 required");
      if (p != r + rp || q != s + sp) bad("signature bookkeeping");
      if (case_id == 7 && !odd(p + q)) bad("p+q odd required");
      if (case_id == 8 && odd(p + q)) bad("p+q even required");
      break;
    case 4:
    case 6:
    case 12:
    case 13:
      if (n < 1) bad("n >= 1 required");
      break;
    case 9:
      if (odd(p) && odd(q)) bad("p and q both odd has no discrete series");
      if (p + q < 2) bad("p+q >= 2 required");
      break;
    case 10:
      if (n < 2) bad("n >= 2 required");
      break;
    default: bad("unknown case");
  }
}

bool SymmetricSpace::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

ClassicalGroup SymmetricSpace::group() const {
  switch (case_id) {
    case 1: return ClassicalGroup::GL(n);
    case 2: case 3: return ClassicalGroup::U(p, q);
    case 4: case 6: return ClassicalGroup::U(n, n);
    case 5: return ClassicalGroup::U(2 * p, 2 * q);
    case 7: case 8: return ClassicalGroup::SO(p, q);
    case 9: return ClassicalGroup::SO(2 * p, 2 * q);
    case 10: return ClassicalGroup::SO(n, n);
    case 11: case 13: return ClassicalGroup::Sp(n);
    case 12: return ClassicalGroup::Sp(2 * n);
  }
  fail(ErrorCode::InvalidSpace, "unknown case");
}

std::string SymmetricSpace::name() const {
  switch (case_id) {
    case 1: return "GL(" + I(n) + ",R)/GL(" + I(p) + ",R)xGL(" + I(n - p) + ",R)";
    case 2: return "U(" + I(p) + "," + I(q) + ")/O(" + I(p) + "," + I(q) + ")";
    case 3:
      return "U(" + I(p) + "," + I(q) + ")/U(" + I(r) + "," + I(s) + ")xU(" + I(rp) + "," + I(sp) + ")";
    case 4: return "U(" + I(n) + "," + I(n) + ")/GL(" + I(n) + ",C)";
    case 5: return "U(" + I(2 * p) + "," + I(2 * q) + ")/Sp(" + I(p) + "," + I(q) + ")";
    case 6: return "U(" + I(n) + "," + I(n) + ")/Sp(" + I(2 * n) + ",R)";
    case 7:
    case 8:
      return "SO(" + I(p) + "," + I(q) + ")/SO(" + I(r) + "," + I(s) + ")xSO(" + I(rp) + "," + I(sp) + ")";
    case 9: return "SO(" + I(2 * p) + "," + I(2 * q) + ")/U(" + I(p) + "," + I(q) + ")";
    case 10: return "SO(" + I(n) + "," + I(n) + ")/GL(" + I(n) + ",R)";
    case 11: return "Sp(" + I(2 * n) + ",R)/Sp(" + I(2 * p) + ",R)xSp(" + I(2 * (n - p)) + ",R)";
    case 12: return "Sp(" + I(4 * n) + ",R)/Sp(" + I(2 * n) + ",C)";
    case 13: return "Sp(" + I(2 * n) + ",R)/GL(" + I(n) + ",R)";
  }
  return "?";
}

std::vector<std::pair<std::string, int>> SymmetricSpace::params() const {
  switch (case_id) {
    case 1: case 11: return {{"n", n}, {"p", p}};
    case 2: case 5: case 9: return {{"p", p}, {"q", q}};
    case 3: case 7: case 8: return {{"r", r}, {"s", s}, {"rp", rp}, {"sp", sp}};
    default: return {{"n", n}};
  }
}

std::string SymmetricSpace::spec() const {
  std::string out = "case" + I(case_id) + ":";
  auto ps = params();
  for (size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + ps[i].first + "=" + I(ps[i].second);
  return out;
}

int SymmetricSpace::big_n() const {
  switch (case_id) {
    case 2: case 3: case 5: case 9: return p + q;
    case 7: return (p + q - 1) / 2;
    case 8: return (p + q) / 2;
    default: return n;
  }
}

SymmetricSpace parse_space(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("case", 0) != 0) fail(ErrorCode::ParseError, "space spec must start with 'case': '" + raw + "'");
  auto colon = t.find(':');
  int id = 0;
  try {
    id = std::stoi(t.substr(4, colon == std::string::npos ? std::string::npos : colon - 4));
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad case id in '" + raw + "'");
  }
  std::map<std::string, int> kv;
  if (colon != std::string::npos) {
    std::string rest = t.substr(colon + 1);
    size_t start = 0;
    while (start < rest.size()) {
      size_t comma = rest.find(',', start);
      std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected key=value in '" + raw + "'");
      try {
        size_t used = 0;
        std::string val = item.substr(eq + 1);
        kv[item.substr(0, eq)] = std::stoi(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad value in '" + item + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  SymmetricSpace probe;
  probe.case_id = id;
  std::vector<std::string> keys;
  switch (id) {
    case 1: case 11: keys = {"n", "p"}; break;
    case 2: case 5: case 9: keys = {"p", "q"}; break;
    case 3: case 7: case 8: keys = {"r", "s", "rp", "sp"}; break;
    case 4: case 6: case 10: case 12: case 13: keys = {"n"}; break;
    default: fail(ErrorCode::InvalidSpace, "case id must be 1..13 in '" + raw + "'");
  }
  for (const auto& [k, v] : kv)
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      fail(ErrorCode::ParseError, "unknown key '" + k + "' for case " + I(id));
  std::vector<int> vals;
  for (const auto& k : keys) {
    auto it = kv.find(k);
    if (it == kv.end()) fail(ErrorCode::ParseError, "missing key '" + k + "' for case " + I(id));
    vals.push_back(it->second);
  }
  vals.resize(4, 0);
  return SymmetricSpace::make(id, vals[0], vals[1], vals[2], vals[3]);
}

int LieFactor::rank() const {
  switch (type) {
    case LieType::gl: return dim;
    case LieType::sp: return dim / 2;
    case LieType::so: return dim / 2;
  }
  return 0;
}

std::string LieFactor::name() const {
  switch (type) {
    case LieType::gl: return "gl(" + I(dim) + ")";
    case LieType::sp: return "sp(" + I(dim) + ")";
    case LieType::so: return "so(" + I(dim) + ")";
  }
  return "?";
}

std::string DualData::l_check_name() const {
  std::map<int, int> count;
  for (int g : l_gl) ++count[g];
  std::string out;
  for (auto it = count.begin(); it != count.end(); ++it) {
    if (!out.empty()) out += " x ";
    out += "(gl_" + I(it->first) + ")^" + I(it->second);
  }
  if (l_tail) {
    if (!out.empty()) out += " x ";
    out += l_tail->name();
  }
  return out.empty() ? "0" : out;
}

DualData dual_data(const SymmetricSpace& x) {
  x.validate();
  DualData d;
  int N = x.big_n();
  int k = x.k();
  auto ones = [&](int c) { d.l_gl.assign(c, 1); };
  auto twos = [&](int c) { d.l_gl.assign(c, 2); };
  switch (x.case_id) {
    case 1:
      d.g_check = {LieType::sp, 2 * x.p};
      ones(2 * x.p);
      if (x.n - 2 * x.p > 0) d.l_tail = LieFactor{LieType::gl, x.n - 2 * x.p};
      break;
    case 2:
      d.g_check = {LieType::gl, N};
      ones(N);
      break;
    case 3:
      d.g_check = {LieType::sp, 2 * k};
      ones(2 * k);
      if (N - 2 * k > 0) d.l_tail = LieFactor{LieType::gl, N - 2 * k};
      break;
    case 4:
      d.g_check = {LieType::sp, 2 * x.n};
      ones(2 * x.n);
      break;
    case 5:
    case 6:
      d.g_check = {LieType::gl, N};
      twos(N);
      break;
    case 7:
      d.g_check = {LieType::sp, 2 * k};
      ones(k);
      if (N > k) d.l_tail = LieFactor{LieType::sp, 2 * (N - k)};
      break;
    case 8:
      d.g_check = {LieType::so, 2 * k + 1};
      ones(k);
      if (N > k) d.l_tail = LieFactor{LieType::so, 2 * (N - k)};
      break;
    case 9:
    case 10:
      d.g_check = {LieType::sp, 2 * (N / 2)};
      twos(N / 2);
      if (odd(N)) d.l_tail = LieFactor{LieType::so, 2};
      break;
    case 11:
      d.g_check = {LieType::sp, 2 * x.p};
      twos(x.p);
      d.l_tail = LieFactor{LieType::so, 2 * (x.n - 2 * x.p) + 1};
      break;
    case 12:
      d.g_check = {LieType::sp, 2 * x.n};
      twos(x.n);
      d.l_tail = LieFactor{LieType::so, 1};
      break;
    case 13:
      d.g_check = {LieType::so, 2 * x.n + 1};
      ones(x.n);
      break;
  }
  return d;
}

int rank(const SymmetricSpace& x) { return dual_data(x).g_check.rank(); }

const std::vector<RegistryRow>& registry() {
  static const std::vector<RegistryRow> rows = {
      {1, "GL(n,R)/GL(p,R)xGL(n-p,R)", {"n", "p"}, "2p <= n, p >= 1", "sp(2p)", "(gl_1)^{2p} x gl_{n-2p}", ""},
      {2, "U(p,q)/O(p,q)", {"p", "q"}, "p+q >= 1", "gl(p+q)", "(gl_1)^{p+q}", ""},
      {3, "U(p,q)/U(r,s)xU(r',s')", {"r", "s", "rp", "sp"}, "r <= r', s <= s', r+s >= 1", "sp(2(r+s))",
       "(gl_1)^{2(r+s)} x gl_{r'+s'-(r+s)}", ""},
      {4, "U(n,n)/GL(n,C)", {"n"}, "n >= 1", "sp(2n)", "(gl_1)^{2n}", ""},
      {5, "U(2p,2q)/Sp(p,q)", {"p", "q"}, "p+q >= 1", "gl(p+q)", "(gl_2)^{p+q}", ""},
      {6, "U(n,n)/Sp(2n,R)", {"n"}, "n >= 1", "gl(n)", "(gl_2)^n", ""},
      {7, "SO(p,q)/SO(r,s)xSO(r',s')", {"r", "s", "rp", "sp"}, "p+q = 2n+1, r <= r', s <= s', r+s >= 1",
       "sp(2(r+s))", "sp(2(n-(r+s))) x (gl_1)^{r+s}", ""},
      {8, "SO(p,q)/SO(r,s)xSO(r',s')", {"r", "s", "rp", "sp"}, "p+q = 2n, r <= r', s <= s', r+s >= 1",
       "so(2(r+s)+1)", "so(2(n-(r+s))) x (gl_1)^{r+s}", ""},
      {9, "SO(2p,2q)/U(p,q)", {"p", "q"}, "p+q = n >= 2, not both p and q odd", "sp(2[n/2])",
       "(gl_2)^{[n/2]} (+ so(2) if n odd)", "dual group Sp(2[n/2],C); the sp(2(p+q)) form overstates the rank"},
      {10, "SO(n,n)/GL(n,R)", {"n"}, "n >= 2", "sp(2[n/2])", "(gl_2)^{[n/2]} (+ so(2) if n odd)",
       "dual group Sp(2[n/2],C); the sp(2n) form overstates the rank"},
      {11, "Sp(2n,R)/Sp(2p,R)xSp(2(n-p),R)", {"n", "p"}, "2p <= n, p >= 1", "sp(2p)",
       "(gl_2)^p x so(2(n-2p)+1)", ""},
      {12, "Sp(4n,R)/Sp(2n,C)", {"n"}, "n >= 1", "sp(2n)", "(gl_2)^n", ""},
      {13, "Sp(2n,R)/GL(n,R)", {"n"}, "n >= 1", "so(2n+1)", "(gl_1)^n", ""},
  };
  return rows;
}

std::vector<SymmetricSpace> instances(int case_id, int bound) {
  std::vector<SymmetricSpace> out;
  int arity = static_cast<int>(registry().at(case_id - 1).params.size());
  std::vector<int> v(4, 0);
  std::set<std::string> seen;
  auto visit = [&]() {
    SymmetricSpace x;
    try {
      x = SymmetricSpace::make(case_id, v[0], v[1], v[2], v[3]);
    } catch (const Error&) {
      return;
    }
    if (seen.insert(x.spec()).second) out.push_back(x);
  };
  for (v[0] = 0; v[0] <= bound; ++v[0])
    for (v[1] = 0; v[1] <= (arity > 1 ? bound : 0); ++v[1])
      for (v[2] = 0; v[2] <= (arity > 2 ? bound : 0); ++v[2])
        for (v[3] = 0; v[3] <= (arity > 3 ? bound : 0); ++v[3]) visit();
  return out;
}

std::string RealFactor::name() const {
  std::string base;
  switch (kind) {
    case RealFactorKind::U:
      base = b < 0 ? "U(" + I(a) + ")" : "U(" + I(a) + "," + I(b) + ")";
      break;
    case RealFactorKind::SU:
      base = b < 0 ? "SU(" + I(a) + ")" : "SU(" + I(a) + "," + I(b) + ")";
      break;
    case RealFactorKind::Cx: base = mult == 1 ? "C^x" : "(C^x)"; break;
    case RealFactorKind::Rx: base = mult == 1 ? "R^x" : "(R^x)"; break;
    case RealFactorKind::GLR: base = "GL(" + I(a) + ",R)"; break;
    case RealFactorKind::SpR: base = "Sp(" + I(2 * a) + ",R)"; break;
    case RealFactorKind::SO: base = "SO(" + I(a) + "," + I(b) + ")"; break;
    case RealFactorKind::PM1: base = "{+-1}"; break;
  }
  return mult == 1 ? base : base + "^" + I(mult);
}

namespace {

bool trivial_factor(const RealFactor& f) {
  if (f.mult <= 0) return true;
  switch (f.kind) {
    case RealFactorKind::U:
    case RealFactorKind::SU:
      return f.a + std::max(f.b, 0) == 0;
    case RealFactorKind::GLR:
    case RealFactorKind::SpR:
      return f.a == 0;
    case RealFactorKind::SO:
      return f.a + f.b == 0;
    default:
      return false;
  }
}

std::string join(const std::vector<RealFactor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (trivial_factor(f)) continue;
    if (!out.empty()) out += " x ";
    out += f.name();
  }
  return out.empty() ? "1" : out;
}

RealFactor F(RealFactorKind k, int a, int b, int mult = 1) { return {k, a, b, mult}; }

}  // namespace

std::string RealLevi::L_name() const { return join(L); }
std::string RealLevi::L_cap_H_name() const { return join(L_cap_H); }

RealLevi real_levi(const SymmetricSpace& x) {
  x.validate();
  using K = RealFactorKind;
  RealLevi l;
  int N = x.big_n();
  switch (x.case_id) {
    case 1:
      l.L = {F(K::Cx, 0, 0, x.p), F(K::GLR, x.n - 2 * x.p, 0)};
      l.L_cap_H = {F(K::Rx, 0, 0, x.p), F(K::GLR, x.n - 2 * x.p, 0)};
      break;
    case 2:
      l.L = {F(K::U, 1, -1, N)};
      l.L_cap_H = {F(K::PM1, 0, 0, N)};
      break;
    case 3:
      l.L = {F(K::U, 1, -1, 2 * x.k()), F(K::U, x.rp - x.r, x.sp - x.s)};
      l.L_cap_H = {F(K::U, 1, -1, x.k()), F(K::U, x.rp - x.r, x.sp - x.s)};
      break;
    case 4:
      l.L = {F(K::U, 1, -1, 2 * x.n)};
      l.L_cap_H = {F(K::U, 1, -1, x.n)};
      break;
    case 5:
      l.L = {F(K::U, 2, 0, x.p), F(K::U, 0, 2, x.q)};
      l.L_cap_H = {F(K::SU, 2, 0, x.p), F(K::SU, 0, 2, x.q)};
      break;
    case 6:
      l.L = {F(K::U, 1, 1, x.n)};
      l.L_cap_H = {F(K::SU, 1, 1, x.n)};
      break;
    case 7:
    case 8:
      l.L = {F(K::U, 1, 0, x.r), F(K::U, 0, 1, x.s), F(K::SO, x.p - 2 * x.r, x.q - 2 * x.s)};
      l.L_cap_H = {F(K::SO, x.p - 2 * x.r, x.q - 2 * x.s)};
      break;
    case 9:
      if (!odd(N)) {
        l.L = {F(K::U, 2, 0, x.p / 2), F(K::U, 0, 2, x.q / 2)};
        l.L_cap_H = {F(K::SU, 2, 0, x.p / 2), F(K::SU, 0, 2, x.q / 2)};
      } else {
        l.L = {F(K::U, 2, 0, x.p / 2), F(K::U, 0, 2, (x.q - 1) / 2), F(K::SO, 0, 2)};
        l.L_cap_H = {F(K::SU, 2, 0, x.p / 2), F(K::SU, 0, 2, (x.q - 1) / 2), F(K::SO, 0, 2)};
        l.alt_readings = {
            "p even, q odd: L = " + join(l.L),
            "swapped presentation SO(" + I(2 * x.q) + "," + I(2 * x.p) + "), first index odd: L = " +
                join({F(K::U, 2, 0, (x.q - 1) / 2), F(K::U, 0, 2, x.p / 2), F(K::SO, 2, 0)})};
      }
      break;
    case 10:
      l.L = {F(K::U, 1, 1, x.n / 2)};
      l.L_cap_H = {F(K::SU, 1, 1, x.n / 2)};
      if (odd(x.n)) {
        l.L.push_back(F(K::SO, 1, 1));
        l.L_cap_H.push_back(F(K::SO, 1, 1));
      }
      break;
    case 11:
      l.L = {F(K::U, 1, 1, x.p), F(K::SpR, x.n - 2 * x.p, 0)};
      l.L_cap_H = {F(K::SU, 1, 1, x.p), F(K::SpR, x.n - 2 * x.p, 0)};
      break;
    case 12:
      l.L = {F(K::U, 2, -1, x.n)};
      l.L_cap_H = {F(K::SU, 2, -1, x.n)};
      break;
    case 13:
      l.L = {F(K::U, 1, -1, x.n)};
      l.L_cap_H = {F(K::PM1, 0, 0, x.n)};
      break;
  }
  return l;
}

namespace {

void push_lie(std::vector<LieFactor>& out, LieFactor f, int mult = 1) {
  if (f.rank() == 0) return;
  for (int i = 0; i < mult; ++i) out.push_back(f);
}

bool lie_less(const LieFactor& a, const LieFactor& b) {
  return std::make_pair(int(a.type), a.dim) < std::make_pair(int(b.type), b.dim);
}

}  // namespace

std::vector<LieFactor> complexified_dual(const RealLevi& l) {
  std::vector<LieFactor> out;
  for (const auto& f : l.L) {
    if (trivial_factor(f)) continue;
    switch (f.kind) {
      case RealFactorKind::U:
      case RealFactorKind::SU:
        push_lie(out, {LieType::gl, f.a + std::max(f.b, 0)}, f.mult);
        break;
      case RealFactorKind::Cx: push_lie(out, {LieType::gl, 1}, 2 * f.mult); break;
      case RealFactorKind::Rx: push_lie(out, {LieType::gl, 1}, f.mult); break;
      case RealFactorKind::GLR: push_lie(out, {LieType::gl, f.a}, f.mult); break;
      case RealFactorKind::SpR: push_lie(out, {LieType::so, 2 * f.a + 1}, f.mult); break;
      case RealFactorKind::SO: {
        int m = f.a + f.b;
        push_lie(out, odd(m) ? LieFactor{LieType::sp, m - 1} : LieFactor{LieType::so, m}, f.mult);
        break;
      }
      case RealFactorKind::PM1: break;
    }
  }
  std::sort(out.begin(), out.end(), lie_less);
  return out;
}

std::vector<LieFactor> l_check_factors(const DualData& d) {
  std::vector<LieFactor> out;
  for (int g : d.l_gl) push_lie(out, {LieType::gl, g});
  if (d.l_tail) push_lie(out, *d.l_tail);
  std::sort(out.begin(), out.end(), lie_less);
  return out;
}

CharLattice levi_char_constraints(const SymmetricSpace& x) {
  x.validate();
  int N = x.big_n();
  int k = x.k();
  switch (x.case_id) {
    case 1:
      return {"(t_1..t_" + I(x.p) + "; eps), t_i in Z/2, eps in {0,1}",
              "each t_i integral and eps = 0", x.p, true};
    case 2:
      return {"(t_1..t_" + I(N) + ") in Z^" + I(N), "all t_i even", N, false};
    case 3: {
      int len = 2 * k + (N > 2 * k ? 1 : 0);
      return {"(t_1..t_" + I(2 * k) + (N > 2 * k ? ", t_0)" : ")") + " in Z^" + I(len),
              std::string("(t_1,-t_1,...,t_") + I(k) + ",-t_" + I(k) + (N > 2 * k ? ",0)" : ")"), len, false};
    }
    case 4:
      return {"(t_1..t_" + I(2 * x.n) + ") in Z^" + I(2 * x.n),
              "(t_1,-t_1,...,t_" + I(x.n) + ",-t_" + I(x.n) + ")", 2 * x.n, false};
    case 5:
    case 6:
      return {"(t_1..t_" + I(N) + ") in Z^" + I(N), "always", N, false};
    case 7:
    case 8:
      return {"(t_1..t_" + I(k) + "; eta), eta a character of SO(" + I(x.p - 2 * x.r) + "," +
                  I(x.q - 2 * x.s) + ")",
              "eta trivial", k, true};
    case 9:
      return {"(t_1..t_" + I(N / 2) + ") in Z^" + I(N / 2), "always", N / 2, false};
    case 10:
      return {"(t_1..t_" + I(x.n / 2) + "; eps)" + (odd(x.n) ? ", eps on SO(1,1)" : ", eps = 0"),
              "eps = 0", x.n / 2, odd(x.n)};
    case 11:
      return {"(t_1..t_" + I(x.p) + ") in Z^" + I(x.p), "always", x.p, false};
    case 12:
      return {"(t_1..t_" + I(x.n) + ") in Z^" + I(x.n), "always", x.n, false};
    case 13:
      return {"(t_1..t_" + I(x.n) + ") in Z^" + I(x.n), "all t_i even", x.n, false};
  }
  fail(ErrorCode::InvalidSpace, "unknown case");
}

bool char_trivial_on_LH(const SymmetricSpace& x, const std::vector<Rational>& t, int eps) {
  CharLattice cl = levi_char_constraints(x);
  if (static_cast<int>(t.size()) != cl.tuple_length)
    fail(ErrorCode::DimensionMismatch, "character tuple of length " + I(int(t.size())) + ", expected " +
                                           I(cl.tuple_length));
  auto all_int = std::all_of(t.begin(), t.end(), [](const Rational& v) { return is_integer(v); });
  if (x.case_id != 1 && !all_int) fail(ErrorCode::DimensionMismatch, "character entries must be integers");
  auto all_even = [&] {
    return std::all_of(t.begin(), t.end(), [](const Rational& v) { return v.numerator() % 2 == 0; });
  };
  switch (x.case_id) {
    case 1: return all_int && eps == 0;
    case 2:
    case 13: return all_even();
    case 3:
    case 4: {
      size_t pairs = x.case_id == 3 ? 2 * x.k() : 2 * x.n;
      for (size_t i = 0; i + 1 < pairs; i += 2)
        if (t[i + 1] != -t[i]) return false;
      return t.size() == pairs || t.back() == Rational(0);
    }
    case 7:
    case 8:
    case 10: return eps == 0;
    default: return true;
  }
}

const std::vector<RankOneFixture>& rank_one_fixtures() {
  static const std::vector<RankOneFixture> f = {
      {1, SymmetricSpace::make(1, 2, 1), "GL(2,R)/GL(1,R)xGL(1,R)", "C^x", "R^x"},
      {2, SymmetricSpace::make(2, 1, 0), "U(1)/O(1)", "U(1)", "{+-1}"},
      {3, SymmetricSpace::make(3, 1, 0, 1, 0), "U(2)/U(1)xU(1)", "U(1)^2", "U(1)"},
      {4, SymmetricSpace::make(4, 1), "U(1,1)/GL(1,C)", "U(1)^2", "U(1)"},
      {5, SymmetricSpace::make(5, 1, 0), "U(2)/SU(2)", "U(2,0)", "SU(2,0)"},
      {6, SymmetricSpace::make(6, 1), "U(1,1)/SU(1,1)", "U(1,1)", "SU(1,1)"},
      {8, SymmetricSpace::make(8, 1, 0, 1, 0), "SO(2)/SO(1)xSO(1)", "U(1,0)", "1"},
      {9, SymmetricSpace::make(9, 2, 0), "SO(4)/U(2)", "U(2,0)", "SU(2,0)"},
      {10, SymmetricSpace::make(10, 2), "SO(2,2)/GL(2,R)", "U(1,1)", "SU(1,1)"},
      {11, SymmetricSpace::make(11, 2, 1), "Sp(4,R)/Sp(2,R)xSp(2,R)", "U(1,1)", "SU(1,1)"},
      {12, SymmetricSpace::make(12, 1), "Sp(4,R)/Sp(2,C)", "U(2)", "SU(2)"},
      {13, SymmetricSpace::make(13, 1), "Sp(2,R)/GL(1,R)", "U(1)", "{+-1}"},
  };
  return f;
}

}  // namespace svt
