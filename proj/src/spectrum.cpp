#include "svt/spectrum.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>

#include "svt/errors.hpp"
#include "svt/factorization.hpp"

namespace svt {

namespace {

std::string I(long long v) { return std::to_string(v); }
bool odd(long long v) { return ((v % 2) + 2) % 2 == 1; }
int alt(int i) { return odd(i - 1) ? -1 : 1; }  // (-1)^(i-1), i 1-based

std::vector<ArthurSummand> slots(const ArthurParameter& psi) {
  auto s = psi.summands;
  std::stable_sort(s.begin(), s.end(), canonical_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool has_repeat(const ArthurParameter& psi) {
  return static_cast<int>(psi.summands.size()) != static_cast<int>(slots(psi).size());
}

int constrained_count(const SymmetricSpace& x) {
  int N = x.big_n();
  switch (x.case_id) {
    case 3: return 2 * x.k();
    case 4: return 2 * x.n;
    case 7: case 8: return x.k();
    case 9: return N / 2;
    case 12: return x.n;
  }
  return -1;  // every slot
}

void require_case(const SymmetricSpace& x) {
  if (x.case_id == 1 || x.case_id == 2 || x.case_id == 13)
    fail(ErrorCode::WrongCase, "case " + I(x.case_id) + " has no epsilon criterion; use the dedicated operation");
}

bool criterion(const SymmetricSpace& x, const EpsCharacter& e, const SpectrumOptions& opt) {
  int R = static_cast<int>(e.size());
  int r = opt.swap_inner_form ? x.s : x.r;
  auto all = [&](int from, int to, int v) {
    for (int i = from; i < to; ++i)
      if (e[i] != v) return false;
    return true;
  };
  switch (x.case_id) {
    case 3: {
      int d = 2 * x.k();
      int want = odd(x.p + x.q - 1) ? -1 : 1;
      int match = 0, anti = 0;
      for (int i = 1; i <= d; ++i) {
        match += e[i - 1] == alt(i);
        anti += e[i - 1] == -alt(i);
      }
      for (int i = 1; i <= x.k(); ++i)
        if (e[2 * i - 2] * e[2 * i - 1] != want) return false;
      int s = opt.swap_inner_form ? x.r : x.s;
      return match == 2 * r && anti == 2 * s;
    }
    case 4: {
      int match = 0;
      for (int i = 1; i <= 2 * x.n; ++i) match += e[i - 1] == alt(i);
      for (int i = 1; i <= x.n; ++i)
        if (e[2 * i - 2] * e[2 * i - 1] != 1) return false;
      return match == x.n;
    }
    case 5: return all(0, R, -1);
    case 6: case 10: case 11: return all(0, R, 1);
    case 7:
    case 8: {
      int match = 0;
      for (int i = 1; i <= x.k(); ++i) match += e[i - 1] == alt(i);
      return match == r;
    }
    case 9: return all(0, x.big_n() / 2, -1);
    case 12: return all(0, x.n, -1);
  }
  return false;
}

void check_eps(const ArthurParameter& psi, const EpsCharacter& eps) {
  if (static_cast<int>(eps.size()) != eps_length(psi))
    fail(ErrorCode::DimensionMismatch,
         "epsilon of length " + I(eps.size()) + ", parameter has " + I(eps_length(psi)) + " distinct summands");
  for (int v : eps)
    if (v != 1 && v != -1) fail(ErrorCode::ParseError, "epsilon entries must be +1 or -1");
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string eps_str(const EpsCharacter& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::string(e[i] > 0 ? "+1" : "-1");
  return s + ")";
}

EpsCharacter parse_eps(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') t += c;
  EpsCharacter e;
  if (t.find(',') == std::string::npos && t.find('1') == std::string::npos) {
    for (char c : t) {
      if (c == '+') e.push_back(1);
      else if (c == '-') e.push_back(-1);
      else fail(ErrorCode::ParseError, "bad epsilon '" + raw + "'");
    }
    return e;
  }
  size_t start = 0;
  while (start <= t.size()) {
    size_t comma = t.find(',', start);
    std::string tok = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok == "1" || tok == "+1" || tok == "+") e.push_back(1);
    else if (tok == "-1" || tok == "-") e.push_back(-1);
    else fail(ErrorCode::ParseError, "bad epsilon entry '" + tok + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return e;
}

int eps_length(const ArthurParameter& psi) { return static_cast<int>(slots(psi).size()); }

std::vector<int> free_slots(const SymmetricSpace& x, const ArthurParameter& psi) {
  int c = constrained_count(x);
  std::vector<int> out;
  if (c < 0) return out;
  for (int i = c; i < eps_length(psi); ++i) out.push_back(i);
  return out;
}

bool eps_valid(const SymmetricSpace& x, const ArthurParameter& psi, const EpsCharacter& eps,
               const SpectrumOptions& opt) {
  require_case(x);
  factorize(psi, x);
  check_eps(psi, eps);
  return criterion(x, eps, opt);
}

namespace {

EpsEnumeration enumerate_impl(const SymmetricSpace& x, const ArthurParameter& psi, const SpectrumOptions& opt,
                              bool parallel) {
  require_case(x);
  factorize(psi, x);
  int R = eps_length(psi);
  if (R > 24) fail(ErrorCode::RankTooLarge, "component group rank " + I(R) + " exceeds 24");
  EpsEnumeration out;
  out.free = free_slots(x, psi);
  if (has_repeat(psi)) {
    out.flagged = true;
    out.flag_reason = "repeated summand counted as one index; A(psi) not determined";
  }
  std::vector<int> bound;
  for (int i = 0; i < R; ++i)
    if (std::find(out.free.begin(), out.free.end(), i) == out.free.end()) bound.push_back(i);
  int B = static_cast<int>(bound.size());
  long long total = 1LL << B;
  auto make = [&](long long mask) {
    EpsCharacter e(R, 1);
    for (int j = 0; j < B; ++j)
      if ((mask >> (B - 1 - j)) & 1) e[bound[j]] = -1;
    return e;
  };
  if (!parallel || total < 1024) {
    for (long long mask = 0; mask < total; ++mask) {
      auto e = make(mask);
      if (criterion(x, e, opt)) out.accepted.push_back(std::move(e));
    }
  } else {
    int chunks = std::max(1, omp_get_max_threads()) * 8;
    std::vector<std::vector<EpsCharacter>> part(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
      long long lo = total * c / chunks, hi = total * (c + 1) / chunks;
      for (long long mask = lo; mask < hi; ++mask) {
        auto e = make(mask);
        if (criterion(x, e, opt)) part[c].push_back(std::move(e));
      }
    }
    for (auto& p : part)
      for (auto& e : p) out.accepted.push_back(std::move(e));
  }
  if (x.case_id == 3) {
    out.expected_count = binom(x.k(), x.r);
    long long got = static_cast<long long>(out.accepted.size());
    if (got != *out.expected_count)
      out.discrepancy = "criterion accepts " + I(got) + " characters, counting argument expects C(" + I(x.k()) +
                        "," + I(x.r) + ") = " + I(*out.expected_count) + " (p+q " +
                        (odd(x.p + x.q) ? "odd" : "even") + ", adjacent pairing)";
  }
  return out;
}

}  // namespace

EpsEnumeration enumerate_eps(const SymmetricSpace& x, const ArthurParameter& psi, const SpectrumOptions& opt) {
  return enumerate_impl(x, psi, opt, true);
}

EpsEnumeration enumerate_eps_serial(const SymmetricSpace& x, const ArthurParameter& psi,
                                    const SpectrumOptions& opt) {
  return enumerate_impl(x, psi, opt, false);
}

std::optional<SymmetricSpace> disjoint_owner(const ArthurParameter& psi, const EpsCharacter& eps,
                                             const std::vector<SymmetricSpace>& candidates) {
  check_eps(psi, eps);
  std::vector<SymmetricSpace> owners;
  for (const auto& x : candidates) {
    if (x.case_id == 1 || x.case_id == 2 || x.case_id == 13) continue;
    try {
      factorize(psi, x);
    } catch (const Error&) {
      continue;
    }
    if (criterion(x, eps, {})) owners.push_back(x);
  }
  if (owners.size() > 1) {
    std::string names;
    for (const auto& o : owners) names += (names.empty() ? "" : ", ") + o.name();
    fail(ErrorCode::MultipleOwners, eps_str(eps) + " accepted by " + names);
  }
  if (owners.empty()) return std::nullopt;
  return owners.front();
}

std::vector<SymmetricSpace> matching_spaces(const ClassicalGroup& g, const ArthurParameter& psi, int bound) {
  std::vector<SymmetricSpace> out;
  int lo = 3, hi = 12;
  if (g.family == GroupFamily::Unitary) hi = 6;
  else if (g.family == GroupFamily::SpecialOrthogonal) lo = 7, hi = 10;
  else if (g.family == GroupFamily::SymplecticReal) lo = 11;
  else return out;
  bound = std::min(bound, g.n + g.p + g.q);
  for (int c = lo; c <= hi; ++c) {
    for (const auto& x : instances(c, bound)) {
      ClassicalGroup h = x.group();
      bool same = h == g;
      if (!same && c == 9 && g.family == GroupFamily::SpecialOrthogonal)
        same = h == ClassicalGroup::SO(g.q, g.p);
      if (!same) continue;
      try {
        factorize(psi, x);
      } catch (const Error&) {
        continue;
      }
      out.push_back(x);
    }
  }
  return out;
}

void check_case2_lambda(const std::vector<Rational>& lambda) {
  int n = static_cast<int>(lambda.size());
  if (n == 0) fail(ErrorCode::IrregularLambda, "empty infinitesimal character");
  for (int i = 0; i + 1 < n; ++i)
    if (!(lambda[i] > lambda[i + 1])) fail(ErrorCode::IrregularLambda, "lambda must be strictly decreasing");
  for (const auto& l : lambda) {
    if (odd(n) && !is_integer(l)) fail(ErrorCode::NonIntegralLambda, "n odd needs integral lambda");
    if (!odd(n) && !is_half_integer(l)) fail(ErrorCode::NonIntegralLambda, "n even needs half-integral lambda");
  }
}

MinKType case2_min_ktype(const std::vector<Rational>& lambda, const EpsCharacter& eps) {
  check_case2_lambda(lambda);
  int n = static_cast<int>(lambda.size());
  if (static_cast<int>(eps.size()) != n) fail(ErrorCode::DimensionMismatch, "epsilon length differs from n");
  MinKType k;
  std::vector<bool> match(n);
  for (int i = 1; i <= n; ++i) {
    match[i - 1] = eps[i - 1] == alt(i);
    k.p += match[i - 1];
    k.mu_tilde.push_back(lambda[i - 1] + Rational(n + 1, 2) - i);
  }
  for (int i = 0; i < n; ++i) {
    int below = 0, above = 0;
    for (int j = 0; j < n; ++j) {
      if (match[i] == match[j]) continue;
      below += lambda[j] < lambda[i];
      above += lambda[j] > lambda[i];
    }
    k.mu.push_back(k.mu_tilde[i] + below - above);
    (match[i] ? k.mu_match : k.mu_other).push_back(k.mu.back());
  }
  return k;
}

bool case2_is_ds(const std::vector<Rational>& lambda, const EpsCharacter& eps, Case2Variant v) {
  MinKType k = case2_min_ktype(lambda, eps);
  int n = static_cast<int>(lambda.size());
  auto par = [](const Rational& r) { return odd(r.numerator()); };
  bool so = true;
  if (!odd(n)) {
    for (const auto& m : k.mu_tilde) so = so && par(m) == par(k.mu_tilde[0]);
  } else {
    std::vector<int> pm, po;
    for (int i = 1; i <= n; ++i) (eps[i - 1] == alt(i) ? pm : po).push_back(par(k.mu_tilde[i - 1]));
    for (int x : pm) so = so && x == pm[0];
    for (int x : po) so = so && x == po[0];
    if (!pm.empty() && !po.empty()) so = so && pm[0] != po[0];
  }
  if (v == Case2Variant::SOOnly || !so) return so;
  if (!odd(n)) return par(k.mu_tilde[0]) == odd(k.p);
  for (const auto& m : k.mu)
    if (par(m)) return false;
  return true;
}

EpsCharacter case2_formula_eps(const std::vector<Rational>& lambda, bool swapped) {
  check_case2_lambda(lambda);
  int n = static_cast<int>(lambda.size());
  EpsCharacter e;
  for (const auto& l : lambda) {
    Rational ex = l + Rational(swapped ? n + 1 : n - 1, 2);
    e.push_back(odd(ex.numerator()) ? -1 : 1);
  }
  return e;
}

int case2_p0(const std::vector<Rational>& lambda) {
  check_case2_lambda(lambda);
  int n = static_cast<int>(lambda.size());
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    Rational mt = lambda[i - 1] + Rational(n + 1, 2) - i;
    c += !odd(mt.numerator());
  }
  return c;
}

namespace {

void check_case13_lambda(const std::vector<int>& lambda) {
  if (lambda.empty()) fail(ErrorCode::IrregularLambda, "empty infinitesimal character");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) fail(ErrorCode::IrregularLambda, "lambda entries must be positive");
    if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1])
      fail(ErrorCode::IrregularLambda, "lambda must be strictly decreasing");
  }
}

}  // namespace

bool case13_is_ds(const std::vector<int>& lambda, Case13Chi chi) {
  check_case13_lambda(lambda);
  int shift = chi == Case13Chi::Trivial ? 0 : 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    if (odd(lambda[i]) != odd(static_cast<long long>(i) + 1 + shift)) return false;
  return true;
}

bool case13_root_oracle(const std::vector<int>& lambda, Case13Chi chi) {
  check_case13_lambda(lambda);
  int n = static_cast<int>(lambda.size());
  // Roots of type C_n as integer vectors; noncompact ones are +-(e_i+e_j), +-2e_i.
  struct Root {
    std::vector<int> v;
    bool compact;
  };
  std::vector<Root> roots;
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<int> v(n, 0);
      v[i] = 2 * s;
      roots.push_back({v, false});
    }
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<int> v(n, 0);
          v[i] = si;
          v[j] = sj;
          roots.push_back({v, si != sj});
        }
  }
  std::vector<long long> two_rho(n, 0), top(n, 0);
  for (const auto& r : roots) {
    long long pairing = 0;
    for (int i = 0; i < n; ++i) pairing += static_cast<long long>(r.v[i]) * lambda[i];
    if (pairing <= 0) continue;
    for (int i = 0; i < n; ++i) {
      two_rho[i] += r.v[i];
      if (!r.compact) top[i] += r.v[i];
    }
  }
  // pi_L(t) with t = lambda - rho, tensored with the top exterior power of
  // u cap p, restricted to the i-th {+-1}.
  for (int i = 0; i < n; ++i) {
    long long t = lambda[i] - two_rho[i] / 2;
    bool sign = odd(t + top[i]);
    if (sign != (chi == Case13Chi::SgnDet)) return false;
  }
  return true;
}

}  // namespace svt
