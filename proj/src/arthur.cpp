#include "svt/arthur.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "svt/errors.hpp"

namespace svt {

int ArthurParameter::dimension() const {
  int d = 0;
  for (const auto& s : summands) d += svt::dimension(s.rho) * s.a;
  return d;
}

std::string notation(const ArthurSummand& s) {
  std::string r = notation(s.rho);
  if (!is_cchar(s.rho) && as_rep(s.rho).kind == WeilKind::OneDim) r += " ";
  return r + "xR[" + std::to_string(s.a) + "]";
}

std::string notation(const ArthurParameter& psi) {
  std::string out;
  for (size_t i = 0; i < psi.summands.size(); ++i) {
    if (i) out += " + ";
    out += notation(psi.summands[i]);
  }
  return out;
}

std::vector<ArthurSummand> parse_summands(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::ParseError, "empty parameter");
  std::vector<ArthurSummand> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t plus = s.find('+', start);
    std::string tok = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    auto x = tok.rfind("xR[");
    if (x == std::string::npos || tok.back() != ']')
      fail(ErrorCode::ParseError, "summand '" + tok + "' lacks an xR[a] factor");
    ArthurSummand sm;
    sm.rho = parse_rho(tok.substr(0, x));
    Rational a = parse_rational(tok.substr(x + 3, tok.size() - x - 4));
    if (a.denominator() != 1 || a < 1) fail(ErrorCode::ParseError, "R[a] needs a >= 1 in '" + tok + "'");
    sm.a = static_cast<int>(a.numerator());
    out.push_back(sm);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

ArthurParameter parse_psi(const LGroupDescriptor& target, const std::string& s) {
  ArthurParameter psi{target, parse_summands(s)};
  if (psi.dimension() != target.standard_dim)
    fail(ErrorCode::DimensionMismatch, "parameter has dimension " + std::to_string(psi.dimension()) +
                                           ", target needs " + std::to_string(target.standard_dim));
  return psi;
}

namespace {

using Key = std::tuple<int, int, Rational, int, int, Rational>;

Key key(const ArthurSummand& s) {
  if (is_cchar(s.rho)) {
    int m = as_cchar(s.rho).m;
    return {0, 0, Rational(-std::abs(m)), m >= 0 ? 0 : 1, -s.a, 0};
  }
  const auto& w = as_rep(s.rho);
  switch (w.kind) {
    case WeilKind::TwoDim: return {0, 1, Rational(-w.m), 0, -s.a, 0};
    case WeilKind::GeneralTwoDim: return {0, 2, -w.s1, 0, -s.a, -w.s2};
    case WeilKind::OneDim: return {1, 0, Rational(-s.a), w.b, 0, 0};
    case WeilKind::GeneralOneDim: return {1, 1, Rational(-s.a), w.b, 0, -w.s1};
  }
  return {};
}

}  // namespace

bool canonical_less(const ArthurSummand& x, const ArthurSummand& y) { return key(x) < key(y); }

void canonicalize(ArthurParameter& psi) {
  std::stable_sort(psi.summands.begin(), psi.summands.end(), canonical_less);
}

std::vector<Violation> validate_good_parity(const ArthurParameter& psi) {
  std::vector<Violation> out;
  const auto& t = psi.target;
  if (psi.dimension() != t.standard_dim)
    out.push_back({-1, "dimension", "sum of dim(rho)*a is " + std::to_string(psi.dimension()) +
                                        ", expected " + std::to_string(t.standard_dim)});
  auto odd = [](long long v) { return ((v % 2) + 2) % 2 == 1; };

  if (t.dual_family == DualFamily::GL && t.galois_action == GaloisAction::Trivial) {
    for (size_t i = 0; i < psi.summands.size(); ++i)
      if (is_cchar(psi.summands[i].rho))
        out.push_back({int(i), "kind", "W_C characters are not W_R representations"});
    return out;
  }
  if (t.dual_family == DualFamily::GL) {
    for (size_t i = 0; i < psi.summands.size(); ++i) {
      const auto& s = psi.summands[i];
      if (!is_cchar(s.rho)) {
        out.push_back({int(i), "kind", "unitary targets take chi(m) summands"});
        continue;
      }
      if (odd(as_cchar(s.rho).m + s.a - t.standard_dim))
        out.push_back({int(i), "m+a = n mod 2", notation(s) + ": m+a and n differ in parity"});
    }
    return out;
  }

  // Classical targets: delta(m) x R[a] and sgn^b x R[c].
  bool want_odd_delta = t.dual_family == DualFamily::Sp;
  bool want_odd_c = t.dual_family == DualFamily::SO;
  int f = 0, sum_b = 0;
  for (size_t i = 0; i < psi.summands.size(); ++i) {
    const auto& s = psi.summands[i];
    if (is_cchar(s.rho)) {
      out.push_back({int(i), "kind", "W_C characters are not allowed here"});
      continue;
    }
    const auto& w = as_rep(s.rho);
    if (w.kind == WeilKind::TwoDim) {
      if (odd(w.m + s.a - 1) != want_odd_delta)
        out.push_back({int(i), want_odd_delta ? "m+a-1 = 1 mod 2" : "m+a-1 = 0 mod 2",
                       notation(s) + (want_odd_delta ? ": m+a-1 even" : ": m+a-1 odd")});
      if (odd(s.a)) ++f;
    } else if (w.kind == WeilKind::OneDim) {
      if (odd(s.a) != want_odd_c)
        out.push_back({int(i), want_odd_c ? "c odd" : "c even",
                       notation(s) + (want_odd_c ? ": c even" : ": c odd")});
      sum_b += w.b;
    } else {
      out.push_back({int(i), "kind", "only delta(m) and sgn^b summands are of good parity"});
    }
  }
  if (t.dual_family == DualFamily::SO && odd(t.standard_dim)) {
    if (odd(sum_b - f))
      out.push_back({-1, "sum b = f mod 2", "sum b = " + std::to_string(sum_b) + ", f = " + std::to_string(f)});
  } else if (t.dual_family == DualFamily::SO) {
    int np = t.galois_action == GaloisAction::Trivial ? 0 : 1;
    if (odd(sum_b + f - np))
      out.push_back({-1, "sum b + f = n-p mod 2",
                     "sum b + f = " + std::to_string(sum_b + f) + ", n-p parity " + std::to_string(np)});
  }
  return out;
}

bool is_good_parity(const ArthurParameter& psi) { return validate_good_parity(psi).empty(); }

bool is_multiplicity_free(const ArthurParameter& psi) {
  for (size_t i = 0; i < psi.summands.size(); ++i)
    for (size_t j = i + 1; j < psi.summands.size(); ++j)
      if (psi.summands[i] == psi.summands[j]) return false;
  return true;
}

int component_group(const ArthurParameter& psi) {
  if (psi.target.dual_family == DualFamily::GL && psi.target.galois_action == GaloisAction::Trivial)
    return 0;
  if (!is_multiplicity_free(psi))
    fail(ErrorCode::MultiplicityNotSupported, "repeated summand in " + notation(psi));
  return static_cast<int>(psi.summands.size());
}

namespace {

void ladder(std::vector<Rational>& out, Rational centre, int a) {
  for (int j = 0; j < a; ++j) out.push_back(centre + Rational(a - 1, 2) - j);
}

}  // namespace

InfChar inf_char(const ArthurParameter& psi) {
  InfChar ic;
  ic.family = psi.target.dual_family;
  ic.standard_dim = psi.target.standard_dim;
  for (const auto& s : psi.summands) {
    if (is_cchar(s.rho)) {
      ladder(ic.entries, Rational(as_cchar(s.rho).m, 2), s.a);
      continue;
    }
    const auto& w = as_rep(s.rho);
    switch (w.kind) {
      case WeilKind::TwoDim:
        ladder(ic.entries, Rational(w.m, 2), s.a);
        ladder(ic.entries, Rational(-w.m, 2), s.a);
        break;
      case WeilKind::OneDim: ladder(ic.entries, 0, s.a); break;
      case WeilKind::GeneralTwoDim:
        ladder(ic.entries, w.s1, s.a);
        ladder(ic.entries, w.s2, s.a);
        break;
      case WeilKind::GeneralOneDim: ladder(ic.entries, w.s1, s.a); break;
    }
  }
  std::sort(ic.entries.begin(), ic.entries.end(), [](const Rational& x, const Rational& y) { return x > y; });
  return ic;
}

bool InfChar::is_regular() const {
  int zero_allowance = 1;
  if (family == DualFamily::Sp) zero_allowance = 0;
  if (family == DualFamily::SO && standard_dim % 2 == 0) zero_allowance = 2;
  for (size_t i = 0; i < entries.size();) {
    size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    int c = static_cast<int>(j - i);
    if (entries[i].numerator() == 0 ? c > zero_allowance : c > 1) return false;
    i = j;
  }
  return true;
}

bool InfChar::is_integral() const {
  return std::all_of(entries.begin(), entries.end(), [](const Rational& r) { return is_integer(r); });
}

bool InfChar::is_half_integral_nonintegral() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const Rational& r) { return is_half_integer(r); });
}

std::string InfChar::str() const {
  std::string s = "{";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += to_string(entries[i]);
  }
  return s + "}";
}

std::vector<int> sl2_partition(const ArthurParameter& psi) {
  std::vector<int> parts;
  for (const auto& s : psi.summands)
    for (int k = 0; k < dimension(s.rho); ++k) parts.push_back(s.a);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

GLRepDescriptor gl_arthur_rep(const ArthurParameter& psi) {
  if (psi.target.dual_family != DualFamily::GL || psi.target.galois_action != GaloisAction::Trivial)
    fail(ErrorCode::WrongCase, "gl_arthur_rep needs a GL(n,R) parameter");
  GLRepDescriptor d;
  for (const auto& s : psi.summands) {
    if (is_cchar(s.rho)) fail(ErrorCode::InvalidWeilRep, "W_C character in a GL(n,R) parameter");
    if (dimension(s.rho) == 2) {
      d.levi.push_back(2 * s.a);
      d.speh_blocks.push_back(s);
    }
  }
  for (const auto& s : psi.summands)
    if (dimension(s.rho) == 1) {
      d.levi.push_back(s.a);
      d.characters.push_back(s);
    }
  return d;
}

std::string GLRepDescriptor::str() const {
  std::string s = "Levi (";
  for (size_t i = 0; i < levi.size(); ++i) s += (i ? "," : "") + std::to_string(levi[i]);
  s += "); Speh [";
  for (size_t i = 0; i < speh_blocks.size(); ++i)
    s += (i ? ", " : "") + std::string("Speh(") + notation(speh_blocks[i].rho) + "," +
         std::to_string(speh_blocks[i].a) + ")";
  s += "]; chars [";
  for (size_t i = 0; i < characters.size(); ++i) s += (i ? ", " : "") + notation(characters[i].rho);
  return s + "]";
}

}  // namespace svt
