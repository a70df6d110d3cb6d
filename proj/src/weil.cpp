#include "svt/weil.hpp"

#include <cctype>

#include "svt/errors.hpp"

namespace svt {

WeilRep WeilRep::delta(int m) {
  WeilRep r;
  r.kind = WeilKind::TwoDim;
  r.m = m;
  r.validate();
  return r;
}

WeilRep WeilRep::sgn(int b) {
  WeilRep r;
  r.kind = WeilKind::OneDim;
  r.b = b;
  r.validate();
  return r;
}

WeilRep WeilRep::general_two(Rational s1, Rational s2) {
  WeilRep r;
  r.kind = WeilKind::GeneralTwoDim;
  r.s1 = s1;
  r.s2 = s2;
  r.validate();
  return r;
}

WeilRep WeilRep::general_one(int eps, Rational s) {
  WeilRep r;
  r.kind = WeilKind::GeneralOneDim;
  r.b = eps;
  r.s1 = s;
  r.validate();
  return r;
}

void WeilRep::validate() const {
  switch (kind) {
    case WeilKind::TwoDim:
      if (m < 1) fail(ErrorCode::InvalidWeilRep, "delta(m) needs m >= 1");
      break;
    case WeilKind::OneDim:
    case WeilKind::GeneralOneDim:
      if (b != 0 && b != 1) fail(ErrorCode::InvalidWeilRep, "sign exponent must be 0 or 1");
      break;
    case WeilKind::GeneralTwoDim: {
      Rational d = s1 - s2;
      if (d.denominator() != 1 || d <= 0)
        fail(ErrorCode::InvalidWeilRep, "delta(s1,s2) needs s1-s2 a positive integer");
      break;
    }
  }
}

const char* to_string(SelfDuality d) {
  switch (d) {
    case SelfDuality::Orthogonal: return "Orthogonal";
    case SelfDuality::Symplectic: return "Symplectic";
    case SelfDuality::NotSelfDual: return "NotSelfDual";
  }
  return "?";
}

int dimension(const WeilRep& r) {
  return (r.kind == WeilKind::TwoDim || r.kind == WeilKind::GeneralTwoDim) ? 2 : 1;
}

int dimension(const WeilCChar&) { return 1; }

int dimension(const Rho& r) {
  return std::visit([](const auto& x) { return dimension(x); }, r);
}

SelfDuality self_duality(const WeilRep& r) {
  switch (r.kind) {
    case WeilKind::TwoDim:
      return r.m % 2 ? SelfDuality::Symplectic : SelfDuality::Orthogonal;
    case WeilKind::OneDim:
      return SelfDuality::Orthogonal;
    case WeilKind::GeneralTwoDim: {
      if (r.s1 + r.s2 != 0) return SelfDuality::NotSelfDual;
      long long m = (r.s1 - r.s2).numerator();
      return m % 2 ? SelfDuality::Symplectic : SelfDuality::Orthogonal;
    }
    case WeilKind::GeneralOneDim:
      return r.s1 == 0 ? SelfDuality::Orthogonal : SelfDuality::NotSelfDual;
  }
  return SelfDuality::NotSelfDual;
}

std::vector<WeilCChar> restrict_to_WC(const WeilRep& r) {
  if (r.kind == WeilKind::TwoDim) return {{r.m}, {-r.m}};
  if (r.kind == WeilKind::OneDim) return {{0}};
  fail(ErrorCode::InvalidWeilRep, "restriction defined for delta(m) and sgn^b only");
}

std::string notation(const Rho& r) {
  if (auto c = std::get_if<WeilCChar>(&r)) return "chi(" + std::to_string(c->m) + ")";
  const auto& w = std::get<WeilRep>(r);
  switch (w.kind) {
    case WeilKind::TwoDim: return "d(" + std::to_string(w.m) + ")";
    case WeilKind::OneDim: return "sgn^" + std::to_string(w.b);
    case WeilKind::GeneralTwoDim: return "d(" + to_string(w.s1) + "," + to_string(w.s2) + ")";
    case WeilKind::GeneralOneDim: return "e(" + std::to_string(w.b) + "," + to_string(w.s1) + ")";
  }
  return "?";
}

static std::string strip(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

static int to_int(const std::string& s, const std::string& whole) {
  Rational r = parse_rational(s);
  if (r.denominator() != 1) fail(ErrorCode::ParseError, "expected an integer in '" + whole + "'");
  return static_cast<int>(r.numerator());
}

Rho parse_rho(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "Triv" || s == "triv" || s == "1") return WeilRep::triv();
  if (s == "sgn") return WeilRep::sgn(1);
  if (s.rfind("sgn^", 0) == 0) return WeilRep::sgn(to_int(s.substr(4), raw));
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    fail(ErrorCode::ParseError, "unrecognized representation '" + raw + "'");
  std::string head = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  auto comma = body.find(',');
  if (head == "chi") return WeilCChar{to_int(body, raw)};
  if (head == "d") {
    if (comma == std::string::npos) return WeilRep::delta(to_int(body, raw));
    return WeilRep::general_two(parse_rational(body.substr(0, comma)),
                                parse_rational(body.substr(comma + 1)));
  }
  if (head == "e" && comma != std::string::npos)
    return WeilRep::general_one(to_int(body.substr(0, comma), raw),
                                parse_rational(body.substr(comma + 1)));
  fail(ErrorCode::ParseError, "unrecognized representation '" + raw + "'");
}

bool is_cchar(const Rho& r) { return std::holds_alternative<WeilCChar>(r); }
const WeilRep& as_rep(const Rho& r) { return std::get<WeilRep>(r); }
const WeilCChar& as_cchar(const Rho& r) { return std::get<WeilCChar>(r); }

}  // namespace svt
