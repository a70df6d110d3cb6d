#include "svt/rational.hpp"

#include <cctype>

#include "svt/errors.hpp"

namespace svt {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

static long long parse_int(const std::string& s, const std::string& whole) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) fail(ErrorCode::ParseError, "empty number in '" + whole + "'");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad number '" + whole + "'");
  }
  if (pos != t.size()) fail(ErrorCode::ParseError, "bad number '" + whole + "'");
  return v;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, s));
  long long num = parse_int(s.substr(0, slash), s);
  long long den = parse_int(s.substr(slash + 1), s);
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

}  // namespace svt
