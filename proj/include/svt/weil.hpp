#pragma once

#include <string>
#include <variant>
#include <vector>

#include "svt/rational.hpp"

namespace svt {

// chi_m(z) = (z/zbar)^{m/2}, indexed by the integer m.
struct WeilCChar {
  int m = 0;
  bool operator==(const WeilCChar&) const = default;
};

enum class WeilKind { TwoDim, OneDim, GeneralTwoDim, GeneralOneDim };

struct WeilRep {
  WeilKind kind = WeilKind::OneDim;
  int m = 0;  // TwoDim: delta(m/2,-m/2)
  int b = 0;  // OneDim sgn^b, GeneralOneDim epsilon
  Rational s1 = 0;
  Rational s2 = 0;  // GeneralOneDim keeps s in s1

  static WeilRep delta(int m);
  static WeilRep sgn(int b = 1);
  static WeilRep triv() { return sgn(0); }
  static WeilRep general_two(Rational s1, Rational s2);
  static WeilRep general_one(int eps, Rational s);

  void validate() const;
  bool operator==(const WeilRep&) const = default;
};

using Rho = std::variant<WeilRep, WeilCChar>;

enum class SelfDuality { Orthogonal, Symplectic, NotSelfDual };

const char* to_string(SelfDuality d);

int dimension(const WeilRep& r);
int dimension(const WeilCChar&);
int dimension(const Rho& r);

SelfDuality self_duality(const WeilRep& r);

std::vector<WeilCChar> restrict_to_WC(const WeilRep& r);

// "d(3)", "sgn^1", "chi(-2)", "d(3/2,-1/2)", "e(1,1/2)".
std::string notation(const Rho& r);
Rho parse_rho(const std::string& s);

bool is_cchar(const Rho& r);
const WeilRep& as_rep(const Rho& r);
const WeilCChar& as_cchar(const Rho& r);

}  // namespace svt
