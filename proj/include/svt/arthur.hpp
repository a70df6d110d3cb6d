#pragma once

#include <string>
#include <vector>

#include "svt/groups.hpp"
#include "svt/rational.hpp"
#include "svt/weil.hpp"

namespace svt {

struct ArthurSummand {
  Rho rho;
  int a = 1;  // SL(2) factor R[a]
  bool operator==(const ArthurSummand&) const = default;
};

struct ArthurParameter {
  LGroupDescriptor target;
  std::vector<ArthurSummand> summands;

  int dimension() const;
  bool operator==(const ArthurParameter&) const = default;
};

std::string notation(const ArthurSummand& s);
std::string notation(const ArthurParameter& psi);

// "d(3)xR[2] + sgn^1 xR[1]", whitespace-insensitive.
std::vector<ArthurSummand> parse_summands(const std::string& s);
ArthurParameter parse_psi(const LGroupDescriptor& target, const std::string& s);

// Canonical order: two-dimensional and W_C summands first, by decreasing |m|
// with chi_m before chi_{-m}, then decreasing a; one-dimensional summands
// last by decreasing a.
bool canonical_less(const ArthurSummand& x, const ArthurSummand& y);
void canonicalize(ArthurParameter& psi);

struct Violation {
  int index = -1;  // -1 for conditions on the whole parameter
  std::string rule;
  std::string detail;
};

std::vector<Violation> validate_good_parity(const ArthurParameter& psi);
bool is_good_parity(const ArthurParameter& psi);

bool is_multiplicity_free(const ArthurParameter& psi);

// Rank R of A(psi) = (Z/2Z)^R.
int component_group(const ArthurParameter& psi);

struct InfChar {
  std::vector<Rational> entries;  // sorted decreasing
  DualFamily family = DualFamily::GL;
  int standard_dim = 0;

  bool is_regular() const;
  bool is_integral() const;
  bool is_half_integral_nonintegral() const;
  std::string str() const;
};

InfChar inf_char(const ArthurParameter& psi);

std::vector<int> sl2_partition(const ArthurParameter& psi);

struct GLRepDescriptor {
  std::vector<int> levi;
  std::vector<ArthurSummand> speh_blocks;
  std::vector<ArthurSummand> characters;
  std::string str() const;
};

GLRepDescriptor gl_arthur_rep(const ArthurParameter& psi);

}  // namespace svt
