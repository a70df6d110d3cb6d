#pragma once

#include <string>
#include <vector>

namespace svt {

enum class GroupFamily { GeneralLinearReal, Unitary, SymplecticReal, SpecialOrthogonal };

// GL(n,R), U(p,q), Sp(2n,R) (stored by n), SO(p,q).
struct ClassicalGroup {
  GroupFamily family = GroupFamily::GeneralLinearReal;
  int n = 0;
  int p = 0;
  int q = 0;

  static ClassicalGroup GL(int n);
  static ClassicalGroup U(int p, int q);
  static ClassicalGroup Sp(int n);
  static ClassicalGroup SO(int p, int q);

  void validate() const;
  std::string name() const;
  bool operator==(const ClassicalGroup&) const = default;
};

enum class DualFamily { GL, Sp, SO };
enum class GaloisAction { Trivial, PinnedOuter };

struct LGroupDescriptor {
  DualFamily dual_family = DualFamily::GL;
  GaloisAction galois_action = GaloisAction::Trivial;
  int standard_dim = 0;

  int rank() const;
  std::string name() const;
  bool operator==(const LGroupDescriptor&) const = default;
};

LGroupDescriptor dual_lgroup(const ClassicalGroup& g);

const char* to_string(GaloisAction a);

// Factors of c-Levi subgroups. GLC(a) is GL(a,C) viewed as a real group,
// SpR uses a for Sp(2a,R).
enum class LeviFactorKind { GLC, GLR, U, SpR, SO };

struct LeviFactor {
  LeviFactorKind kind = LeviFactorKind::GLR;
  int a = 0;
  int b = 0;
  std::string name() const;
  bool operator==(const LeviFactor&) const = default;
  auto operator<=>(const LeviFactor&) const = default;
};

struct CLeviTemplate {
  GroupFamily family = GroupFamily::GeneralLinearReal;
  std::string form;
  std::string equation;
  std::vector<LeviFactor> factors;
  std::string name() const;
};

// Dimension bookkeeping of a factor list against the group.
bool bookkeeping_holds(const ClassicalGroup& g, const std::vector<LeviFactor>& factors);

// Every c-Levi shape of g up to reordering of the factors, for groups of
// rank at most 10.
std::vector<CLeviTemplate> c_levi_templates(const ClassicalGroup& g);

}  // namespace svt
