#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svt/groups.hpp"
#include "svt/rational.hpp"

namespace svt {

// Parameters by case:
//   1: n,p   2: p,q   3: r,s,rp,sp   4: n   5: p,q   6: n
//   7, 8: r,s,rp,sp   9: p,q   10: n   11: n,p   12: n   13: n
struct SymmetricSpace {
  int case_id = 0;
  int n = 0, p = 0, q = 0;
  int r = 0, s = 0, rp = 0, sp = 0;

  static SymmetricSpace make(int case_id, int a, int b = 0, int c = 0, int d = 0);

  void validate() const;
  bool is_valid() const;
  ClassicalGroup group() const;
  std::string name() const;
  std::string spec() const;  // "case3:r=1,s=0,rp=1,sp=2"
  std::vector<std::pair<std::string, int>> params() const;

  // Rank parameter of the ambient dual group: the n of the registry row.
  int big_n() const;
  // r+s for cases 3, 7, 8.
  int k() const { return r + s; }

  bool operator==(const SymmetricSpace&) const = default;
};

// "case5:p=1,q=1"
SymmetricSpace parse_space(const std::string& s);

enum class LieType { gl, sp, so };

struct LieFactor {
  LieType type = LieType::gl;
  int dim = 0;  // gl(dim), sp(dim), so(dim)
  int rank() const;
  std::string name() const;
  bool operator==(const LieFactor&) const = default;
};

struct DualData {
  LieFactor g_check;
  std::vector<int> l_gl;            // sizes of the gl factors of l_check
  std::optional<LieFactor> l_tail;  // classical (or gl, for GL ambients) tail
  std::string l_check_name() const;
};

DualData dual_data(const SymmetricSpace& x);

int rank(const SymmetricSpace& x);

struct RegistryRow {
  int case_id = 0;
  std::string space;
  std::vector<std::string> params;
  std::string constraints;
  std::string g_check;
  std::string l_check;
  std::string note;
};

const std::vector<RegistryRow>& registry();

// Instances of a case with every parameter in [0, bound].
std::vector<SymmetricSpace> instances(int case_id, int bound);

enum class RealFactorKind { U, SU, Cx, Rx, GLR, SpR, SO, PM1 };

struct RealFactor {
  RealFactorKind kind = RealFactorKind::U;
  int a = 0;
  int b = 0;
  int mult = 1;
  std::string name() const;
  bool operator==(const RealFactor&) const = default;
};

struct RealLevi {
  std::vector<RealFactor> L;
  std::vector<RealFactor> L_cap_H;
  std::vector<std::string> alt_readings;
  std::string L_name() const;
  std::string L_cap_H_name() const;
};

RealLevi real_levi(const SymmetricSpace& x);

// Complexified dual factors of L as Lie factors (zero-rank factors dropped).
std::vector<LieFactor> complexified_dual(const RealLevi& l);
// Factors of l_check in the same normal form.
std::vector<LieFactor> l_check_factors(const DualData& d);

struct CharLattice {
  std::string coordinates;
  std::string trivial_on_LH;
  int tuple_length = 0;
  bool sign_slot = false;
};

CharLattice levi_char_constraints(const SymmetricSpace& x);

// Whether pi_L(t; eps) is trivial on L cap H.
bool char_trivial_on_LH(const SymmetricSpace& x, const std::vector<Rational>& t, int eps = 0);

struct RankOneFixture {
  int case_id = 0;
  SymmetricSpace space;
  std::string label;
  std::string L;
  std::string L_cap_H;
};

const std::vector<RankOneFixture>& rank_one_fixtures();

}  // namespace svt
