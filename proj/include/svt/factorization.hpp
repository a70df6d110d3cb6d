#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svt/arthur.hpp"
#include "svt/groups.hpp"
#include "svt/symspaces.hpp"

namespace svt {

struct PartitionWithMult {
  std::map<int, int> mult;  // part size -> multiplicity
  LGroupDescriptor ambient;

  int total() const;
  std::vector<int> parts() const;  // decreasing
  std::string str() const;
  bool operator==(const PartitionWithMult&) const = default;
};

PartitionWithMult principal_partition(const DualData& d, const LGroupDescriptor& ambient);

enum class CommutantKind { GL, Sp, O, SO, FinitePM1, SO2 };
enum class WeilAction { Direct, SemiDirect };

const char* to_string(WeilAction a);

struct CommutantFactor {
  CommutantKind kind = CommutantKind::GL;
  int dim = 0;  // GL(dim), Sp(dim), O(dim), SO(dim)
  std::string name() const;
  bool operator==(const CommutantFactor&) const = default;
};

struct CommutantDescriptor {
  std::vector<CommutantFactor> factors;
  bool det_condition = false;
  WeilAction weil_action = WeilAction::Direct;
  std::string str() const;
  bool operator==(const CommutantDescriptor&) const = default;
};

CommutantDescriptor commutant(const LGroupDescriptor& ambient, const PartitionWithMult& part);

// Case 3 with n odd has two admissible dual groups.
enum class Case3Variant { ESpSemidirect, SOEvenSemidirect };

struct SVDualDescriptor {
  DualFamily family = DualFamily::Sp;
  int standard_dim = 0;
  GaloisAction galois_action = GaloisAction::Trivial;
  bool is_lgroup_of_G = false;  // the morphism phi is the identity
  std::optional<Case3Variant> variant;
  std::vector<Case3Variant> alternatives;
  int rank() const;
  std::string name() const;
};

SVDualDescriptor sv_dual(const SymmetricSpace& x, Case3Variant v = Case3Variant::ESpSemidirect);

enum class PhiTwist { Untwisted, SgnTwisted };

// How phi sends a discrete parameter of the dual group of X to psi.
struct PhiDescriptor {
  SVDualDescriptor source;
  PhiTwist twist = PhiTwist::Untwisted;
  int main_a = 1;           // R[a] attached to the image of phi_d
  bool split_pairs = false;  // delta(m) -> chi(m) + chi(-m) (unitary targets)
  int chi_shift = 0;        // chi(m) -> chi(m + shift)
  int one_dim_twist = 0;    // sgn^b -> sgn^(b + twist)
  std::vector<ArthurSummand> tails;
  SelfDuality d_self_duality = SelfDuality::Symplectic;
  bool d_is_unitary = false;  // phi_d is a W_C character sum
  std::string describe() const;
};

PhiDescriptor sv_phi(const SymmetricSpace& x, Case3Variant v = Case3Variant::ESpSemidirect);

// phi o phi_d, in canonical order.
std::vector<ArthurSummand> compose(const PhiDescriptor& phi, const std::vector<Rho>& phi_d);

std::vector<ArthurParameter> generate_ds_parameters(const SymmetricSpace& x, int height);

struct FactorizationResult {
  SymmetricSpace space;
  ArthurParameter psi;
  std::vector<Rho> phi_d;
  PhiDescriptor phi;
  std::string variant;
};

FactorizationResult factorize(const ArthurParameter& psi, const SymmetricSpace& x,
                              Case3Variant v = Case3Variant::ESpSemidirect);

}  // namespace svt
