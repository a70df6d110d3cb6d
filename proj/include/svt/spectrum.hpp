#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svt/arthur.hpp"
#include "svt/rational.hpp"
#include "svt/symspaces.hpp"

namespace svt {

using EpsCharacter = std::vector<int>;  // entries +1 / -1

std::string eps_str(const EpsCharacter& e);
EpsCharacter parse_eps(const std::string& s);  // "(-1,+1,1)" or "-++"

// Number of epsilon slots: one per distinct summand.
int eps_length(const ArthurParameter& psi);

// Indexing of the unitary pair conditions (cases 3, 4). Only the adjacent
// pairing (chi_m1, chi_-m1, chi_m2, chi_-m2, ...) is implemented.
enum class PairConvention { Adjacent };

struct SpectrumOptions {
  PairConvention pairing = PairConvention::Adjacent;
  bool swap_inner_form = false;  // exchanges the roles of r and s
};

bool eps_valid(const SymmetricSpace& x, const ArthurParameter& psi, const EpsCharacter& eps,
               const SpectrumOptions& opt = {});

// Slots the criterion leaves free.
std::vector<int> free_slots(const SymmetricSpace& x, const ArthurParameter& psi);

struct EpsEnumeration {
  std::vector<EpsCharacter> accepted;  // free slots pinned to +1
  std::vector<int> free;
  bool flagged = false;  // repeated summand counted once
  std::string flag_reason;
  // Case 3 with p+q odd: verbatim count against the counting argument.
  std::optional<long long> expected_count;
  std::string discrepancy;
};

EpsEnumeration enumerate_eps(const SymmetricSpace& x, const ArthurParameter& psi, const SpectrumOptions& opt = {});
EpsEnumeration enumerate_eps_serial(const SymmetricSpace& x, const ArthurParameter& psi,
                                    const SpectrumOptions& opt = {});

// Candidates whose shape matches psi and whose criterion accepts eps. More
// than one raises MultipleOwners.
std::optional<SymmetricSpace> disjoint_owner(const ArthurParameter& psi, const EpsCharacter& eps,
                                             const std::vector<SymmetricSpace>& candidates);

// Registry instances (parameters <= bound) on group g whose shape matches psi.
std::vector<SymmetricSpace> matching_spaces(const ClassicalGroup& g, const ArthurParameter& psi, int bound);

struct MinKType {
  int p = 0;
  std::vector<Rational> mu_tilde;
  std::vector<Rational> mu;
  std::vector<Rational> mu_match;
  std::vector<Rational> mu_other;
};

void check_case2_lambda(const std::vector<Rational>& lambda);
MinKType case2_min_ktype(const std::vector<Rational>& lambda, const EpsCharacter& eps);

enum class Case2Variant { OFull, SOOnly };
bool case2_is_ds(const std::vector<Rational>& lambda, const EpsCharacter& eps, Case2Variant v);

// eps_i = (-1)^(lambda_i + (n-1)/2), or the opposite normalization.
EpsCharacter case2_formula_eps(const std::vector<Rational>& lambda, bool swapped = false);
int case2_p0(const std::vector<Rational>& lambda);

enum class Case13Chi { Trivial, SgnDet };
bool case13_is_ds(const std::vector<int>& lambda, Case13Chi chi);
bool case13_root_oracle(const std::vector<int>& lambda, Case13Chi chi);

}  // namespace svt
