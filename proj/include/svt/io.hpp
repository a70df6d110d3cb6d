#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "svt/arthur.hpp"
#include "svt/factorization.hpp"
#include "svt/groups.hpp"
#include "svt/matrixlab.hpp"
#include "svt/rational.hpp"
#include "svt/spectrum.hpp"
#include "svt/symspaces.hpp"

namespace svt {

using json = nlohmann::ordered_json;

// "GL(3,R)", "U(2,1)", "Sp(4,R)", "SO(3,2)"; the ",R" suffix is optional.
ClassicalGroup parse_group(const std::string& s);
// "2,1,-1" or "(2, 1, -1)"; entries may be fractions.
std::vector<Rational> parse_rational_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
// Reads the file when s names one, otherwise returns s.
std::string inline_or_file(const std::string& s);

json to_json(const ClassicalGroup& g);
json to_json(const LGroupDescriptor& l);
json to_json(const SymmetricSpace& x);
json to_json(const RegistryRow& r);
json to_json(const ArthurSummand& s);
json to_json(const ArthurParameter& psi);
json to_json(const PartitionWithMult& p);
json to_json(const CommutantDescriptor& c);
json to_json(const SVDualDescriptor& d);
json to_json(const PhiDescriptor& phi);
json to_json(const FactorizationResult& f);
json to_json(const EpsEnumeration& e);
json to_json(const MinKType& m);
json to_json(const RealLevi& l);
json to_json(const IdentityCheck& c);
json to_json(const MatrixReport& r);
json to_json(const std::vector<Rational>& v);

}  // namespace svt
