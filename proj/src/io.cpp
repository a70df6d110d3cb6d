#include "svt/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "svt/errors.hpp"

namespace svt {

namespace {

std::string strip(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

std::vector<std::string> split_list(const std::string& raw) {
  std::string t = strip(raw);
  if (!t.empty() && (t.front() == '(' || t.front() == '[')) t = t.substr(1);
  if (!t.empty() && (t.back() == ')' || t.back() == ']')) t.pop_back();
  std::vector<std::string> out;
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(ErrorCode::ParseError, "empty entry in '" + raw + "'");
    out.push_back(item);
  }
  return out;
}

}  // namespace

ClassicalGroup parse_group(const std::string& raw) {
  static const std::regex re(R"((GL|U|Sp|SO)\((\d+)(?:,(\d+))?(?:,R)?\))");
  std::smatch m;
  std::string t = strip(raw);
  if (!std::regex_match(t, m, re)) fail(ErrorCode::ParseError, "cannot parse group '" + raw + "'");
  std::string fam = m[1];
  int a = std::stoi(m[2]);
  bool two = m[3].matched;
  int b = two ? std::stoi(m[3]) : 0;
  ClassicalGroup g;
  if (fam == "GL" && !two) g = ClassicalGroup::GL(a);
  else if (fam == "U" && two) g = ClassicalGroup::U(a, b);
  else if (fam == "Sp" && !two) {
    if (a % 2 != 0) fail(ErrorCode::InvalidGroup, "Sp(2n,R) needs an even size: '" + raw + "'");
    g = ClassicalGroup::Sp(a / 2);
  } else if (fam == "SO" && two) g = ClassicalGroup::SO(a, b);
  else fail(ErrorCode::ParseError, "wrong number of indices in '" + raw + "'");
  g.validate();
  return g;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (auto& x : split_list(s)) out.push_back(parse_rational(x));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (auto& x : split_list(s)) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(x, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "not an integer: '" + x + "'");
    }
    if (used != x.size()) fail(ErrorCode::ParseError, "not an integer: '" + x + "'");
    out.push_back(v);
  }
  return out;
}

std::string inline_or_file(const std::string& s) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(s, ec)) return s;
  std::ifstream in(s);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json to_json(const ClassicalGroup& g) {
  return {{"name", g.name()}, {"dual", dual_lgroup(g).name()}};
}

json to_json(const LGroupDescriptor& l) {
  const char* fam = l.dual_family == DualFamily::GL ? "GL" : l.dual_family == DualFamily::Sp ? "Sp" : "SO";
  return {{"name", l.name()},
          {"family", fam},
          {"standard_dim", l.standard_dim},
          {"galois_action", to_string(l.galois_action)},
          {"rank", l.rank()}};
}

json to_json(const SymmetricSpace& x) {
  json params = json::object();
  for (auto& [k, v] : x.params()) params[k] = v;
  return {{"spec", x.spec()}, {"case", x.case_id}, {"name", x.name()}, {"params", params},
          {"group", x.group().name()}, {"rank", rank(x)}};
}

json to_json(const RegistryRow& r) {
  return {{"case", r.case_id}, {"space", r.space},   {"params", r.params}, {"constraints", r.constraints},
          {"g_check", r.g_check}, {"l_check", r.l_check}, {"note", r.note}};
}

json to_json(const ArthurSummand& s) {
  return {{"rho", notation(s.rho)}, {"a", s.a}, {"dim", dimension(s.rho) * s.a}};
}

json to_json(const ArthurParameter& psi) {
  json sums = json::array();
  for (auto& s : psi.summands) sums.push_back(to_json(s));
  return {{"target", psi.target.name()}, {"notation", notation(psi)}, {"summands", sums},
          {"dimension", psi.dimension()}};
}

json to_json(const PartitionWithMult& p) {
  json mult = json::object();
  for (auto& [part, m] : p.mult) mult[std::to_string(part)] = m;
  return {{"parts", p.parts()}, {"multiplicities", mult}, {"total", p.total()}, {"str", p.str()}};
}

json to_json(const CommutantDescriptor& c) {
  json f = json::array();
  for (auto& x : c.factors) f.push_back(x.name());
  return {{"factors", f}, {"det_condition", c.det_condition}, {"weil_action", to_string(c.weil_action)},
          {"str", c.str()}};
}

json to_json(const SVDualDescriptor& d) {
  json j = {{"name", d.name()}, {"standard_dim", d.standard_dim}, {"rank", d.rank()},
            {"galois_action", to_string(d.galois_action)}, {"is_lgroup_of_G", d.is_lgroup_of_G}};
  auto vname = [](Case3Variant v) { return v == Case3Variant::ESpSemidirect ? "esp" : "so-even"; };
  if (d.variant) j["variant"] = vname(*d.variant);
  if (!d.alternatives.empty()) {
    json a = json::array();
    for (auto v : d.alternatives) a.push_back(vname(v));
    j["alternatives"] = a;
  }
  return j;
}

json to_json(const PhiDescriptor& phi) {
  json tails = json::array();
  for (auto& t : phi.tails) tails.push_back(notation(t));
  return {{"source", to_json(phi.source)},
          {"twist", phi.twist == PhiTwist::SgnTwisted ? "sgn" : "none"},
          {"main_a", phi.main_a},
          {"split_pairs", phi.split_pairs},
          {"chi_shift", phi.chi_shift},
          {"one_dim_twist", phi.one_dim_twist},
          {"tails", tails},
          {"describe", phi.describe()}};
}

json to_json(const FactorizationResult& f) {
  json d = json::array();
  for (auto& r : f.phi_d) d.push_back(notation(r));
  ArthurParameter recomposed{f.psi.target, compose(f.phi, f.phi_d)};
  return {{"space", f.space.spec()}, {"psi", to_json(f.psi)}, {"phi_d", d},
          {"phi", to_json(f.phi)},   {"variant", f.variant},  {"recomposed", notation(recomposed)}};
}

json to_json(const EpsEnumeration& e) {
  json acc = json::array();
  for (auto& x : e.accepted) acc.push_back(eps_str(x));
  json j = {{"accepted", acc}, {"count", e.accepted.size()}, {"free_slots", e.free}, {"flagged", e.flagged}};
  if (e.flagged) j["flag_reason"] = e.flag_reason;
  if (e.expected_count) j["expected_count"] = *e.expected_count;
  if (!e.discrepancy.empty()) j["discrepancy"] = e.discrepancy;
  return j;
}

json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const MinKType& m) {
  return {{"p", m.p}, {"mu_tilde", to_json(m.mu_tilde)}, {"mu", to_json(m.mu)},
          {"mu_match", to_json(m.mu_match)}, {"mu_other", to_json(m.mu_other)}};
}

json to_json(const RealLevi& l) {
  json j = {{"L", l.L_name()}, {"L_cap_H", l.L_cap_H_name()}};
  if (!l.alt_readings.empty()) j["alt_readings"] = l.alt_readings;
  return j;
}

json to_json(const IdentityCheck& c) {
  json j = {{"id", c.id}, {"params", c.params}, {"status", c.pass ? "pass" : "fail"}};
  if (!c.pass) j["delta"] = c.delta;
  return j;
}

json to_json(const MatrixReport& r) {
  json checks = json::array();
  for (auto& c : r.checks) checks.push_back(to_json(c));
  return {{"total", r.checks.size()}, {"failures", r.failures()}, {"checks", checks}};
}

}  // namespace svt
