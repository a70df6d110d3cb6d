#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "svt/errors.hpp"
#include "svt/io.hpp"

using namespace svt;

namespace {

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::ostringstream text;

  void flush() const {
    if (as_json) std::cout << doc.dump(2) << "\n";
    else std::cout << text.str();
  }
};

std::string space_line(const SymmetricSpace& x) {
  return x.spec() + "  " + x.name() + "  G=" + x.group().name() + "  rank=" + std::to_string(rank(x));
}

int list_spaces(Output& o) {
  json rows = json::array();
  for (auto& r : registry()) {
    rows.push_back(to_json(r));
    o.text << r.case_id << "  " << r.space << "  [" << r.constraints << "]  g_X=" << r.g_check << "  l_X=" << r.l_check;
    if (!r.note.empty()) o.text << "  (" << r.note << ")";
    o.text << "\n";
  }
  o.doc["spaces"] = rows;
  return 0;
}

int validate_space(Output& o, const std::string& spec) {
  auto x = parse_space(spec);
  x.validate();
  o.doc = to_json(x);
  o.doc["valid"] = true;
  o.text << "valid  " << space_line(x) << "\n";
  return 0;
}

int rank_cmd(Output& o, const std::string& spec) {
  auto x = parse_space(spec);
  x.validate();
  o.doc = {{"space", x.spec()}, {"rank", rank(x)}, {"g_check", dual_data(x).g_check.name()}};
  o.text << x.spec() << "  rank=" << rank(x) << "\n";
  return 0;
}

int dual_data_cmd(Output& o, const std::string& spec, Case3Variant v) {
  auto x = parse_space(spec);
  x.validate();
  auto d = dual_data(x);
  auto amb = dual_lgroup(x.group());
  auto part = principal_partition(d, amb);
  auto com = commutant(amb, part);
  auto sv = sv_dual(x, v);
  auto phi = sv_phi(x, v);
  auto levi = real_levi(x);
  o.doc = {{"space", to_json(x)},         {"ambient", to_json(amb)},        {"g_check", d.g_check.name()},
           {"l_check", d.l_check_name()}, {"partition", to_json(part)},     {"commutant", to_json(com)},
           {"sv_dual", to_json(sv)},      {"phi", to_json(phi)},            {"real_levi", to_json(levi)}};
  o.text << space_line(x) << "\n"
         << "  ^LG       " << amb.name() << "\n"
         << "  g_X       " << d.g_check.name() << "\n"
         << "  l_X       " << d.l_check_name() << "\n"
         << "  partition " << part.str() << "\n"
         << "  commutant " << com.str() << "\n"
         << "  ^LG_X     " << sv.name() << "\n"
         << "  phi       " << phi.describe() << "\n"
         << "  L         " << levi.L_name() << "\n"
         << "  L cap H   " << levi.L_cap_H_name() << "\n";
  for (auto& a : levi.alt_readings) o.text << "  reading   " << a << "\n";
  return 0;
}

int gen_params(Output& o, const std::string& spec, int height) {
  auto x = parse_space(spec);
  x.validate();
  auto ps = generate_ds_parameters(x, height);
  json arr = json::array();
  for (auto& psi : ps) {
    arr.push_back(notation(psi));
    o.text << notation(psi) << "\n";
  }
  o.doc = {{"space", x.spec()}, {"height", height}, {"count", ps.size()}, {"parameters", arr}};
  return 0;
}

ArthurParameter psi_for(const SymmetricSpace& x, const std::string& psi_arg) {
  return parse_psi(dual_lgroup(x.group()), inline_or_file(psi_arg));
}

int factorize_cmd(Output& o, const std::string& spec, const std::string& psi_arg, Case3Variant v) {
  auto x = parse_space(spec);
  x.validate();
  auto f = factorize(psi_for(x, psi_arg), x, v);
  o.doc = to_json(f);
  o.text << "psi      " << notation(f.psi) << "\n";
  o.text << "phi_d    ";
  for (size_t i = 0; i < f.phi_d.size(); ++i) o.text << (i ? " + " : "") << notation(f.phi_d[i]);
  o.text << "\n^LG_X    " << f.phi.source.name() << "\n";
  o.text << "phi      " << f.phi.describe() << "\n";
  o.text << "phi.phi_d " << o.doc["recomposed"].get<std::string>() << "\n";
  return 0;
}

int packet(Output& o, const std::string& spec, const std::string& psi_arg, bool swap) {
  auto x = parse_space(spec);
  x.validate();
  auto psi = psi_for(x, psi_arg);
  SpectrumOptions opt;
  opt.swap_inner_form = swap;
  auto e = enumerate_eps(x, psi, opt);
  o.doc = to_json(e);
  o.doc["space"] = x.spec();
  o.doc["psi"] = notation(psi);
  o.doc["R"] = eps_length(psi);
  for (auto& a : e.accepted) o.text << eps_str(a) << "\n";
  o.text << "# accepted=" << e.accepted.size() << " R=" << eps_length(psi);
  if (!e.free.empty()) {
    o.text << " free_slots=";
    for (size_t i = 0; i < e.free.size(); ++i) o.text << (i ? "," : "") << e.free[i];
  }
  o.text << "\n";
  if (e.flagged) o.text << "# flag: " << e.flag_reason << "\n";
  if (!e.discrepancy.empty()) o.text << "# discrepancy: " << e.discrepancy << "\n";
  return 0;
}

int owner(Output& o, const std::string& group, const std::string& psi_arg, const std::string& eps_arg, int bound) {
  auto g = parse_group(group);
  auto psi = parse_psi(dual_lgroup(g), inline_or_file(psi_arg));
  auto eps = parse_eps(eps_arg);
  auto cands = matching_spaces(g, psi, bound);
  json cj = json::array();
  for (auto& c : cands) cj.push_back(c.spec());
  auto own = disjoint_owner(psi, eps, cands);
  o.doc = {{"group", g.name()}, {"psi", notation(psi)}, {"eps", eps_str(eps)}, {"candidates", cj},
           {"owner", own ? json(own->spec()) : json(nullptr)}};
  o.text << "candidates " << cands.size() << "\n";
  o.text << "owner " << (own ? own->spec() : std::string("none")) << "\n";
  return 0;
}

int case2(Output& o, const std::string& lambda_arg, const std::string& eps_arg) {
  auto lambda = parse_rational_list(lambda_arg);
  check_case2_lambda(lambda);
  int n = static_cast<int>(lambda.size());
  o.doc["lambda"] = to_json(lambda);
  if (!eps_arg.empty()) {
    auto eps = parse_eps(eps_arg);
    auto k = case2_min_ktype(lambda, eps);
    bool so = case2_is_ds(lambda, eps, Case2Variant::SOOnly);
    bool of = case2_is_ds(lambda, eps, Case2Variant::OFull);
    o.doc["eps"] = eps_str(eps);
    o.doc["min_ktype"] = to_json(k);
    o.doc["ds_so_quotient"] = so;
    o.doc["ds_o_quotient"] = of;
    o.text << "p=" << k.p << " mu_tilde=(";
    for (int i = 0; i < n; ++i) o.text << (i ? "," : "") << to_string(k.mu_tilde[i]);
    o.text << ") U(p,q)/SO: " << (so ? "ds" : "no") << "  U(p,q)/O: " << (of ? "ds" : "no") << "\n";
    return 0;
  }
  json acc = json::array();
  for (int mask = 0; mask < (1 << n); ++mask) {
    EpsCharacter eps(n);
    for (int i = 0; i < n; ++i) eps[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
    if (!case2_is_ds(lambda, eps, Case2Variant::SOOnly)) continue;
    int p = case2_min_ktype(lambda, eps).p;
    acc.push_back({{"p", p}, {"eps", eps_str(eps)}});
    o.text << "p=" << p << " eps=" << eps_str(eps) << "\n";
  }
  o.doc["accepted"] = acc;
  if (n % 2 == 1) {
    o.doc["formula_eps"] = eps_str(case2_formula_eps(lambda));
    o.doc["p0"] = case2_p0(lambda);
    o.text << "# formula eps=" << eps_str(case2_formula_eps(lambda)) << " p0=" << case2_p0(lambda) << "\n";
  }
  return 0;
}

int case13(Output& o, const std::string& lambda_arg) {
  auto lambda = parse_int_list(lambda_arg);
  json rows = json::array();
  for (auto chi : {Case13Chi::Trivial, Case13Chi::SgnDet}) {
    const char* name = chi == Case13Chi::Trivial ? "Trivial" : "SgnDet";
    bool a = case13_is_ds(lambda, chi), b = case13_root_oracle(lambda, chi);
    rows.push_back({{"chi", name}, {"is_ds", a}, {"root_oracle", b}});
    o.text << name << ": " << (a ? "ds" : "no") << " (root oracle " << (b ? "ds" : "no") << ")\n";
  }
  o.doc = {{"lambda", lambda}, {"results", rows}};
  return 0;
}

int check_matrices(Output& o, int max_size) {
  if (max_size < 1) fail(ErrorCode::SizeViolation, "--max-size must be positive");
  auto r = check_all(max_size);
  o.doc = to_json(r);
  for (auto& c : r.checks) {
    o.text << c.id << " " << c.params << " " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) o.text << " delta=" << c.delta;
    o.text << "\n";
  }
  o.text << "# total=" << r.checks.size() << " failures=" << r.failures() << "\n";
  return r.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arthur parameters and epsilon characters for discrete series of classical symmetric spaces"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string space, psi, eps, group, lambda, variant = "esp";
  int height = 9, bound = 6, max_size = 8;
  bool swap = false;

  auto* ls = app.add_subcommand("list-spaces", "Registry of the 13 classical symmetric spaces");
  auto* vs = app.add_subcommand("validate-space", "Check a space spec");
  vs->add_option("--space", space, "e.g. case5:p=1,q=1")->required();
  auto* rk = app.add_subcommand("rank", "Rank of the dual group of a space");
  rk->add_option("--space", space)->required();
  auto* dd = app.add_subcommand("dual-data", "Dual group, commutant, phi and real Levi data");
  dd->add_option("--space", space)->required();
  dd->add_option("--variant", variant, "case 3, n odd")->check(CLI::IsMember({"esp", "so-even"}));
  auto* gp = app.add_subcommand("gen-params", "Discrete-series Arthur parameters of a space");
  gp->add_option("--space", space)->required();
  gp->add_option("--height", height, "bound on |m|")->check(CLI::Range(0, 64));
  auto* fz = app.add_subcommand("factorize", "Factor psi through the dual group of a space");
  fz->add_option("--space", space)->required();
  fz->add_option("--psi", psi, "inline summands or a file")->required();
  fz->add_option("--variant", variant)->check(CLI::IsMember({"esp", "so-even"}));
  auto* pk = app.add_subcommand("packet", "Accepted epsilon characters");
  pk->add_option("--space", space)->required();
  pk->add_option("--psi", psi)->required();
  pk->add_flag("--swap-inner-form", swap, "exchange r and s");
  auto* ow = app.add_subcommand("owner", "Which registry family owns (psi, eps)");
  ow->add_option("--group", group, "e.g. U(2,2)")->required();
  ow->add_option("--psi", psi)->required();
  ow->add_option("--eps", eps)->required();
  ow->add_option("--bound", bound, "parameter bound for candidate spaces")->check(CLI::Range(1, 12));
  auto* c2 = app.add_subcommand("case2", "U(p,q)/O(p,q) discrete series from lambda");
  c2->add_option("--lambda", lambda)->required();
  c2->add_option("--eps", eps);
  auto* c13 = app.add_subcommand("case13", "Sp(2n,R)/GL(n,R) discrete series from lambda");
  c13->add_option("--lambda", lambda)->required();
  auto* cm = app.add_subcommand("check-matrices", "Exact matrix identity suite");
  cm->add_option("--max-size", max_size)->check(CLI::Range(1, 24));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output o;
  o.as_json = format == "json";
  Case3Variant v = variant == "so-even" ? Case3Variant::SOEvenSemidirect : Case3Variant::ESpSemidirect;
  int rc = 0;
  try {
    if (*ls) rc = list_spaces(o);
    else if (*vs) rc = validate_space(o, space);
    else if (*rk) rc = rank_cmd(o, space);
    else if (*dd) rc = dual_data_cmd(o, space, v);
    else if (*gp) rc = gen_params(o, space, height);
    else if (*fz) rc = factorize_cmd(o, space, psi, v);
    else if (*pk) rc = packet(o, space, psi, swap);
    else if (*ow) rc = owner(o, group, psi, eps, bound);
    else if (*c2) rc = case2(o, lambda, eps);
    else if (*c13) rc = case13(o, lambda);
    else if (*cm) rc = check_matrices(o, max_size);
  } catch (const Error& e) {
    if (o.as_json) std::cout << json{{"error", code_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return is_invariant_breach(e.code()) ? 1 : 2;
  }
  o.flush();
  return rc;
}
