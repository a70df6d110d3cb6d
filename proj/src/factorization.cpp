#include "svt/factorization.hpp"

#include <algorithm>
#include <functional>

#include "svt/errors.hpp"

namespace svt {

namespace {

std::string I(int v) { return std::to_string(v); }
bool odd(int v) { return ((v % 2) + 2) % 2 == 1; }

ArthurSummand S(Rho rho, int a) { return {std::move(rho), a}; }

}  // namespace

int PartitionWithMult::total() const {
  int t = 0;
  for (const auto& [a, m] : mult) t += a * m;
  return t;
}

std::vector<int> PartitionWithMult::parts() const {
  std::vector<int> out;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    for (int i = 0; i < it->second; ++i) out.push_back(it->first);
  return out;
}

std::string PartitionWithMult::str() const {
  std::string s = "(";
  bool first = true;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (!first) s += ",";
    first = false;
    s += I(it->first);
    if (it->second > 1) s += "^" + I(it->second);
  }
  return s + ")";
}

PartitionWithMult principal_partition(const DualData& d, const LGroupDescriptor& ambient) {
  PartitionWithMult out;
  out.ambient = ambient;
  bool gl_ambient = ambient.dual_family == DualFamily::GL;
  auto add = [&](int part, int times = 1) {
    if (part > 0) out.mult[part] += times;
  };
  for (int g : d.l_gl) add(g, gl_ambient ? 1 : 2);
  if (d.l_tail) {
    const auto& t = *d.l_tail;
    switch (t.type) {
      case LieType::gl: add(t.dim, gl_ambient ? 1 : 2); break;
      case LieType::sp: add(t.dim); break;
      case LieType::so:
        if (odd(t.dim)) {
          add(t.dim);
        } else if (t.dim > 0) {
          add(t.dim - 1);
          add(1);
        }
        break;
    }
  }
  // Levis of so(2n+1) carry an implicit so(1).
  if (ambient.dual_family == DualFamily::SO && odd(ambient.standard_dim) &&
      out.total() == ambient.standard_dim - 1)
    add(1);
  if (out.total() != ambient.standard_dim)
    fail(ErrorCode::DimensionMismatch, "Levi of total size " + I(out.total()) + " in " + ambient.name());
  return out;
}

const char* to_string(WeilAction a) { return a == WeilAction::Direct ? "Direct" : "SemiDirect"; }

std::string CommutantFactor::name() const {
  switch (kind) {
    case CommutantKind::GL: return "GL(" + I(dim) + ")";
    case CommutantKind::Sp: return "Sp(" + I(dim) + ")";
    case CommutantKind::O: return "O(" + I(dim) + ")";
    case CommutantKind::SO: return "SO(" + I(dim) + ")";
    case CommutantKind::FinitePM1: return "{+-1}";
    case CommutantKind::SO2: return "SO(2)";
  }
  return "?";
}

std::string CommutantDescriptor::str() const {
  std::string s = det_condition ? "S[" : "[";
  for (size_t i = 0; i < factors.size(); ++i) s += (i ? ", " : "") + factors[i].name();
  s += "] ";
  return s + to_string(weil_action);
}

CommutantDescriptor commutant(const LGroupDescriptor& ambient, const PartitionWithMult& part) {
  if (part.total() != ambient.standard_dim)
    fail(ErrorCode::DimensionMismatch, "partition " + part.str() + " does not fill " + ambient.name());
  for (const auto& [a, m] : part.mult) {
    if (ambient.dual_family == DualFamily::Sp && odd(a) && odd(m))
      fail(ErrorCode::ParityInconsistentPartition, "odd part " + I(a) + " with odd multiplicity in " + ambient.name());
    if (ambient.dual_family == DualFamily::SO && !odd(a) && odd(m))
      fail(ErrorCode::ParityInconsistentPartition, "even part " + I(a) + " with odd multiplicity in " + ambient.name());
  }
  CommutantDescriptor c;
  std::vector<CommutantFactor> raw;
  for (const auto& [a, m] : part.mult) {
    switch (ambient.dual_family) {
      case DualFamily::GL: raw.push_back({CommutantKind::GL, m}); break;
      case DualFamily::Sp: raw.push_back({odd(a) ? CommutantKind::Sp : CommutantKind::O, m}); break;
      case DualFamily::SO: raw.push_back({odd(a) ? CommutantKind::O : CommutantKind::Sp, m}); break;
    }
  }
  if (ambient.dual_family == DualFamily::SO) {
    int n_orth = 0, best = -1;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].kind != CommutantKind::O) continue;
      ++n_orth;
      if (odd(raw[i].dim) && (best < 0 || raw[i].dim > raw[best].dim)) best = static_cast<int>(i);
    }
    c.det_condition = n_orth > 0;
    if (best < 0 && n_orth == 1)
      for (size_t i = 0; i < raw.size(); ++i)
        if (raw[i].kind == CommutantKind::O) best = static_cast<int>(i);
    if (best >= 0) raw[best].kind = CommutantKind::SO;
  }
  for (auto f : raw) {
    if (f.kind == CommutantKind::Sp && f.dim == 0) continue;
    if (f.kind == CommutantKind::SO && f.dim == 1) continue;
    if (f.kind == CommutantKind::SO && f.dim == 2) f = {CommutantKind::SO2, 2};
    if (f.kind == CommutantKind::O && f.dim == 1) f = {CommutantKind::FinitePM1, 1};
    c.factors.push_back(f);
  }
  if (ambient.galois_action == GaloisAction::Trivial) {
    c.weil_action = WeilAction::Direct;
  } else if (ambient.dual_family == DualFamily::GL) {
    c.weil_action = WeilAction::SemiDirect;
  } else {
    bool odd_odd = false;
    for (const auto& [a, m] : part.mult)
      if (odd(a) && odd(m)) odd_odd = true;
    c.weil_action = odd_odd ? WeilAction::Direct : WeilAction::SemiDirect;
  }
  return c;
}

int SVDualDescriptor::rank() const {
  return family == DualFamily::GL ? standard_dim : standard_dim / 2;
}

std::string SVDualDescriptor::name() const {
  LGroupDescriptor l{family, galois_action, standard_dim};
  std::string g = l.name();
  auto cut = g.find(" ");
  if (cut != std::string::npos) g = g.substr(0, cut);
  if (variant == Case3Variant::ESpSemidirect) return g + " x| W_R (E-group, j acting by similitude -1)";
  if (variant == Case3Variant::SOEvenSemidirect) return g + " x|_" + I(standard_dim / 2) + " W_R";
  return g + (galois_action == GaloisAction::Trivial ? " x W_R" : " x| W_R");
}

SVDualDescriptor sv_dual(const SymmetricSpace& x, Case3Variant v) {
  x.validate();
  SVDualDescriptor d;
  int N = x.big_n();
  int k = x.k();
  auto set = [&](DualFamily f, int dim, GaloisAction g = GaloisAction::Trivial) {
    d.family = f;
    d.standard_dim = dim;
    d.galois_action = g;
  };
  switch (x.case_id) {
    case 1: set(DualFamily::Sp, 2 * x.p); break;
    case 2:
    case 13: {
      LGroupDescriptor l = dual_lgroup(x.group());
      set(l.dual_family, l.standard_dim, l.galois_action);
      d.is_lgroup_of_G = true;
      break;
    }
    case 3:
      if (!odd(N)) {
        set(DualFamily::Sp, 2 * k);
      } else {
        d.alternatives = {Case3Variant::ESpSemidirect, Case3Variant::SOEvenSemidirect};
        d.variant = v;
        if (v == Case3Variant::ESpSemidirect)
          set(DualFamily::Sp, 2 * k, GaloisAction::PinnedOuter);
        else
          set(DualFamily::SO, 2 * k, GaloisAction::PinnedOuter);
      }
      break;
    case 4: set(DualFamily::Sp, 2 * x.n); break;
    case 5:
    case 6: set(DualFamily::GL, N, GaloisAction::PinnedOuter); break;
    case 7: set(DualFamily::Sp, 2 * k); break;
    case 8:
      if (k < N) {
        set(DualFamily::SO, 2 * k + 1);
      } else {
        LGroupDescriptor l = dual_lgroup(x.group());
        set(l.dual_family, l.standard_dim, l.galois_action);
        d.is_lgroup_of_G = true;
      }
      break;
    case 9:
    case 10: set(DualFamily::Sp, 2 * (N / 2)); break;
    case 11: set(DualFamily::Sp, 2 * x.p); break;
    case 12: set(DualFamily::Sp, 2 * x.n); break;
  }
  return d;
}

std::string PhiDescriptor::describe() const {
  std::string s = "phi: " + source.name() + " -> ^LG; image x R[" + I(main_a) + "]";
  if (split_pairs) s += ", d(m) -> chi(m) + chi(-m)";
  if (chi_shift) s += ", chi(m) -> chi(m+" + I(chi_shift) + ")";
  if (one_dim_twist) s += ", sgn^b -> sgn^(b+" + I(one_dim_twist) + ")";
  for (const auto& t : tails) s += "; tail " + notation(t);
  return s;
}

PhiDescriptor sv_phi(const SymmetricSpace& x, Case3Variant v) {
  PhiDescriptor phi;
  phi.source = sv_dual(x, v);
  int N = x.big_n();
  int k = x.k();
  auto triv = [](int a) { return S(WeilRep::triv(), a); };
  switch (x.case_id) {
    case 1:
      if (x.n > 2 * x.p) phi.tails.push_back(triv(x.n - 2 * x.p));
      break;
    case 2:
      phi.d_is_unitary = true;
      phi.d_self_duality = SelfDuality::NotSelfDual;
      break;
    case 3:
      phi.split_pairs = true;
      phi.d_self_duality = odd(N) ? SelfDuality::Orthogonal : SelfDuality::Symplectic;
      if (N > 2 * k) phi.tails.push_back(S(WeilCChar{0}, N - 2 * k));
      break;
    case 4: phi.split_pairs = true; break;
    case 5:
    case 6:
      phi.main_a = 2;
      phi.d_is_unitary = true;
      phi.d_self_duality = SelfDuality::NotSelfDual;
      phi.chi_shift = odd(N) ? 0 : 1;
      break;
    case 7:
      if (N > k) phi.tails.push_back(triv(2 * (N - k)));
      break;
    case 8:
      phi.d_self_duality = SelfDuality::Orthogonal;
      if (N > k) {
        phi.tails.push_back(triv(2 * (N - k) - 1));
        phi.one_dim_twist = odd(N - x.p) ? 1 : 0;
      }
      break;
    case 9:
    case 10:
      phi.main_a = 2;
      if (odd(N)) {
        phi.tails.push_back(S(x.case_id == 9 ? WeilRep::sgn(1) : WeilRep::triv(), 1));
        phi.tails.push_back(triv(1));
      }
      break;
    case 11:
      phi.main_a = 2;
      phi.tails.push_back(triv(2 * (x.n - 2 * x.p) + 1));
      break;
    case 12:
      phi.main_a = 2;
      phi.tails.push_back(triv(1));
      break;
    case 13: phi.d_self_duality = SelfDuality::Orthogonal; break;
  }
  return phi;
}

std::vector<ArthurSummand> compose(const PhiDescriptor& phi, const std::vector<Rho>& phi_d) {
  std::vector<ArthurSummand> out;
  for (const auto& rho : phi_d) {
    if (is_cchar(rho)) {
      out.push_back(S(WeilCChar{as_cchar(rho).m + phi.chi_shift}, phi.main_a));
      continue;
    }
    const auto& w = as_rep(rho);
    if (w.kind == WeilKind::TwoDim && phi.split_pairs) {
      out.push_back(S(WeilCChar{w.m}, phi.main_a));
      out.push_back(S(WeilCChar{-w.m}, phi.main_a));
    } else if (w.kind == WeilKind::OneDim) {
      out.push_back(S(WeilRep::sgn((w.b + phi.one_dim_twist) % 2), phi.main_a));
    } else {
      out.push_back(S(w, phi.main_a));
    }
  }
  for (const auto& t : phi.tails) out.push_back(t);
  std::stable_sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// Required parity of m on the psi side, or -1.
int m_parity(const SymmetricSpace& x) {
  int N = x.big_n();
  switch (x.case_id) {
    case 1: case 7: case 9: case 10: case 11: case 12: return 1;
    case 2: return odd(N - 1);
    case 3: return odd(N - 1);
    case 4: return 1;
    case 5: case 6: case 8: case 13: return 0;
  }
  return -1;
}

// One-dimensional part of phi_d, when the dual group needs it for det = 1.
std::optional<int> one_dim_d(const SymmetricSpace& x) {
  if (x.case_id == 8 && x.k() < x.big_n()) return x.k() % 2;
  if (x.case_id == 13) return x.n % 2;
  return std::nullopt;
}

int delta_count(const SymmetricSpace& x) {
  int N = x.big_n();
  switch (x.case_id) {
    case 1: case 11: return x.p;
    case 2: case 5: case 6: return N;
    case 3: case 7: case 8: return x.k();
    case 4: case 12: case 13: return x.n;
    case 9: case 10: return N / 2;
  }
  return 0;
}

void combinations(const std::vector<int>& pool, int c, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == c) {
      f(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      if (pool.size() - i < static_cast<size_t>(c) - cur.size()) break;
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Packets of U(p,q) whose members include discrete series of U(p,q)/O(p,q).
bool case2_filter(const SymmetricSpace& x, const std::vector<int>& ms_desc) {
  int n = x.p + x.q;
  int even = 0;
  std::vector<int> mt;
  for (int i = 1; i <= n; ++i) {
    int twice = ms_desc[i - 1] + (n + 1) - 2 * i;  // 2 * mu~_i
    mt.push_back(twice / 2);
  }
  for (int v : mt) even += !odd(v);
  if (!odd(n)) {
    for (int v : mt)
      if (odd(v) != odd(x.p)) return false;
    return true;
  }
  return even == x.p || even == x.q;
}

bool case13_filter(const std::vector<int>& ms_desc) {
  for (size_t i = 0; i < ms_desc.size(); ++i)
    if (odd(ms_desc[i] / 2) != odd(static_cast<int>(i) + 1)) return false;
  return true;
}

}  // namespace

std::vector<ArthurParameter> generate_ds_parameters(const SymmetricSpace& x, int height) {
  x.validate();
  PhiDescriptor phi = sv_phi(x);
  LGroupDescriptor target = dual_lgroup(x.group());
  int par = m_parity(x);
  int c = delta_count(x);
  std::vector<int> pool;
  if (phi.d_is_unitary) {
    for (int m = height; m >= -height; --m)
      if (odd(m) == (par == 1)) pool.push_back(m);
  } else {
    for (int m = height; m >= 1; --m)
      if (odd(m) == (par == 1)) pool.push_back(m);
  }
  std::vector<ArthurParameter> out;
  combinations(pool, c, [&](const std::vector<int>& ms) {
    if (x.case_id == 2 && !case2_filter(x, ms)) return;
    if (x.case_id == 13 && !case13_filter(ms)) return;
    std::vector<Rho> d;
    for (int m : ms) {
      if (phi.d_is_unitary)
        d.push_back(WeilCChar{m - phi.chi_shift});
      else
        d.push_back(WeilRep::delta(m));
    }
    if (auto b = one_dim_d(x)) d.push_back(WeilRep::sgn(*b));
    out.push_back({target, compose(phi, d)});
  });
  return out;
}

namespace {

std::string variant_name(const SVDualDescriptor& d) { return d.name(); }

bool same_multiset(std::vector<ArthurSummand> a, std::vector<ArthurSummand> b) {
  std::stable_sort(a.begin(), a.end(), canonical_less);
  std::stable_sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

}  // namespace

FactorizationResult factorize(const ArthurParameter& psi, const SymmetricSpace& x, Case3Variant v) {
  x.validate();
  LGroupDescriptor target = dual_lgroup(x.group());
  if (!(psi.target == target))
    fail(ErrorCode::WrongCase, "parameter target " + psi.target.name() + " is not the L-group of " + x.name());
  auto viol = validate_good_parity(psi);
  if (!viol.empty()) fail(ErrorCode::ParityMismatch, "not of good parity: " + viol.front().detail);

  PartitionWithMult pp = principal_partition(dual_data(x), target);
  if (sl2_partition(psi) != pp.parts()) {
    PartitionWithMult got;
    for (int a : sl2_partition(psi)) ++got.mult[a];
    fail(ErrorCode::PartitionMismatch, "SL(2) partition " + got.str() + " differs from the principal partition " +
                                           pp.str() + " of the dual Levi of " + x.name());
  }

  PhiDescriptor phi = sv_phi(x, v);
  int par = m_parity(x);
  std::vector<int> ms;
  std::vector<int> neg;
  for (const auto& s : psi.summands) {
    if (s.a != phi.main_a) continue;
    if (phi.d_is_unitary) {
      if (is_cchar(s.rho)) ms.push_back(as_cchar(s.rho).m);
    } else if (phi.split_pairs) {
      if (!is_cchar(s.rho)) continue;
      int m = as_cchar(s.rho).m;
      if (m > 0) ms.push_back(m);
      if (m < 0) neg.push_back(-m);
    } else if (!is_cchar(s.rho) && as_rep(s.rho).kind == WeilKind::TwoDim) {
      ms.push_back(as_rep(s.rho).m);
    }
  }
  for (int m : ms)
    if (par >= 0 && odd(m) != (par == 1))
      fail(ErrorCode::ParityMismatch, "m = " + I(m) + " has the wrong parity for " + x.name());
  if (phi.split_pairs) {
    auto a = ms, b = neg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail(ErrorCode::ParityMismatch, "characters chi(m) do not pair with chi(-m)");
  }
  std::sort(ms.rbegin(), ms.rend());
  if (std::adjacent_find(ms.begin(), ms.end()) != ms.end())
    fail(ErrorCode::NotDiscrete, "repeated summand in phi_d for " + x.name());

  FactorizationResult r;
  r.space = x;
  r.psi = psi;
  r.phi = phi;
  r.variant = variant_name(phi.source);
  for (int m : ms) {
    if (phi.d_is_unitary) {
      r.phi_d.push_back(WeilCChar{m - phi.chi_shift});
    } else {
      WeilRep d = WeilRep::delta(m);
      if (self_duality(d) != phi.d_self_duality)
        fail(ErrorCode::ParityMismatch, notation(Rho(d)) + " has the wrong self-duality for the dual group");
      r.phi_d.push_back(d);
    }
  }
  if (auto b = one_dim_d(x)) r.phi_d.push_back(WeilRep::sgn(*b));
  if (!same_multiset(compose(phi, r.phi_d), psi.summands))
    fail(ErrorCode::TailMismatch, "unipotent tail of " + notation(psi) + " is not the image of phi for " + x.name());
  return r;
}

}  // namespace svt
