#include "svt/groups.hpp"

#include <algorithm>
#include <functional>

#include "svt/errors.hpp"

namespace svt {

ClassicalGroup ClassicalGroup::GL(int n) {
  ClassicalGroup g{GroupFamily::GeneralLinearReal, n, 0, 0};
  g.validate();
  return g;
}

ClassicalGroup ClassicalGroup::U(int p, int q) {
  ClassicalGroup g{GroupFamily::Unitary, 0, p, q};
  g.validate();
  return g;
}

ClassicalGroup ClassicalGroup::Sp(int n) {
  ClassicalGroup g{GroupFamily::SymplecticReal, n, 0, 0};
  g.validate();
  return g;
}

ClassicalGroup ClassicalGroup::SO(int p, int q) {
  ClassicalGroup g{GroupFamily::SpecialOrthogonal, 0, p, q};
  g.validate();
  return g;
}

void ClassicalGroup::validate() const {
  if (n < 0 || p < 0 || q < 0) fail(ErrorCode::InvalidGroup, "negative parameter in " + name());
  switch (family) {
    case GroupFamily::GeneralLinearReal:
      if (n < 1) fail(ErrorCode::InvalidGroup, "GL needs n >= 1");
      break;
    case GroupFamily::Unitary:
      if (p + q < 1) fail(ErrorCode::InvalidGroup, "U needs p+q >= 1");
      break;
    case GroupFamily::SymplecticReal:
      if (n < 1) fail(ErrorCode::InvalidGroup, "Sp needs n >= 1");
      break;
    case GroupFamily::SpecialOrthogonal:
      if (p + q < 2) fail(ErrorCode::InvalidGroup, "SO needs p+q >= 2");
      break;
  }
}

std::string ClassicalGroup::name() const {
  switch (family) {
    case GroupFamily::GeneralLinearReal: return "GL(" + std::to_string(n) + ",R)";
    case GroupFamily::Unitary: return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case GroupFamily::SymplecticReal: return "Sp(" + std::to_string(2 * n) + ",R)";
    case GroupFamily::SpecialOrthogonal:
      return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "?";
}

int LGroupDescriptor::rank() const {
  return dual_family == DualFamily::GL ? standard_dim : standard_dim / 2;
}

std::string LGroupDescriptor::name() const {
  std::string base;
  switch (dual_family) {
    case DualFamily::GL: base = "GL("; break;
    case DualFamily::Sp: base = "Sp("; break;
    case DualFamily::SO: base = "SO("; break;
  }
  base += std::to_string(standard_dim) + ",C)";
  return base + (galois_action == GaloisAction::Trivial ? " x W_R" : " x| W_R");
}

const char* to_string(GaloisAction a) {
  return a == GaloisAction::Trivial ? "Trivial" : "PinnedOuter";
}

LGroupDescriptor dual_lgroup(const ClassicalGroup& g) {
  g.validate();
  switch (g.family) {
    case GroupFamily::GeneralLinearReal:
      return {DualFamily::GL, GaloisAction::Trivial, g.n};
    case GroupFamily::Unitary:
      return {DualFamily::GL, GaloisAction::PinnedOuter, g.p + g.q};
    case GroupFamily::SymplecticReal:
      return {DualFamily::SO, GaloisAction::Trivial, 2 * g.n + 1};
    case GroupFamily::SpecialOrthogonal: {
      int m = g.p + g.q;
      if (m % 2 == 1) return {DualFamily::Sp, GaloisAction::Trivial, m - 1};
      int n = m / 2;
      bool even = ((n - g.p) % 2 + 2) % 2 == 0;
      return {DualFamily::SO, even ? GaloisAction::Trivial : GaloisAction::PinnedOuter, m};
    }
  }
  fail(ErrorCode::InvalidGroup, "unknown family");
}

std::string LeviFactor::name() const {
  switch (kind) {
    case LeviFactorKind::GLC: return "GL(" + std::to_string(a) + ",C)";
    case LeviFactorKind::GLR: return "GL(" + std::to_string(a) + ",R)";
    case LeviFactorKind::U: return "U(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case LeviFactorKind::SpR: return "Sp(" + std::to_string(2 * a) + ",R)";
    case LeviFactorKind::SO: return "SO(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

std::string CLeviTemplate::name() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i].name();
  }
  return s.empty() ? "1" : s;
}

bool bookkeeping_holds(const ClassicalGroup& g, const std::vector<LeviFactor>& factors) {
  int x = 0, y = 0, classical = 0;
  for (const auto& f : factors) {
    switch (f.kind) {
      case LeviFactorKind::GLC:
        if (g.family != GroupFamily::GeneralLinearReal) return false;
        x += 2 * f.a;
        break;
      case LeviFactorKind::GLR:
        if (g.family != GroupFamily::GeneralLinearReal) return false;
        x += f.a;
        break;
      case LeviFactorKind::U:
        if (g.family == GroupFamily::GeneralLinearReal) return false;
        if (g.family == GroupFamily::Unitary) {
          x += f.a;
          y += f.b;
        } else if (g.family == GroupFamily::SymplecticReal) {
          x += f.a + f.b;
        } else {
          x += 2 * f.a;
          y += 2 * f.b;
        }
        break;
      case LeviFactorKind::SpR:
        if (g.family != GroupFamily::SymplecticReal) return false;
        ++classical;
        x += f.a;
        break;
      case LeviFactorKind::SO:
        if (g.family != GroupFamily::SpecialOrthogonal) return false;
        ++classical;
        x += f.a;
        y += f.b;
        break;
    }
  }
  if (classical > 1) return false;
  switch (g.family) {
    case GroupFamily::GeneralLinearReal: return x == g.n;
    case GroupFamily::Unitary: return x == g.p && y == g.q;
    case GroupFamily::SymplecticReal: return x == g.n;
    case GroupFamily::SpecialOrthogonal: return x == g.p && y == g.q;
  }
  return false;
}

namespace {

struct Atom {
  LeviFactor f;
  int cx;
  int cy;
};

void multisets(const std::vector<Atom>& atoms, size_t start, int bx, int by,
               std::vector<LeviFactor>& cur,
               const std::function<void(const std::vector<LeviFactor>&, int, int)>& emit) {
  emit(cur, bx, by);
  for (size_t i = start; i < atoms.size(); ++i) {
    if (atoms[i].cx > bx || atoms[i].cy > by) continue;
    cur.push_back(atoms[i].f);
    multisets(atoms, i, bx - atoms[i].cx, by - atoms[i].cy, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CLeviTemplate> c_levi_templates(const ClassicalGroup& g) {
  g.validate();
  if (dual_lgroup(g).rank() > 10) fail(ErrorCode::SizeViolation, "c-Levi enumeration bounded to rank 10");
  CLeviTemplate base;
  base.family = g.family;
  std::vector<Atom> atoms;
  int bx = 0, by = 0;
  switch (g.family) {
    case GroupFamily::GeneralLinearReal:
      base.form = "prod GL(a_i,C) x prod GL(a'_j,R)";
      base.equation = "2*sum(a_i) + sum(a'_j) = n";
      bx = g.n;
      for (int a = 1; 2 * a <= g.n; ++a) atoms.push_back({{LeviFactorKind::GLC, a, 0}, 2 * a, 0});
      for (int a = 1; a <= g.n; ++a) atoms.push_back({{LeviFactorKind::GLR, a, 0}, a, 0});
      break;
    case GroupFamily::Unitary:
      base.form = "prod U(p_i,q_i)";
      base.equation = "sum(p_i,q_i) = (p,q)";
      bx = g.p;
      by = g.q;
      for (int a = 0; a <= g.p; ++a)
        for (int b = 0; b <= g.q; ++b)
          if (a + b > 0) atoms.push_back({{LeviFactorKind::U, a, b}, a, b});
      break;
    case GroupFamily::SymplecticReal:
      base.form = "prod U(p_i,q_i) x Sp(2a,R)";
      base.equation = "sum(p_i+q_i) + a = n";
      bx = g.n;
      for (int a = 0; a <= g.n; ++a)
        for (int b = 0; a + b <= g.n; ++b)
          if (a + b > 0) atoms.push_back({{LeviFactorKind::U, a, b}, a + b, 0});
      break;
    case GroupFamily::SpecialOrthogonal:
      base.form = "prod U(p_i,q_i) x SO(r,s)";
      base.equation = "sum(2p_i,2q_i) + (r,s) = (p,q)";
      bx = g.p;
      by = g.q;
      for (int a = 0; 2 * a <= g.p; ++a)
        for (int b = 0; 2 * b <= g.q; ++b)
          if (a + b > 0) atoms.push_back({{LeviFactorKind::U, a, b}, 2 * a, 2 * b});
      break;
  }
  std::vector<CLeviTemplate> out;
  std::vector<LeviFactor> cur;
  multisets(atoms, 0, bx, by, cur, [&](const std::vector<LeviFactor>& fs, int rx, int ry) {
    CLeviTemplate t = base;
    t.factors = fs;
    switch (g.family) {
      case GroupFamily::GeneralLinearReal:
      case GroupFamily::Unitary:
        if (rx != 0 || ry != 0) return;
        break;
      case GroupFamily::SymplecticReal:
        if (rx > 0) t.factors.push_back({LeviFactorKind::SpR, rx, 0});
        break;
      case GroupFamily::SpecialOrthogonal:
        if (rx + ry > 0) t.factors.push_back({LeviFactorKind::SO, rx, ry});
        break;
    }
    if (t.factors.empty()) return;
    out.push_back(std::move(t));
  });
  return out;
}

}  // namespace svt
