#pragma once

#include <algorithm>
#include <vector>

#include "svt/factorization.hpp"
#include "svt/symspaces.hpp"

// Expected values written out by hand, shared by the unit tests and the
// acceptance binary.
namespace oracle {

using namespace svt;
using K = CommutantKind;
using Multiset = std::vector<std::pair<int, int>>;

struct Golden {
  Multiset factors;
  bool det = false;
  WeilAction weil = WeilAction::Direct;
};

inline Multiset ms(std::vector<CommutantFactor> f) {
  Multiset out;
  for (auto& x : f) out.push_back({static_cast<int>(x.kind), x.dim});
  std::sort(out.begin(), out.end());
  return out;
}

inline void add(std::vector<CommutantFactor>& f, K k, int d) {
  if (d <= 0) return;
  if (k == K::SO && d == 1) return;
  if (k == K::SO && d == 2) k = K::SO2;
  f.push_back({k, d});
}

// Rank read off the g_X column, written out per row.
inline int table_rank(const SymmetricSpace& x) {
  switch (x.case_id) {
    case 1:
    case 11: return x.p;
    case 2:
    case 5: return x.p + x.q;
    case 3:
    case 7:
    case 8: return x.r + x.s;
    case 4:
    case 6:
    case 12:
    case 13: return x.n;
    case 9: return (x.p + x.q) / 2;
    case 10: return x.n / 2;
  }
  return -1;
}

// GL(2k) x Z(GL(rest)) with the size-one tail merging into the 1-parts.
inline void gl_levi(std::vector<CommutantFactor>& f, int two_k, int rest) {
  if (rest == 1) {
    add(f, K::GL, two_k + 1);
  } else {
    add(f, K::GL, two_k);
    if (rest > 1) add(f, K::GL, 1);
  }
}

// Commutant of the principal SL(2) of the Levi, case by case from the
// hand computation for each row of the table.
inline Golden golden(const SymmetricSpace& x) {
  std::vector<CommutantFactor> f;
  Golden g;
  int n2 = x.r + x.s + x.rp + x.sp;  // p + q for cases 3, 7, 8
  int k = x.r + x.s;
  switch (x.case_id) {
    case 1:
      gl_levi(f, 2 * x.p, x.n - 2 * x.p);
      break;
    case 2:
      add(f, K::GL, x.p + x.q);
      g.weil = WeilAction::SemiDirect;
      break;
    case 3:
      gl_levi(f, 2 * k, n2 - 2 * k);
      g.weil = WeilAction::SemiDirect;
      break;
    case 4:
      add(f, K::GL, 2 * x.n);
      g.weil = WeilAction::SemiDirect;
      break;
    case 5:
      add(f, K::GL, x.p + x.q);
      g.weil = WeilAction::SemiDirect;
      break;
    case 6:
      add(f, K::GL, x.n);
      g.weil = WeilAction::SemiDirect;
      break;
    case 7: {
      int n = (n2 - 1) / 2;
      add(f, K::Sp, 2 * k);
      if (n > k) add(f, K::FinitePM1, 1);
      break;
    }
    case 8: {
      int n = n2 / 2;
      int p = x.r + x.rp;
      bool outer = (p - n) % 2 != 0;
      g.det = true;
      if (n - k >= 2) {
        add(f, K::SO, 2 * k + 1);
        add(f, K::FinitePM1, 1);
      } else {
        // trivial SL(2): the whole group
        add(f, K::SO, 2 * n);
        g.weil = outer ? WeilAction::SemiDirect : WeilAction::Direct;
      }
      break;
    }
    case 9:
    case 10: {
      int n = x.case_id == 9 ? x.p + x.q : x.n;
      if (n % 2 == 0) {
        add(f, K::Sp, n);
      } else {
        add(f, K::Sp, n - 1);
        add(f, K::SO, 2);
        g.det = true;
        if (x.case_id == 9) g.weil = WeilAction::SemiDirect;
      }
      break;
    }
    case 11:
      add(f, K::Sp, 2 * x.p);
      g.det = true;
      break;
    case 12:
      add(f, K::Sp, 2 * x.n);
      g.det = true;
      break;
    case 13:
      add(f, K::SO, 2 * x.n + 1);
      g.det = true;
      break;
  }
  g.factors = ms(f);
  return g;
}

inline int det_parity(const ArthurParameter& psi) {
  int b = 0;
  for (auto& s : psi.summands) {
    auto& w = as_rep(s.rho);
    if (w.kind == WeilKind::TwoDim) b += s.a * (w.m + 1);
    else b += s.a * w.b;
  }
  return b % 2;
}

}  // namespace oracle
