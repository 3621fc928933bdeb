#pragma once

// Brute-force reference computations. They share only the basic containers
// with the library, never its algorithms.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "kv/conjugacy.hpp"
#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"

namespace oracle {

using kv::Coweight;
using kv::Int;
using kv::IntMatrix;
using kv::Rational;

inline Rational pair(const IntMatrix& c, const std::vector<Int>& root, const Coweight& x) {
  // <sum_j root_j alpha_j, sum_i x_i alpha_i^vee> = sum_{i,j} x_i root_j C[i][j]
  Rational s(0);
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t j = 0; j < root.size(); ++j) s += x[i] * Rational(root[j] * c(i, j));
  return s;
}

/// Every root, as the W-orbit of the simple roots (both signs).
inline std::set<std::vector<Int>> all_roots(const IntMatrix& c) {
  const std::size_t r = c.rows();
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> stack;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> e(r, 0);
    e[i] = 1;
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    if (!seen.insert(b).second) continue;
    for (std::size_t i = 0; i < r; ++i) {
      Int k = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < r; ++j) k += c(i, j) * b[j];
      auto n = b;
      n[i] -= k;
      stack.push_back(n);
    }
  }
  return seen;
}

inline bool dominant(const IntMatrix& c, const Coweight& x) {
  for (std::size_t j = 0; j < c.rows(); ++j) {
    std::vector<Int> e(c.rows(), 0);
    e[j] = 1;
    if (pair(c, e, x) < 0) return false;
  }
  return true;
}

/// Dominant mu with lambda - mu in the nonnegative integral coroot cone, found
/// in the box 0 <= lambda - mu <= lambda.
inline std::set<Coweight> dominant_below_box(const IntMatrix& c, const Coweight& lambda) {
  const std::size_t r = lambda.rank();
  std::set<Coweight> out;
  std::vector<Int> k(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      Coweight mu = lambda;
      for (std::size_t t = 0; t < r; ++t) mu[t] -= Rational(k[t]);
      if (dominant(c, mu)) out.insert(mu);
      return;
    }
    for (k[i] = 0; Rational(k[i]) <= lambda[i]; ++k[i]) rec(i + 1);
  };
  rec(0);
  return out;
}

/// Number of N-combinations of `parts` equal to beta, by direct enumeration.
inline Int partitions(const std::vector<std::vector<Int>>& parts, const std::vector<Int>& beta) {
  // Multisets are counted once by taking parts in nondecreasing index order.
  std::function<Int(std::size_t, const std::vector<Int>&)> go = [&](std::size_t k, const std::vector<Int>& rest) {
    if (std::any_of(rest.begin(), rest.end(), [](Int x) { return x < 0; })) return Int(0);
    if (std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; })) return Int(1);
    Int total = 0;
    for (std::size_t t = k; t < parts.size(); ++t) {
      auto next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= parts[t][i];
      total += go(t, next);
    }
    return total;
  };
  return go(0, beta);
}

/// Every W-image of x, by applying every group element.
inline std::set<Coweight> orbit(const kv::WeylGroup& g, const Coweight& x) {
  std::set<Coweight> out;
  for (const auto& w : g.elements()) out.insert(w.action.apply(x));
  return out;
}

/// Minimal-length representatives of W_J1 \ W / W_J2, by building every double coset.
inline std::set<std::size_t> double_coset_reps(const kv::WeylGroup& g, kv::RootMask j1, kv::RootMask j2) {
  auto in_parabolic = [&](const kv::WeylElement& w, kv::RootMask j) {
    for (int s : w.word)
      if (!(j >> s & 1)) return false;
    return true;
  };
  std::vector<std::size_t> p1, p2;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (in_parabolic(g[k], j1)) p1.push_back(k);
    if (in_parabolic(g[k], j2)) p2.push_back(k);
  }
  std::vector<bool> done(g.size(), false);
  std::set<std::size_t> reps;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (done[k]) continue;
    std::size_t best = k;
    for (std::size_t a : p1)
      for (std::size_t b : p2) {
        std::size_t m = *g.find(g[a].action * g[k].action * g[b].action);
        done[m] = true;
        if (g[m].length() < g[best].length()) best = m;
      }
    reps.insert(best);
  }
  return reps;
}

/// d(gamma) summed root by root over all of Phi, straight from the definition
/// of val(alpha(gamma) - 1), without moving nu_bar to the dominant chamber.
inline Rational disc_direct(const kv::ClassDatum& cd) {
  const auto& c = cd.rd->cartan();
  const auto& roots = cd.rd->positive_roots();
  Rational d(0);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Rational x = pair(c, roots[k], cd.nu_bar);
    auto it = cd.residual.find(k);
    Rational r = it == cd.residual.end() ? Rational(0) : it->second;
    for (Rational y : {x, -x}) d += y == 0 ? r : std::min(Rational(0), y);
  }
  return d;
}

/// |det| of an integer matrix by exact elimination.
inline Int abs_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return 0;
    std::swap(a[p], a[col]);
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  if (det < 0) det = -det;
  return boost::rational_cast<Int>(det);
}

/// Weyl dimension formula evaluated on the dual root system, as a product over
/// all positive roots of the dual found by all_roots().
inline Int weyl_dimension(const IntMatrix& c, const Coweight& lambda, const std::vector<Int>& d) {
  // Dual roots are the coroots of G; pairing with the dual's rho uses the
  // invariant form on coweights: (x, y) = sum x_i y_j C[i][j] / d_j.
  const std::size_t r = c.rows();
  auto form = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s(0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s += x[i] * y[j] * Rational(c(i, j), d[j]);
    return s;
  };
  IntMatrix ct = c.transpose();
  std::vector<std::vector<Rational>> pos;
  for (const auto& b : all_roots(ct))
    if (std::all_of(b.begin(), b.end(), [](Int x) { return x >= 0; })) {
      std::vector<Rational> v(b.begin(), b.end());
      pos.push_back(v);
    }
  std::vector<Rational> rho(r, Rational(0));
  for (const auto& b : pos)
    for (std::size_t i = 0; i < r; ++i) rho[i] += b[i] / Rational(2);
  std::vector<Rational> lr(r);
  for (std::size_t i = 0; i < r; ++i) lr[i] = lambda[i] + rho[i];
  Rational prod(1);
  for (const auto& b : pos) prod *= form(lr, b) / form(rho, b);
  return boost::rational_cast<Int>(prod);
}

}  // namespace oracle
