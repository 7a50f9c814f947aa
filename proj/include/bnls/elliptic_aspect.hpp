#pragma once

// Combinatorial model of a g^r_d on an elliptic curve with two marked
// points x, y whose difference has exact torsion order t.
//
// The bundle of an aspect is coordinatized by a class k in Z/t with
// L ~ d.y + k(x - y); a divisor a.x + b.y of degree d is linearly
// equivalent to L exactly when a = k (mod t).  That congruence is the
// entire content the feasibility rules need.
//
// Feasibility is split into a sufficient criterion (constructive: a span
// of per-pair exact sections realizes the sequences) and a necessary one
// (nu >= 0 plus the congruence at every tight pair).  A search reports
// sound Exists via the former and sound NotExists via the latter.

#include <span>
#include <vector>

#include "bnls/bn_core.hpp"

namespace bnls {

namespace detail {

inline void check_torsion(Int t) {
  require(t >= 2, "torsion order t must be >= 2");
  check_bounded(t, "t");
}

}  // namespace detail

/// a == b (mod t), with either sign.
inline bool congruent(Int a, Int b, Int t) {
  Int m = (a - b) % t;
  return m == 0;
}

/// nu_j = d - a_j - b_{r-j}.  Nonnegative for any genuine aspect.
inline std::vector<Int> nu_profile(std::span<const Int> a,
                                   std::span<const Int> b, Int d) {
  detail::require(a.size() == b.size(), "nu_profile: length mismatch");
  const std::size_t n = a.size();
  std::vector<Int> nu(n);
  for (std::size_t j = 0; j < n; ++j) nu[j] = d - a[j] - b[n - 1 - j];
  return nu;
}

/// Zero-count identity on an elliptic curve: the number of tight pairs
/// (nu_j = 0) equals -rho(L_E, x, y) + 1 + sum_j (nu_j - 1)_+.
/// Returns (lhs, rhs); they agree for every sequence pair with nu >= 0.
inline std::pair<Int, Int> zero_count_identity(std::span<const Int> a,
                                         std::span<const Int> b, Int d) {
  const std::vector<Int> nu = nu_profile(a, b, d);
  Int lhs = 0, clipped = 0;
  for (Int v : nu) {
    detail::require(v >= 0, "zero_count_identity: negative nu");
    if (v == 0) ++lhs;
    if (v > 1) clipped += v - 1;
  }
  const Int r = static_cast<Int>(a.size()) - 1;
  Int adj = rho(1, r, d);
  for (std::size_t j = 0; j < a.size(); ++j)
    adj -= (a[j] - static_cast<Int>(j)) + (b[j] - static_cast<Int>(j));
  return {lhs, -adj + 1 + clipped};
}

/// Dimension of sections of L ~ d.y + k(x-y) vanishing to order >= alpha
/// at x and >= beta at y.  Riemann-Roch plus the degree-0 triviality test.
inline Int dim_f(Int alpha, Int beta, Int k, Int t, Int d) {
  detail::check_torsion(t);
  detail::require(alpha >= 0 && beta >= 0, "dim_f: negative vanishing order");
  const Int deg = d - alpha - beta;
  if (deg >= 1) return deg;
  if (deg == 0 && congruent(alpha, k, t)) return 1;
  return 0;
}

/// Existence of a section vanishing to order exactly alpha at x and
/// exactly beta at y.
inline bool pair_exact_exists(Int alpha, Int beta, Int k, Int t, Int d) {
  detail::check_torsion(t);
  detail::require(alpha >= 0 && beta >= 0,
                  "pair_exact_exists: negative vanishing order");
  const Int nu = d - alpha - beta;
  if (nu < 0) return false;
  if (nu >= 2) return true;
  if (nu == 1) return !congruent(alpha, k, t) && !congruent(alpha + 1, k, t);
  return congruent(alpha, k, t);  // nu == 0
}

/// Constructive criterion: every pair (a_j, b_{r-j}) admits an exact
/// section.  The span of those sections is a genuine g^r_d whose vanishing
/// sequences at x and y are exactly a and b.
inline bool feasible_sufficient(std::span<const Int> a, std::span<const Int> b,
                                Int k, Int t, Int d) {
  detail::require(a.size() == b.size(), "feasible_sufficient: length mismatch");
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j)
    if (!pair_exact_exists(a[j], b[n - 1 - j], k, t, d)) return false;
  return true;
}

/// Necessary criterion: nu_j >= 0 everywhere, and at every tight pair
/// (nu_j = 0) the class congruence a_j = k (mod t) holds.
inline bool feasible_necessary(std::span<const Int> a, std::span<const Int> b,
                               Int k, Int t, Int d) {
  detail::check_torsion(t);
  detail::require(a.size() == b.size(), "feasible_necessary: length mismatch");
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Int nu = d - a[j] - b[n - 1 - j];
    if (nu < 0) return false;
    if (nu == 0 && !congruent(a[j], k, t)) return false;
  }
  return true;
}

/// One elliptic aspect: torsion order, bundle class, and the vanishing
/// sequences at the two marked points.
struct EllipticAspect {
  Int t = 2;
  Int k = 0;  // bundle class in [0, t)
  Int d = 0;
  Int r = 0;
  std::vector<Int> seq_left;
  std::vector<Int> seq_right;

  void validate() const {
    detail::check_torsion(t);
    detail::require(k >= 0 && k < t, "EllipticAspect: class k outside [0, t)");
    detail::check_vanishing(seq_left, r, d);
    detail::check_vanishing(seq_right, r, d);
  }

  std::vector<Int> nu() const { return nu_profile(seq_left, seq_right, d); }

  bool sufficient() const {
    return feasible_sufficient(seq_left, seq_right, k, t, d);
  }
  bool necessary() const {
    return feasible_necessary(seq_left, seq_right, k, t, d);
  }
};

}  // namespace bnls
