#pragma once

// Brill-Noether arithmetic on general pointed curves: the Brill-Noether
// number rho, vanishing/ramification sequences, adjusted Brill-Noether
// numbers, and the Eisenbud-Harris existence criterion for a g^r_d with
// prescribed ramification at one general point.
//
// Everything here is exact integer arithmetic.  Inputs are bounded by
// kMaxInput so that every intermediate value fits in 64 bits with a wide
// margin; the bound is enforced at the entry points.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnls {

using Int = std::int64_t;

inline constexpr Int kMaxInput = 10000;

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_bounded(Int v, const char* name) {
  require(v >= 0 && v <= kMaxInput,
          std::string(name) + " out of range [0, 10^4]: " + std::to_string(v));
}

}  // namespace detail

/// Brill-Noether number g - (r+1)(g-d+r).  May be negative.
inline Int rho(Int g, Int r, Int d) {
  detail::check_bounded(g, "g");
  detail::check_bounded(r, "r");
  detail::check_bounded(d, "d");
  return g - (r + 1) * (g - d + r);
}

/// The (g, r, d) of a linear series type.  Requires r <= d: a g^r_d needs
/// r+1 distinct vanishing orders inside [0, d].
struct GrdParams {
  Int g = 0;
  Int r = 0;
  Int d = 0;

  GrdParams() = default;
  GrdParams(Int g_, Int r_, Int d_) : g(g_), r(r_), d(d_) { validate(); }

  void validate() const {
    detail::check_bounded(g, "g");
    detail::check_bounded(r, "r");
    detail::check_bounded(d, "d");
    detail::require(r <= d, "GrdParams: r > d");
  }

  Int rho_value() const { return rho(g, r, d); }

  friend bool operator==(const GrdParams&, const GrdParams&) = default;
};

namespace detail {

inline void check_vanishing(std::span<const Int> a, Int r, Int d) {
  require(static_cast<Int>(a.size()) == r + 1,
          "vanishing sequence: expected length r+1 = " + std::to_string(r + 1) +
              ", got " + std::to_string(a.size()));
  require(a.empty() || a.front() >= 0, "vanishing sequence: negative order");
  for (std::size_t j = 1; j < a.size(); ++j)
    require(a[j] > a[j - 1], "vanishing sequence: not strictly increasing");
  require(a.empty() || a.back() <= d, "vanishing sequence: order exceeds d");
}

inline void check_ramification(std::span<const Int> alpha, Int r, Int d) {
  require(static_cast<Int>(alpha.size()) == r + 1,
          "ramification sequence: expected length r+1");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    require(alpha[j] >= 0, "ramification sequence: negative entry");
    if (j > 0)
      require(alpha[j] >= alpha[j - 1], "ramification sequence: decreasing");
  }
  require(alpha.empty() || alpha.back() <= d - r,
          "ramification sequence: alpha_r > d - r");
}

inline Int sum(std::span<const Int> v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

}  // namespace detail

/// Vanishing sequence a_0 < a_1 < ... < a_r of a linear series at a point,
/// kept together with the GrdParams it belongs to.
struct VanishingSeq {
  std::vector<Int> values;
  GrdParams context;

  VanishingSeq() = default;
  VanishingSeq(std::vector<Int> v, GrdParams ctx)
      : values(std::move(v)), context(ctx) {
    context.validate();
    detail::check_vanishing(values, context.r, context.d);
  }

  /// Ramification sequence alpha_j = a_j - j.
  std::vector<Int> ramification() const {
    std::vector<Int> alpha(values.size());
    for (std::size_t j = 0; j < values.size(); ++j)
      alpha[j] = values[j] - static_cast<Int>(j);
    return alpha;
  }

  Int total_ramification() const {
    Int s = 0;
    for (std::size_t j = 0; j < values.size(); ++j)
      s += values[j] - static_cast<Int>(j);
    return s;
  }

  friend bool operator==(const VanishingSeq&, const VanishingSeq&) = default;
};

/// alpha_j -> a_j = alpha_j + j.  Inverse of ramification_from_vanishing.
inline VanishingSeq vanishing_from_ramification(std::span<const Int> alpha,
                                                const GrdParams& params) {
  detail::check_ramification(alpha, params.r, params.d);
  std::vector<Int> a(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j)
    a[j] = alpha[j] + static_cast<Int>(j);
  return VanishingSeq(std::move(a), params);
}

inline std::vector<Int> ramification_from_vanishing(const VanishingSeq& seq) {
  return seq.ramification();
}

/// Adjusted Brill-Noether number: rho(g,r,d) minus the total ramification
/// imposed at the marked points.
inline Int adjusted_rho(const GrdParams& params,
                        std::span<const VanishingSeq> seqs) {
  Int result = params.rho_value();
  for (const VanishingSeq& s : seqs) {
    detail::require(s.context == params,
                    "adjusted_rho: sequence attached to different params");
    result -= s.total_ramification();
  }
  return result;
}

inline Int adjusted_rho(const GrdParams& params,
                        std::initializer_list<VanishingSeq> seqs) {
  return adjusted_rho(params, std::span<const VanishingSeq>(seqs.begin(), seqs.size()));
}

/// Eisenbud-Harris criterion: a general pointed curve of genus g_tail
/// carries a g^r_d with ramification sequence alpha at the point iff
/// sum_j max(0, alpha_j + g_tail - d + r) <= g_tail.
inline bool eh_exists(Int g_tail, Int r, Int d, std::span<const Int> alpha) {
  detail::check_bounded(g_tail, "g_tail");
  detail::check_bounded(r, "r");
  detail::check_bounded(d, "d");
  detail::check_ramification(alpha, r, d);
  Int total = 0;
  const Int shift = g_tail - d + r;
  for (Int aj : alpha) {
    const Int term = aj + shift;
    if (term > 0) total += term;
  }
  return total <= g_tail;
}

/// Dimension of the locus of series with exactly the given ramification on
/// a general pointed curve: rho(g,r,d) - sum alpha_j (no positive part).
inline Int eh_dimension(Int g_tail, Int r, Int d, std::span<const Int> alpha) {
  detail::check_bounded(g_tail, "g_tail");
  detail::check_bounded(r, "r");
  detail::check_bounded(d, "d");
  detail::check_ramification(alpha, r, d);
  return rho(g_tail, r, d) - detail::sum(alpha);
}

}  // namespace bnls
