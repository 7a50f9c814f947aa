#pragma once

// Exact verification backend: an explicit elliptic curve over a prime
// field with a marked point P of exact torsion order t and the identity
// point Q, Riemann-Roch spaces of divisors supported on {P, Q}, and
// exact-order section tests.
//
// Functions with poles only at Q are spanned by the monomials x^i y^j
// (pole orders 2i + 3j at the identity, all distinct).  For D = aP + bQ
// with a > 0, L(D) = { u / (x - x_P)^a : u in L((2a+b)Q), ord_{-P}(u) >= a };
// for a <= 0 it is the subspace of L(bQ) vanishing to order >= -a at P.
// The line x - x_P is a uniformizer at P and -P because y_P != 0 (P is
// never 2-torsion), so vanishing orders read off Taylor coefficients.
//
// The torsion congruences the combinatorial model relies on are
// characteristic-free; the choice of prime only has to make the rank
// computations exact, which any p >= 101 admitting the torsion
// configuration does.
//
// A CurveInstance carries lazily grown series caches: concurrent use of a
// single instance requires external serialization.

#include <map>
#include <optional>
#include <utility>

#include "bnls/bn_core.hpp"
#include "bnls/elliptic_aspect.hpp"

namespace bnls {

namespace detail {

inline Int mod_norm(Int a, Int p) {
  a %= p;
  return a < 0 ? a + p : a;
}
inline Int mod_mul(Int a, Int b, Int p) { return (a * b) % p; }
inline Int mod_pow(Int base, Int exp, Int p) {
  Int result = 1 % p;
  base = mod_norm(base, p);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return result;
}
inline Int mod_inv(Int a, Int p) { return mod_pow(mod_norm(a, p), p - 2, p); }

/// Square root mod an odd prime (Tonelli-Shanks); -1 if no root.
inline Int mod_sqrt(Int n, Int p) {
  n = mod_norm(n, p);
  if (n == 0) return 0;
  if (mod_pow(n, (p - 1) / 2, p) != 1) return -1;
  if (p % 4 == 3) return mod_pow(n, (p + 1) / 4, p);
  Int q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  Int m = s;
  Int c = mod_pow(z, q, p);
  Int t = mod_pow(n, q, p);
  Int r = mod_pow(n, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = mod_mul(b, b, p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return r;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

struct ECPoint {
  Int x = 0, y = 0;
  bool infinity = true;
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

/// y^2 = x^3 + Ax + B over F_p with a marked point P of exact order t
/// (t >= 3, y_P != 0) and Q = the identity.
struct CurveInstance {
  Int p = 0;
  Int A = 0, B = 0;
  Int px = 0, py = 0;
  Int t = 0;
  Int group_order = 0;

  ECPoint point() const { return ECPoint{px, py, false}; }

  ECPoint add(const ECPoint& P, const ECPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x && (P.y + Q.y) % p == 0) return ECPoint{};
    Int slope;
    if (P.x == Q.x && P.y == Q.y)
      slope = detail::mod_mul(
          detail::mod_norm(3 * detail::mod_mul(P.x, P.x, p) + A, p),
          detail::mod_inv(2 * P.y, p), p);
    else
      slope = detail::mod_mul(detail::mod_norm(Q.y - P.y, p),
                              detail::mod_inv(detail::mod_norm(Q.x - P.x, p), p),
                              p);
    const Int x3 = detail::mod_norm(
        detail::mod_mul(slope, slope, p) - P.x - Q.x, p);
    const Int y3 = detail::mod_norm(
        detail::mod_mul(slope, detail::mod_norm(P.x - x3, p), p) - P.y, p);
    return ECPoint{x3, y3, false};
  }

  ECPoint scalar_mul(ECPoint P, Int k) const {
    ECPoint acc;
    while (k > 0) {
      if (k & 1) acc = add(acc, P);
      P = add(P, P);
      k >>= 1;
    }
    return acc;
  }

  Int point_order(const ECPoint& P) const {
    Int order = group_order;
    for (Int q : detail::prime_factors(group_order))
      while (order % q == 0 && scalar_mul(P, order / q).infinity) order /= q;
    return order;
  }

  // Taylor coefficients of y in the local parameter s = x - px at (px, py)
  // (sign +1) or (px, -py) (sign -1), lazily extended.
  mutable std::map<int, std::vector<Int>> y_series_cache;

  const std::vector<Int>& y_series(int sign, std::size_t length) const {
    std::vector<Int>& e = y_series_cache[sign];
    if (e.size() >= length) return e;
    if (e.empty()) e.push_back(sign > 0 ? py : detail::mod_norm(-py, p));
    // y^2 = f(s) with f = py^2 + (3 px^2 + A) s + 3 px s^2 + s^3.
    auto f_coeff = [&](std::size_t mth) -> Int {
      switch (mth) {
        case 0: return detail::mod_mul(py, py, p);
        case 1: return detail::mod_norm(3 * detail::mod_mul(px, px, p) + A, p);
        case 2: return detail::mod_norm(3 * px, p);
        case 3: return 1;
        default: return 0;
      }
    };
    const Int inv2e0 = detail::mod_inv(2 * e[0], p);
    for (std::size_t mth = e.size(); mth < length; ++mth) {
      Int acc = f_coeff(mth);
      for (std::size_t i = 1; i < mth; ++i)
        acc = detail::mod_norm(acc - detail::mod_mul(e[i], e[mth - i], p), p);
      e.push_back(detail::mod_mul(acc, inv2e0, p));
    }
    return e;
  }

  /// Taylor expansion of x^i y^j at (px, sign * py), truncated to `length`.
  std::vector<Int> monomial_series(Int i, Int j, int sign,
                                   std::size_t length) const {
    std::vector<Int> out(length, 0);
    if (length == 0) return out;
    out[0] = 1;
    for (Int step = 0; step < i; ++step) {  // multiply by (px + s)
      Int carry = 0;
      for (std::size_t mth = 0; mth < length; ++mth) {
        const Int next = out[mth];
        out[mth] = detail::mod_norm(detail::mod_mul(out[mth], px, p) + carry, p);
        carry = next;
      }
    }
    if (j > 0) {
      const std::vector<Int>& ys = y_series(sign, length);
      std::vector<Int> prod(length, 0);
      for (std::size_t u = 0; u < length; ++u)
        for (std::size_t v = 0; u + v < length; ++v)
          prod[u + v] = detail::mod_norm(
              prod[u + v] + detail::mod_mul(out[u], ys[v], p), p);
      out = std::move(prod);
    }
    return out;
  }
};

/// First curve (in a fixed enumeration of primes >= 101 and coefficients)
/// carrying a non-2-torsion point of exact order t.
inline CurveInstance make_curve(Int t, Int search_budget = 200000) {
  detail::require(t >= 3, "make_curve: t >= 3 required (2-torsion excluded)");
  detail::check_bounded(t, "t");
  Int budget = search_budget;
  for (Int p = 101; budget > 0; ++p) {
    if (!detail::is_prime(p)) continue;
    // Legendre characters via Euler's criterion.
    auto chi = [&](Int v) -> Int {
      v = detail::mod_norm(v, p);
      if (v == 0) return 0;
      return detail::mod_pow(v, (p - 1) / 2, p) == 1 ? 1 : -1;
    };
    for (Int A = 0; A < p && budget > 0; ++A) {
      for (Int B = 0; B < p && budget > 0; ++B) {
        --budget;
        if (detail::mod_norm(4 * detail::mod_mul(detail::mod_mul(A, A, p), A, p) +
                                 27 * detail::mod_mul(B, B, p),
                             p) == 0)
          continue;
        CurveInstance curve;
        curve.p = p;
        curve.A = A;
        curve.B = B;
        curve.t = t;
        Int order = p + 1;
        for (Int x = 0; x < p; ++x)
          order += chi(detail::mod_norm(
              detail::mod_mul(detail::mod_mul(x, x, p), x, p) + A * x + B, p));
        if (order % t != 0) continue;
        curve.group_order = order;
        for (Int x = 0; x < p; ++x) {
          const Int rhs = detail::mod_norm(
              detail::mod_mul(detail::mod_mul(x, x, p), x, p) + A * x + B, p);
          if (rhs == 0) continue;  // 2-torsion
          const Int root = detail::mod_sqrt(rhs, p);
          if (root < 0) continue;
          const Int y = std::min(root, p - root);
          curve.px = x;
          curve.py = y;
          if (curve.point_order(curve.point()) == t) return curve;
        }
      }
    }
  }
  throw std::runtime_error(
      "make_curve: search budget exhausted; retry with a larger budget");
}

/// Basis of L(aP + bQ): coefficient rows over the monomial basis of
/// L(mQ), all divided by (x - x_P)^twist.
struct RRBasis {
  Int a = 0, b = 0;
  Int twist = 0;
  std::vector<std::pair<Int, Int>> monomials;  // (i, j), pole order 2i+3j
  std::vector<std::vector<Int>> funcs;
  Int dim() const { return static_cast<Int>(funcs.size()); }
};

namespace detail {

inline std::vector<std::pair<Int, Int>> monomial_basis(Int m) {
  std::vector<std::pair<Int, Int>> out;
  if (m < 0) return out;
  for (Int order = 0; order <= m; ++order) {
    if (order == 1) continue;  // no function with a simple pole at Q
    if (order % 2 == 0)
      out.push_back({order / 2, 0});
    else
      out.push_back({(order - 3) / 2, 1});
  }
  return out;
}

/// Nullspace basis of `rows` (each of width `cols`) over F_p, in a
/// canonical reduced form.
inline std::vector<std::vector<Int>> nullspace(std::vector<std::vector<Int>> rows,
                                               std::size_t cols, Int p) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Int inv = mod_inv(rows[rank][col], p);
    for (std::size_t c = col; c < cols; ++c)
      rows[rank][c] = mod_mul(rows[rank][c], inv, p);
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][col] == 0) continue;
      const Int factor = rows[rr][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[rr][c] = mod_norm(rows[rr][c] - mod_mul(factor, rows[rank][c], p), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Int>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Int> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t rr = 0; rr < rank; ++rr)
      v[pivot_col[rr]] = mod_norm(-rows[rr][free_col], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Exact basis of L(aP + bQ).  b may be negative; a may be negative
/// (forced vanishing at P) or exceed d in the class convention.
inline RRBasis rr_space(const CurveInstance& curve, Int a, Int b) {
  RRBasis basis;
  basis.a = a;
  basis.b = b;
  const Int p = curve.p;
  const Int m = a > 0 ? 2 * a + b : b;
  const Int conditions = a > 0 ? a : -a;
  const int sign = a > 0 ? -1 : +1;  // conditions sit at -P resp. P
  basis.twist = a > 0 ? a : 0;
  basis.monomials = detail::monomial_basis(m);
  if (basis.monomials.empty()) return basis;

  const std::size_t cols = basis.monomials.size();
  if (conditions == 0) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<Int> v(cols, 0);
      v[c] = 1;
      basis.funcs.push_back(std::move(v));
    }
    return basis;
  }
  std::vector<std::vector<Int>> rows(
      static_cast<std::size_t>(conditions), std::vector<Int>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    const auto [i, j] = basis.monomials[c];
    const std::vector<Int> series = curve.monomial_series(
        i, j, sign, static_cast<std::size_t>(conditions));
    for (std::size_t row = 0; row < static_cast<std::size_t>(conditions); ++row)
      rows[row][c] = series[row];
  }
  basis.funcs = detail::nullspace(std::move(rows), cols, p);
  return basis;
}

/// Vanishing order at P of a function given by its coefficient row.
/// Returns one past the expansion length when the function is zero.
inline Int order_at_p(const CurveInstance& curve, const RRBasis& basis,
                      std::span<const Int> coeffs) {
  Int max_pole = 0;
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    if (coeffs[c] != 0)
      max_pole = std::max(max_pole,
                          2 * basis.monomials[c].first + 3 * basis.monomials[c].second);
  const std::size_t length = static_cast<std::size_t>(max_pole) + 2;
  std::vector<Int> expansion(length, 0);
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == 0) continue;
    const auto [i, j] = basis.monomials[c];
    const std::vector<Int> series = curve.monomial_series(i, j, +1, length);
    for (std::size_t mth = 0; mth < length; ++mth)
      expansion[mth] = detail::mod_norm(
          expansion[mth] + detail::mod_mul(coeffs[c], series[mth], curve.p),
          curve.p);
  }
  for (std::size_t mth = 0; mth < length; ++mth)
    if (expansion[mth] != 0) return static_cast<Int>(mth) - basis.twist;
  return static_cast<Int>(length) - basis.twist;
}

/// Vanishing order at Q: monomials have pairwise distinct pole orders, so
/// the order is read off the largest monomial present.
inline Int order_at_q(const CurveInstance& curve, const RRBasis& basis,
                      std::span<const Int> coeffs) {
  (void)curve;
  Int max_pole = -1;
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    if (coeffs[c] != 0)
      max_pole = std::max(max_pole,
                          2 * basis.monomials[c].first + 3 * basis.monomials[c].second);
  detail::require(max_pole >= 0, "order_at_q: zero function");
  return -max_pole + 2 * basis.twist;
}

/// Dimension of sections of L ~ kP + (d-k)Q vanishing to orders >= (alpha,
/// beta) at (P, Q).
inline Int section_space_dim(const CurveInstance& curve, Int d, Int k,
                             Int alpha, Int beta) {
  return rr_space(curve, k - alpha, d - k - beta).dim();
}

/// Checks dim_f against the exact rank over the full (alpha, beta) grid.
inline bool verify_dim_table(const CurveInstance& curve, Int d, Int k,
                             Int cap = 10) {
  detail::require(d <= cap, "verify_dim_table: d exceeds configured cap");
  for (Int alpha = 0; alpha <= d; ++alpha)
    for (Int beta = 0; beta <= d; ++beta)
      if (section_space_dim(curve, d, k, alpha, beta) !=
          dim_f(alpha, beta, k, curve.t, d))
        return false;
  return true;
}

/// Exact-order section existence by three rank comparisons: a space over
/// F_p is never the union of two proper subspaces.
inline bool exact_pair_oracle(const CurveInstance& curve, Int d, Int k,
                              Int alpha, Int beta) {
  const Int full = section_space_dim(curve, d, k, alpha, beta);
  if (full == 0) return false;
  return full > section_space_dim(curve, d, k, alpha + 1, beta) &&
         full > section_space_dim(curve, d, k, alpha, beta + 1);
}

struct RealizedSection {
  RRBasis space;
  std::vector<Int> coeffs;
  Int ord_p = 0, ord_q = 0;  // section vanishing orders at P, Q
};

/// Constructs r+1 sections with exact per-pair orders (a_j, b_{r-j}) and
/// verifies that the span's vanishing sequences are exactly a and b; the
/// per-section orders are pairwise distinct at both points, so the span
/// attains exactly those orders.
inline std::optional<std::vector<RealizedSection>> realize(
    const CurveInstance& curve, Int d, Int k, std::span<const Int> a,
    std::span<const Int> b) {
  detail::require(a.size() == b.size(), "realize: length mismatch");
  const std::size_t n = a.size();
  std::vector<RealizedSection> sections;
  for (std::size_t j = 0; j < n; ++j) {
    const Int alpha = a[j];
    const Int beta = b[n - 1 - j];
    RRBasis space = rr_space(curve, k - alpha, d - k - beta);
    if (space.dim() == 0) return std::nullopt;
    const Int fa = alpha - k;            // target function order at P
    const Int fb = beta - (d - k);       // target function order at Q
    Int both = -1, at_p = -1, at_q = -1;
    for (Int idx = 0; idx < space.dim(); ++idx) {
      const auto& f = space.funcs[static_cast<std::size_t>(idx)];
      const Int op = order_at_p(curve, space, f);
      const Int oq = order_at_q(curve, space, f);
      if (op == fa && oq == fb && both < 0) both = idx;
      if (op == fa && at_p < 0) at_p = idx;
      if (oq == fb && at_q < 0) at_q = idx;
    }
    std::vector<Int> coeffs;
    if (both >= 0) {
      coeffs = space.funcs[static_cast<std::size_t>(both)];
    } else if (at_p >= 0 && at_q >= 0) {
      // The P-attainer exceeds fb at Q and the Q-attainer exceeds fa at P
      // (a common attainer would have been caught above), so the sum has
      // exact order on both sides.
      coeffs = space.funcs[static_cast<std::size_t>(at_p)];
      const auto& other = space.funcs[static_cast<std::size_t>(at_q)];
      for (std::size_t c = 0; c < coeffs.size(); ++c)
        coeffs[c] = detail::mod_norm(coeffs[c] + other[c], curve.p);
    } else {
      return std::nullopt;
    }
    RealizedSection sec;
    sec.ord_p = order_at_p(curve, space, coeffs) + k;
    sec.ord_q = order_at_q(curve, space, coeffs) + (d - k);
    if (sec.ord_p != alpha || sec.ord_q != beta) return std::nullopt;
    sec.space = std::move(space);
    sec.coeffs = std::move(coeffs);
    sections.push_back(std::move(sec));
  }
  // Span verification: exact, pairwise distinct orders on both sides.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sections[i].ord_p == sections[j].ord_p ||
          sections[i].ord_q == sections[j].ord_q)
        return std::nullopt;
  return sections;
}

}  // namespace bnls
