#pragma once

// Closed-form existence/nonexistence thresholds in the torsion order t for
// limit series g^r_d on two-bridge chains, Brill-Noether locus enumeration,
// and the derived locus-relation reports.
//
// Conventions: the nonexistence threshold is returned as the smallest
// excluded t; its validity is restricted to t >= 4, which relation
// classification honours (no OUT verdict below 4).  The fractional bound
// for rho <= -2 is evaluated with an exact integer ceiling.

#include <algorithm>
#include <optional>
#include <vector>

#include "bnls/bn_core.hpp"

namespace bnls {

inline Int kronecker_delta(Int a, Int b) { return a == b ? 1 : 0; }

namespace detail {

inline Int ceil_div(Int num, Int den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

inline void check_family(Int g, Int g1, Int g2) {
  require(g1 >= g2, "family: g1 >= g2 required");
  require(g2 >= 2, "family: g2 >= 2 required");
  require(g1 + g2 + 2 == g, "family: g != g1 + g2 + 2");
}

}  // namespace detail

/// A Brill-Noether locus M^r_{g,d}.
struct LocusId {
  Int g = 0, r = 0, d = 0;
  Int rho_value() const { return rho(g, r, d); }
  bool normalized() const { return d <= g - 1; }
  friend bool operator==(const LocusId&, const LocusId&) = default;
  friend auto operator<=>(const LocusId& a, const LocusId& b) {
    return std::tie(a.r, a.d, a.g) <=> std::tie(b.r, b.d, b.g);
  }
};

/// The two-bridge family Delta(g1, g2; 2, t) inside genus g = g1 + g2 + 2.
struct TcbeFamily {
  Int g1 = 2, g2 = 2, t = 2;
  TcbeFamily(Int g1_, Int g2_, Int t_) : g1(g1_), g2(g2_), t(t_) {
    detail::require(g1 >= g2 && g2 >= 2, "TcbeFamily: need g1 >= g2 >= 2");
    detail::require(t >= 2, "TcbeFamily: t >= 2");
  }
  Int genus() const { return g1 + g2 + 2; }
};

/// Smallest T such that t >= T rules out every limit g^r_d on the
/// two-bridge chain (valid for t >= 4).  Requires rho(g,r,d) < 0.
inline Int nonexistence_threshold(Int g, Int r, Int d, Int g1, Int g2) {
  detail::check_family(g, g1, g2);
  const Int p = rho(g, r, d);
  detail::require(p < 0, "nonexistence_threshold: rho must be negative");
  const Int delta = kronecker_delta(g1, g2);
  if (p == -1) return g - d + 2 * r + (g1 - g2) + delta;
  return detail::ceil_div(2 * (g - d + 2 * r - 2 + (g1 - g2) + delta), -p);
}

/// Set of torsion orders certifying existence of a smoothable limit g^r_d.
/// For r = 1 the set carries a parity constraint; for r >= 2 it is an
/// integer interval (possibly empty).
struct ExistenceRange {
  Int lo = 0;
  Int hi = -1;
  std::optional<Int> parity;  // residue mod 2 when r = 1

  bool empty() const {
    if (lo > hi) return true;
    if (!parity) return false;
    // smallest admissible value with the right parity
    Int first = lo + ((*parity - lo) % 2 + 2) % 2;
    return first > hi;
  }
  bool contains(Int t) const {
    if (t < lo || t > hi) return false;
    return !parity || (t % 2 == *parity);
  }
  std::vector<Int> values() const {
    std::vector<Int> out;
    for (Int t = lo; t <= hi; ++t)
      if (contains(t)) out.push_back(t);
    return out;
  }
};

/// Existence range for rho in {-1, -2}: r = 1 gives t <= g2 + 3 + rho with
/// t = g1 + 1 (mod 2); r >= 2 gives [r + 3 + (g1-g2), g - d + 2r + rho].
inline ExistenceRange existence_range(Int g, Int r, Int d, Int g1, Int g2) {
  detail::check_family(g, g1, g2);
  const Int p = rho(g, r, d);
  detail::require(p == -1 || p == -2, "existence_range: rho must be -1 or -2");
  detail::require(r >= 1, "existence_range: r >= 1 required");
  ExistenceRange range;
  if (r == 1) {
    range.lo = 2;
    range.hi = g2 + 3 + p;
    range.parity = (g1 + 1) % 2;
  } else {
    range.lo = r + 3 + (g1 - g2);
    range.hi = g - d + 2 * r + p;
  }
  return range;
}

/// Lower endpoint of the imported existence range, split on the parity of
/// r and of d + 2 + (g1 - g2 + h)/2.
inline Int tmin(Int r, Int g1, Int g2, Int d, Int h) {
  detail::require(r >= 2, "tmin: r >= 2 required");
  detail::require(h == 0 || h == 1, "tmin: h must be 0 or 1");
  if (r % 2 == 0) return r + 2 + (g1 - g2);
  const Int diff = g1 - g2 + h;
  detail::require(diff % 2 == 0, "tmin: g1 - g2 + h must be even for odd r");
  const Int half = diff / 2;
  if ((d + 2 + half) % 2 != 0) return r + 2 + half;
  return r + 3 + half;
}

/// The imported existence range in its original form: rho = -2 + h with
/// h in {0,1} and g1 - h >= g2 >= 2.
inline ExistenceRange existence_range_sk(Int g, Int r, Int d, Int g1, Int g2) {
  detail::check_family(g, g1, g2);
  const Int p = rho(g, r, d);
  detail::require(p == -1 || p == -2,
                  "existence_range_sk: rho must be -1 or -2");
  const Int h = p + 2;
  detail::require(g1 - h >= g2, "existence_range_sk: requires g1 - h >= g2");
  detail::require(r >= 1, "existence_range_sk: r >= 1 required");
  ExistenceRange range;
  if (r == 1) {
    range.lo = 2;
    range.hi = g2 + h + 1;
    range.parity = (g1 + 1) % 2;
  } else {
    range.lo = tmin(r, g1, g2, d, h);
    range.hi = g - d + 2 * r - 2 + h;
  }
  return range;
}

/// All normalized loci (r >= 1, d <= g-1) whose rho lies in the target set.
inline std::vector<LocusId> enumerate_loci(Int g,
                                           std::span<const Int> rho_targets) {
  detail::require(g >= 3, "enumerate_loci: g >= 3 required");
  std::vector<LocusId> out;
  for (Int r = 1; r <= g; ++r)
    for (Int d = r; d <= g - 1; ++d) {
      const Int p = rho(g, r, d);
      for (Int target : rho_targets)
        if (p == target) {
          out.push_back(LocusId{g, r, d});
          break;
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LocusId> enumerate_loci(Int g,
                                           std::initializer_list<Int> targets) {
  return enumerate_loci(g, std::span<const Int>(targets.begin(), targets.size()));
}

enum class LocusClass { kIn, kOut, kGap };

inline const char* to_string(LocusClass c) {
  switch (c) {
    case LocusClass::kIn: return "IN";
    case LocusClass::kOut: return "OUT";
    default: return "GAP";
  }
}

/// Classifies the family Delta(g1,g2;2,t) against one locus: IN when t is
/// in the existence range, OUT when t >= max(4, threshold), GAP otherwise
/// (wrong-parity t for r = 1 is never claimed OUT).
inline LocusClass classify(const LocusId& locus, Int g1, Int g2, Int t) {
  if (existence_range(locus.g, locus.r, locus.d, g1, g2).contains(t))
    return LocusClass::kIn;
  if (t >= 4 && t >= nonexistence_threshold(locus.g, locus.r, locus.d, g1, g2))
    return LocusClass::kOut;
  return LocusClass::kGap;
}

struct RelationRow {
  Int t = 0;
  std::vector<LocusClass> classes;  // aligned with RelationReport::loci
};

/// One derivable containment Delta(g1,g2;2,t) c= (intersection of IN loci)
/// minus (union of OUT loci).
struct RelationStatement {
  Int t = 0;
  std::vector<LocusId> in_loci;
  std::vector<LocusId> out_loci;
};

struct RelationReport {
  Int g = 0, g1 = 0, g2 = 0;
  std::vector<LocusId> loci;  // all loci with rho in {-1,-2}, sorted
  std::vector<RelationRow> rows;
  std::vector<RelationStatement> statements;
};

/// Builds the per-t classification table and every derivable containment
/// statement for t in [t_min, t_max].  t_max <= 0 selects the largest
/// nonexistence threshold among the loci, past which nothing changes.
inline RelationReport relation_report(Int g, Int g1, Int g2, Int t_min = 2,
                                      Int t_max = 0) {
  detail::check_family(g, g1, g2);
  RelationReport rep;
  rep.g = g;
  rep.g1 = g1;
  rep.g2 = g2;
  rep.loci = enumerate_loci(g, {-1, -2});
  if (t_max <= 0) {
    t_max = t_min;
    for (const LocusId& L : rep.loci)
      t_max = std::max(
          t_max, std::max<Int>(4, nonexistence_threshold(L.g, L.r, L.d, g1, g2)));
  }
  for (Int t = t_min; t <= t_max; ++t) {
    RelationRow row;
    row.t = t;
    RelationStatement st;
    st.t = t;
    for (const LocusId& L : rep.loci) {
      const LocusClass c = classify(L, g1, g2, t);
      row.classes.push_back(c);
      if (c == LocusClass::kIn) st.in_loci.push_back(L);
      if (c == LocusClass::kOut) st.out_loci.push_back(L);
    }
    rep.rows.push_back(std::move(row));
    if (!st.in_loci.empty()) rep.statements.push_back(std::move(st));
  }
  return rep;
}

/// Certificate that Delta(ceil((g-2)/2), floor((g-2)/2); 2, t_star) lies in
/// one locus and misses another.
struct SupportCertificate {
  Int t_star = 0;
  Int g1 = 0, g2 = 0;
  Int threshold_other = 0;  // nonexistence threshold of the excluded locus
};

/// Distinct-support witness for two rho = -2 loci (s > r >= 2, d,e <= g-1,
/// e != d and e != 2g-2-d): t_star = g-d+2r-2 admits g^r_d and excludes
/// g^s_e.  Returns nothing when the hypotheses or the certification fail.
inline std::optional<SupportCertificate> distinct_support_pair(Int g, Int r,
                                                               Int d, Int s,
                                                               Int e) {
  if (rho(g, r, d) != -2 || rho(g, s, e) != -2) return std::nullopt;
  if (!(s > r && r >= 2)) return std::nullopt;
  if (d > g - 1 || e > g - 1) return std::nullopt;
  if (e == d || e == 2 * g - 2 - d) return std::nullopt;
  SupportCertificate cert;
  cert.g1 = (g - 2 + 1) / 2;
  cert.g2 = (g - 2) / 2;
  cert.t_star = g - d + 2 * r - 2;
  if (cert.t_star < r + 4) return std::nullopt;
  if (!existence_range(g, r, d, cert.g1, cert.g2).contains(cert.t_star))
    return std::nullopt;
  cert.threshold_other = nonexistence_threshold(g, s, e, cert.g1, cert.g2);
  if (cert.t_star < std::max<Int>(4, cert.threshold_other)) return std::nullopt;
  return cert;
}

/// Witness that a rho = -2 locus M^r_{g,d} is not inside the divisor
/// M^s_{g,e} (rho = -1): requires e - 2s >= d - 2r + 3, or the r = 2,
/// g >= 34 strengthening which covers every divisor with s >= 2.
inline std::optional<SupportCertificate> not_in_divisor(Int g, Int r, Int d,
                                                        Int s, Int e) {
  if (rho(g, r, d) != -2 || rho(g, s, e) != -1) return std::nullopt;
  if (r < 2) return std::nullopt;
  const bool narrow = e - 2 * s >= d - 2 * r + 3;
  const bool wide = r == 2 && g >= 34 && s >= 2;
  if (!narrow && !wide) return std::nullopt;
  SupportCertificate cert;
  cert.g1 = (g - 2 + 1) / 2;
  cert.g2 = (g - 2) / 2;
  cert.t_star = g - d + 2 * r - 2;
  if (cert.t_star < r + 4) return std::nullopt;
  if (!existence_range(g, r, d, cert.g1, cert.g2).contains(cert.t_star))
    return std::nullopt;
  cert.threshold_other = nonexistence_threshold(g, s, e, cert.g1, cert.g2);
  if (cert.t_star < std::max<Int>(4, cert.threshold_other)) return std::nullopt;
  return cert;
}

/// Dimension of the two-bridge family inside the moduli of genus g.
inline Int family_dimension(Int g) {
  detail::require(g >= 4, "family_dimension: g >= 4 required");
  return 3 * g - 8;
}

/// Dimension of the moduli of n-pointed genus-g curves.
inline Int moduli_dimension(Int g, Int n) { return 3 * g - 3 + n; }

}  // namespace bnls
