#pragma once

// Property sweep: over every two-bridge family with negative rho whose
// torsion meets the nonexistence threshold, the necessary-criterion search
// must come back empty.

#include <sstream>

#include "bnls/bounds_loci.hpp"
#include "bnls/chain_search.hpp"

namespace bnls {

struct SweepInstance {
  Int g1 = 0, g2 = 0, r = 0, d = 0, t = 0;
  Verdict::Kind verdict = Verdict::Kind::kUndetermined;
};

struct SweepResult {
  Int instances = 0;
  std::vector<SweepInstance> violations;  // anything other than NotExists
  bool ok() const { return violations.empty(); }
};

/// Runs search(crude, necessary) over all (g1,g2,t,r,d) with
/// g = g1+g2+2 <= g_max, g1 >= g2 >= 2, r <= r_max, d <= g-1,
/// rho in {-1,-2}, and max(4, threshold) <= t <= 2g.
inline SweepResult sweep_nonexistence(Int g_max, Int r_max = 2,
                                      const SearchOptions& options = {}) {
  SweepResult result;
  for (Int g2 = 2; 2 * g2 + 2 <= g_max; ++g2)
    for (Int g1 = g2; g1 + g2 + 2 <= g_max; ++g1) {
      const Int g = g1 + g2 + 2;
      for (Int r = 1; r <= r_max; ++r)
        for (Int d = r; d <= g - 1; ++d) {
          const Int p = rho(g, r, d);
          if (p != -1 && p != -2) continue;
          const Int threshold = nonexistence_threshold(g, r, d, g1, g2);
          for (Int t = std::max<Int>(4, threshold); t <= 2 * g; ++t) {
            const ChainSpec chain(g1, g2, 2, t);
            const Verdict verdict =
                search(chain, r, d, Mode::kCrude, Criterion::kNecessary, options);
            ++result.instances;
            if (verdict.kind != Verdict::Kind::kNotExists)
              result.violations.push_back(
                  SweepInstance{g1, g2, r, d, t, verdict.kind});
          }
        }
    }
  return result;
}

inline std::string describe(const SweepInstance& v) {
  std::ostringstream os;
  os << "TCBE(" << v.g1 << "," << v.g2 << ";2," << v.t << ") g^" << v.r << "_"
     << v.d << " -> " << to_string(v.verdict);
  return os.str();
}

}  // namespace bnls
