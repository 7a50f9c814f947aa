#pragma once

// Decision procedure for limit linear series g^r_d on a chain
//
//   [general tail g1] - [elliptic bridge]^n - [general tail g2]
//
// with all bridges carrying the same torsion order t.
//
// The search is a dynamic program over nodes, left to right.  The state
// passed across a node is the vanishing sequence presented to the next
// component; tails are admitted through the Eisenbud-Harris criterion and
// bridges through the elliptic-aspect criteria, with the bundle class
// quantified out per bridge (feasible classes of a bridge depend only on
// its own pair of sequences, so the smallest class can be filled in after
// the sequence tuple is fixed).
//
// Verdict soundness: Exists is only reported under the sufficient
// criterion, NotExists only under the necessary criterion over a space
// that covers every crude assignment.  Crude+necessary runs are reduced
// to refined node matchings: replacing a right-of-node sequence by the
// exact complement of its left neighbour weakly raises every nu and can
// only erase nu=0 congruence constraints, so the reduction preserves
// emptiness.  The unreduced search stays available behind an option for
// cross-validation.
//
// Determinism: when a witness exists, the lexicographically smallest one
// (node-ordered sequence values, then bridge classes) is returned
// regardless of the parallelism degree.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>

#include "bnls/bn_core.hpp"
#include "bnls/chain_spec.hpp"
#include "bnls/elliptic_aspect.hpp"

namespace bnls {

enum class Mode { kRefined, kCrude };
enum class Criterion { kSufficient, kNecessary };

inline const char* to_string(Mode m) {
  return m == Mode::kRefined ? "refined" : "crude";
}
inline const char* to_string(Criterion c) {
  return c == Criterion::kSufficient ? "sufficient" : "necessary";
}

/// Node compatibility: a_j + a'_{r-j} >= d for all j (crude), with
/// equality everywhere in refined mode.
inline bool compatible(std::span<const Int> left, std::span<const Int> right,
                       Int d, Mode mode) {
  detail::require(left.size() == right.size(), "compatible: length mismatch");
  const std::size_t n = left.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Int s = left[j] + right[n - 1 - j] - d;
    if (s < 0) return false;
    if (mode == Mode::kRefined && s != 0) return false;
  }
  return true;
}

struct BridgeAspect {
  std::vector<Int> seq_left;
  std::vector<Int> seq_right;
  Int class_k = 0;

  friend bool operator==(const BridgeAspect&, const BridgeAspect&) = default;
};

struct LimitWitness {
  GrdParams params;
  ChainSpec chain;
  Mode mode = Mode::kCrude;
  Criterion criterion = Criterion::kSufficient;
  std::vector<Int> tail1_seq;
  std::vector<BridgeAspect> bridges;
  std::vector<Int> tail2_seq;

  friend bool operator==(const LimitWitness&, const LimitWitness&) = default;
};

struct SearchOptions {
  Int slack_cap = -1;                  // per-index node slack bound; <0 => d
  bool unreduced_crude = false;        // keep full crude space for necessary
  std::size_t node_candidate_cap = 200000;
  Int time_budget_ms = 0;              // 0 => unlimited
  int jobs = 1;
};

struct Verdict {
  enum class Kind { kExists, kNotExists, kUndetermined };
  Kind kind = Kind::kUndetermined;
  Mode mode = Mode::kCrude;
  Criterion criterion = Criterion::kSufficient;
  bool space_complete = false;  // covers every crude assignment
  std::optional<LimitWitness> witness;
  std::string note;
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kExists: return "exists";
    case Verdict::Kind::kNotExists: return "not_exists";
    default: return "undetermined";
  }
}

namespace detail {

/// C(n, k) clamped to cap+1 on overflow of the cap.
inline std::uint64_t binomial_capped(Int n, Int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (Int i = 1; i <= k; ++i) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(c) * static_cast<std::uint64_t>(n - k + i);
    c = static_cast<std::uint64_t>(wide / static_cast<std::uint64_t>(i));
    if (c > cap) return cap + 1;
  }
  return c;
}

/// All strictly increasing (r+1)-tuples in [0, d], lexicographic order.
inline std::vector<std::vector<Int>> sequence_pool(Int r, Int d) {
  std::vector<std::vector<Int>> pool;
  std::vector<Int> cur(static_cast<std::size_t>(r) + 1);
  for (Int j = 0; j <= r; ++j) cur[static_cast<std::size_t>(j)] = j;
  while (true) {
    pool.push_back(cur);
    Int i = r;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - (r - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Int j = i + 1; j <= r; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return pool;
}

inline std::vector<Int> complement_seq(std::span<const Int> seq, Int d) {
  const std::size_t n = seq.size();
  std::vector<Int> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = d - seq[n - 1 - m];
  return out;
}

/// Smallest bundle class under which the bridge aspect (a, b) passes the
/// criterion, or -1 when no class works.
inline Int min_feasible_class(std::span<const Int> a, std::span<const Int> b,
                              Int t, Int d, Criterion crit) {
  const std::size_t n = a.size();
  Int zero_residue = -1;
  for (std::size_t j = 0; j < n; ++j) {
    const Int nu = d - a[j] - b[n - 1 - j];
    if (nu < 0) return -1;
    if (nu == 0) {
      const Int res = a[j] % t;
      if (zero_residue < 0)
        zero_residue = res;
      else if (zero_residue != res)
        return -1;
    }
  }
  if (crit == Criterion::kNecessary) return zero_residue < 0 ? 0 : zero_residue;

  // Sufficient criterion: nu=1 pairs forbid the residues a_j, a_j+1.
  auto forbidden = [&](Int k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d - a[j] - b[n - 1 - j] != 1) continue;
      if (congruent(a[j], k, t) || congruent(a[j] + 1, k, t)) return true;
    }
    return false;
  };
  if (zero_residue >= 0) return forbidden(zero_residue) ? -1 : zero_residue;
  for (Int k = 0; k < t; ++k)
    if (!forbidden(k)) return k;
  return -1;
}

template <typename Fn>
inline void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 512) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(64, n / (static_cast<std::size_t>(jobs) * 8));
  auto worker = [&] {
    while (true) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= n) break;
      const std::size_t end = std::min(n, start + chunk);
      for (std::size_t i = start; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
}

struct SearchEngine {
  ChainSpec chain;
  Int r, d;
  Criterion crit;
  SearchOptions opt;
  bool refined_space;
  Int cap;  // per-index slack bound used in crude space

  std::vector<std::vector<Int>> pool;
  std::vector<std::int32_t> comp_idx;
  std::vector<std::uint8_t> eh1, eh2;

  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
  std::atomic<bool> cancelled{false};

  bool expired() {
    if (!has_deadline) return false;
    if (std::chrono::steady_clock::now() > deadline) cancelled = true;
    return cancelled.load();
  }

  std::size_t size() const { return pool.size(); }

  std::int32_t index_of(const std::vector<Int>& seq) const {
    const auto it = std::lower_bound(pool.begin(), pool.end(), seq);
    return static_cast<std::int32_t>(it - pool.begin());
  }

  void build() {
    pool = sequence_pool(r, d);
    const std::size_t m = pool.size();
    comp_idx.resize(m);
    eh1.resize(m);
    eh2.resize(m);
    std::vector<Int> alpha(static_cast<std::size_t>(r) + 1);
    for (std::size_t i = 0; i < m; ++i) {
      comp_idx[i] = index_of(complement_seq(pool[i], d));
      for (std::size_t j = 0; j < alpha.size(); ++j)
        alpha[j] = pool[i][j] - static_cast<Int>(j);
      eh1[i] = eh_exists(chain.g1, r, d, alpha) ? 1 : 0;
      eh2[i] = eh_exists(chain.g2, r, d, alpha) ? 1 : 0;
    }
  }

  bool crude_compat(std::span<const Int> u, std::span<const Int> v) const {
    const std::size_t n = u.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Int s = u[j] + v[n - 1 - j] - d;
      if (s < 0 || s > cap) return false;
    }
    return true;
  }

  bool node_edge(std::int32_t u, std::int32_t v) const {
    if (refined_space) return comp_idx[static_cast<std::size_t>(u)] == v;
    return crude_compat(pool[static_cast<std::size_t>(u)],
                        pool[static_cast<std::size_t>(v)]);
  }

  bool bridge_edge(std::int32_t a, std::int32_t b) const {
    return min_feasible_class(pool[static_cast<std::size_t>(a)],
                              pool[static_cast<std::size_t>(b)], chain.t, d,
                              crit) >= 0;
  }

  // prev[u] = exists v in next with a node edge u -> v.
  void backward_node(const std::vector<std::uint8_t>& next,
                     std::vector<std::uint8_t>& prev) {
    const std::size_t m = size();
    if (refined_space) {
      for (std::size_t u = 0; u < m; ++u)
        prev[u] = next[static_cast<std::size_t>(comp_idx[u])];
      return;
    }
    parallel_for(m, opt.jobs, [&](std::size_t u) {
      if ((u & 1023u) == 0 && expired()) return;
      if (cancelled.load(std::memory_order_relaxed)) return;
      std::uint8_t hit = 0;
      for (std::size_t v = 0; v < m && !hit; ++v)
        if (next[v] && crude_compat(pool[u], pool[v])) hit = 1;
      prev[u] = hit;
    });
  }

  // prev[a] = exists b in next with a feasible bridge a -> b.
  void backward_bridge(const std::vector<std::uint8_t>& next,
                       std::vector<std::uint8_t>& prev) {
    const std::size_t m = size();
    parallel_for(m, opt.jobs, [&](std::size_t a) {
      if ((a & 1023u) == 0 && expired()) return;
      if (cancelled.load(std::memory_order_relaxed)) return;
      std::uint8_t hit = 0;
      for (std::size_t b = 0; b < m && !hit; ++b)
        if (next[b] &&
            min_feasible_class(pool[a], pool[b], chain.t, d, crit) >= 0)
          hit = 1;
      prev[a] = hit;
    });
  }
};

}  // namespace detail

inline bool validate(const LimitWitness& w);

/// Decides existence of a limit g^r_d on the chain.  Exists carries the
/// lexicographically smallest witness; NotExists asserts emptiness of the
/// complete necessary-criterion space; resource limits give Undetermined.
inline Verdict search(const ChainSpec& chain, Int r, Int d, Mode mode,
                      Criterion criterion, const SearchOptions& options = {}) {
  chain.validate();
  detail::check_bounded(r, "r");
  detail::check_bounded(d, "d");
  detail::require(r <= d, "search: r > d");

  Verdict verdict;
  verdict.mode = mode;
  verdict.criterion = criterion;

  const std::uint64_t count =
      detail::binomial_capped(d + 1, r + 1, options.node_candidate_cap);
  if (count > options.node_candidate_cap) {
    verdict.kind = Verdict::Kind::kUndetermined;
    verdict.note = "sequence pool exceeds node candidate cap";
    return verdict;
  }

  detail::SearchEngine eng;
  eng.chain = chain;
  eng.r = r;
  eng.d = d;
  eng.crit = criterion;
  eng.opt = options;
  const bool reduce = mode == Mode::kCrude &&
                      criterion == Criterion::kNecessary &&
                      !options.unreduced_crude;
  eng.refined_space = mode == Mode::kRefined || reduce;
  eng.cap = options.slack_cap < 0 ? d : std::min(options.slack_cap, d);
  if (options.time_budget_ms > 0) {
    eng.has_deadline = true;
    eng.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(options.time_budget_ms);
  }
  eng.build();

  // The searched space covers every crude assignment when it is the full
  // crude space, or (for the necessary criterion only) when dominance
  // reduces the question to refined node matchings.
  const bool crude_full = !eng.refined_space && eng.cap >= d;
  verdict.space_complete = criterion == Criterion::kNecessary
                               ? (eng.refined_space || crude_full)
                               : crude_full;
  if (reduce) verdict.note = "crude necessary reduced to refined (dominance); ";

  // Backward reachability sets, one per sequence slot:
  //   slot 0 = tail1, slots 2i-1 / 2i = bridge i left/right, slot 2n+1 = tail2.
  const Int n = chain.n_bridges;
  const std::size_t slots = static_cast<std::size_t>(2 * n + 2);
  const std::size_t m = eng.size();
  std::vector<std::vector<std::uint8_t>> reach(
      slots, std::vector<std::uint8_t>(m, 0));
  reach[slots - 1] = std::vector<std::uint8_t>(eng.eh2.begin(), eng.eh2.end());
  for (std::size_t s = slots - 1; s-- > 0;) {
    const bool is_bridge = (s % 2 == 1);  // edge s -> s+1 inside bridge (s+1)/2
    if (is_bridge)
      eng.backward_bridge(reach[s + 1], reach[s]);
    else
      eng.backward_node(reach[s + 1], reach[s]);
    if (eng.cancelled.load()) {
      verdict.kind = Verdict::Kind::kUndetermined;
      verdict.note += "time budget exceeded";
      return verdict;
    }
  }

  std::int32_t start = -1;
  for (std::size_t u = 0; u < m; ++u)
    if (eng.eh1[u] && reach[0][u]) {
      start = static_cast<std::int32_t>(u);
      break;
    }

  if (start < 0) {
    if (criterion == Criterion::kNecessary && verdict.space_complete) {
      verdict.kind = Verdict::Kind::kNotExists;
      verdict.note += "necessary-criterion space exhausted";
    } else if (criterion == Criterion::kNecessary) {
      verdict.kind = Verdict::Kind::kUndetermined;
      verdict.note +=
          "slack cap below d leaves the crude space incomplete; empty result "
          "is not a nonexistence certificate";
    } else {
      verdict.kind = Verdict::Kind::kUndetermined;
      verdict.note +=
          "sufficient-criterion space exhausted without witness; not a "
          "nonexistence certificate";
    }
    return verdict;
  }

  // Lexicographically smallest witness: greedy slot-by-slot choice among
  // candidates whose continuation stays reachable.
  std::vector<std::int32_t> chosen(slots, -1);
  chosen[0] = start;
  for (std::size_t s = 1; s < slots; ++s) {
    const bool is_bridge_edge = ((s - 1) % 2 == 1);
    std::int32_t pick = -1;
    for (std::size_t v = 0; v < m; ++v) {
      if (!reach[s][v]) continue;
      const bool edge_ok = is_bridge_edge
                               ? eng.bridge_edge(chosen[s - 1], static_cast<std::int32_t>(v))
                               : eng.node_edge(chosen[s - 1], static_cast<std::int32_t>(v));
      if (edge_ok) {
        pick = static_cast<std::int32_t>(v);
        break;
      }
    }
    detail::require(pick >= 0, "internal: reconstruction lost reachability");
    chosen[s] = pick;
  }

  LimitWitness w;
  w.params = GrdParams(chain.total_genus(), r, d);
  w.chain = chain;
  w.mode = eng.refined_space ? Mode::kRefined : Mode::kCrude;
  w.criterion = criterion;
  w.tail1_seq = eng.pool[static_cast<std::size_t>(chosen[0])];
  w.tail2_seq = eng.pool[static_cast<std::size_t>(chosen[slots - 1])];
  for (Int i = 1; i <= n; ++i) {
    BridgeAspect asp;
    asp.seq_left = eng.pool[static_cast<std::size_t>(chosen[static_cast<std::size_t>(2 * i - 1)])];
    asp.seq_right = eng.pool[static_cast<std::size_t>(chosen[static_cast<std::size_t>(2 * i)])];
    asp.class_k = detail::min_feasible_class(asp.seq_left, asp.seq_right,
                                             chain.t, d, criterion);
    w.bridges.push_back(std::move(asp));
  }

  if (criterion == Criterion::kSufficient) {
    verdict.kind = Verdict::Kind::kExists;
    verdict.note += "witness validated under the sufficient criterion";
  } else {
    verdict.kind = Verdict::Kind::kUndetermined;
    verdict.note +=
        "necessary-feasible candidate found; the necessary criterion alone "
        "does not certify existence";
  }
  verdict.witness = std::move(w);
  return verdict;
}

/// Independent re-check of every constraint of a witness: EH on tails,
/// bridge feasibility under the witness's criterion, node compatibility
/// under its mode.
inline bool validate(const LimitWitness& w) {
  try {
    w.chain.validate();
    w.params.validate();
    if (w.params.g != w.chain.total_genus()) return false;
    if (static_cast<Int>(w.bridges.size()) != w.chain.n_bridges) return false;
    const Int r = w.params.r, d = w.params.d;
    detail::check_vanishing(w.tail1_seq, r, d);
    detail::check_vanishing(w.tail2_seq, r, d);
    for (const BridgeAspect& asp : w.bridges) {
      detail::check_vanishing(asp.seq_left, r, d);
      detail::check_vanishing(asp.seq_right, r, d);
      if (asp.class_k < 0 || asp.class_k >= w.chain.t) return false;
    }

    auto ram = [](std::span<const Int> seq) {
      std::vector<Int> alpha(seq.size());
      for (std::size_t j = 0; j < seq.size(); ++j)
        alpha[j] = seq[j] - static_cast<Int>(j);
      return alpha;
    };
    if (!eh_exists(w.chain.g1, r, d, ram(w.tail1_seq))) return false;
    if (!eh_exists(w.chain.g2, r, d, ram(w.tail2_seq))) return false;

    std::span<const Int> left = w.tail1_seq;
    for (const BridgeAspect& asp : w.bridges) {
      if (!compatible(left, asp.seq_left, d, w.mode)) return false;
      const bool ok =
          w.criterion == Criterion::kSufficient
              ? feasible_sufficient(asp.seq_left, asp.seq_right, asp.class_k,
                                    w.chain.t, d)
              : feasible_necessary(asp.seq_left, asp.seq_right, asp.class_k,
                                   w.chain.t, d);
      if (!ok) return false;
      left = asp.seq_right;
    }
    return compatible(left, w.tail2_seq, d, w.mode);
  } catch (const std::exception&) {
    return false;
  }
}

/// Witness statistics: node slacks, per-bridge nu profiles and zero-count
/// excesses m_i, and tail adjusted Brill-Noether numbers gamma_i.  For a
/// two-bridge chain the named eta/beta layout matches the usual reading:
/// eta_{ij} pairs the tail-i aspect index j with the bridge complement,
/// beta_j sits at the middle node.
struct WitnessStats {
  std::vector<std::vector<Int>> node_slack;  // (n+1) x (r+1), chain-oriented
  std::array<std::vector<Int>, 2> eta;       // tail-adjacent nodes, tail-first
  std::vector<Int> beta;                     // middle node when n == 2
  std::vector<std::vector<Int>> nu;          // n x (r+1)
  std::vector<Int> m;                        // n
  std::array<Int, 2> gamma{0, 0};
};

inline WitnessStats stats(const LimitWitness& w) {
  detail::require(validate(w), "stats: witness fails validation");
  const Int r = w.params.r, d = w.params.d;
  const Int n = w.chain.n_bridges;
  const std::size_t len = static_cast<std::size_t>(r) + 1;
  WitnessStats st;

  auto slack = [&](std::span<const Int> u, std::span<const Int> v) {
    std::vector<Int> s(len);
    for (std::size_t j = 0; j < len; ++j) s[j] = u[j] + v[len - 1 - j] - d;
    return s;
  };
  auto total_ram = [&](std::span<const Int> seq) {
    Int t = 0;
    for (std::size_t j = 0; j < len; ++j) t += seq[j] - static_cast<Int>(j);
    return t;
  };

  std::span<const Int> left = w.tail1_seq;
  for (const BridgeAspect& asp : w.bridges) {
    st.node_slack.push_back(slack(left, asp.seq_left));
    left = asp.seq_right;
  }
  st.node_slack.push_back(slack(left, w.tail2_seq));

  st.eta[0] = slack(w.tail1_seq, w.bridges.front().seq_left);
  st.eta[1] = slack(w.tail2_seq, w.bridges.back().seq_right);
  if (n == 2) st.beta = st.node_slack[1];

  for (Int i = 0; i < n; ++i) {
    const BridgeAspect& asp = w.bridges[static_cast<std::size_t>(i)];
    // The marked-point side of the last bridge is its right node.
    const bool flip = (i == n - 1) && n >= 2;
    std::span<const Int> p_side = flip ? asp.seq_right : asp.seq_left;
    std::span<const Int> q_side = flip ? asp.seq_left : asp.seq_right;
    std::vector<Int> nu_i(len);
    for (std::size_t j = 0; j < len; ++j)
      nu_i[j] = d - p_side[j] - q_side[len - 1 - j];
    Int clipped = 0;
    for (Int v : nu_i) clipped += std::max<Int>(v - 1, 0);
    const Int adj =
        rho(1, r, d) - total_ram(asp.seq_left) - total_ram(asp.seq_right);
    st.nu.push_back(std::move(nu_i));
    st.m.push_back(-adj + clipped);
  }

  st.gamma[0] = rho(w.chain.g1, r, d) - total_ram(w.tail1_seq);
  st.gamma[1] = rho(w.chain.g2, r, d) - total_ram(w.tail2_seq);
  return st;
}

/// Additivity of adjusted Brill-Noether numbers along the chain, plus its
/// two-bridge specialization balancing m_1 + m_2 against the slack totals.
struct AdditivityReport {
  Int lhs = 0;  // sum of adjusted rho of all aspects at their nodes
  Int rhs = 0;  // rho(g,r,d) minus total node slack
  bool balance_applicable = false;  // n == 2 specialization
  Int balance_lhs = 0;              // m_1 + m_2
  Int balance_rhs = 0;
  bool ok() const {
    return lhs == rhs && (!balance_applicable || balance_lhs == balance_rhs);
  }
};

inline AdditivityReport check_additivity(const LimitWitness& w) {
  const WitnessStats st = stats(w);
  const Int r = w.params.r, d = w.params.d;
  const std::size_t len = static_cast<std::size_t>(r) + 1;
  auto total_ram = [&](std::span<const Int> seq) {
    Int t = 0;
    for (std::size_t j = 0; j < len; ++j) t += seq[j] - static_cast<Int>(j);
    return t;
  };

  AdditivityReport rep;
  rep.lhs = st.gamma[0] + st.gamma[1];
  for (const BridgeAspect& asp : w.bridges)
    rep.lhs += rho(1, r, d) - total_ram(asp.seq_left) - total_ram(asp.seq_right);
  rep.rhs = w.params.rho_value();
  for (const auto& node : st.node_slack)
    for (Int s : node) rep.rhs -= s;

  if (w.chain.n_bridges == 2) {
    rep.balance_applicable = true;
    rep.balance_lhs = st.m[0] + st.m[1];
    rep.balance_rhs = -w.params.rho_value() + st.gamma[0] + st.gamma[1];
    for (int i = 0; i < 2; ++i)
      for (Int e : st.eta[static_cast<std::size_t>(i)]) rep.balance_rhs += e;
    for (Int b : st.beta) rep.balance_rhs += b;
    for (const auto& nu_i : st.nu)
      for (Int v : nu_i) rep.balance_rhs += std::max<Int>(v - 1, 0);
  }
  return rep;
}

/// Top-order bounds at the two tail-adjacent nodes: the bridge aspect's
/// a_r at a node next to a general tail is capped by the tail genus plus
/// r, its adjusted rho, and the node slack pairing the opposite indices.
inline std::vector<bool> check_top_order_bounds(const LimitWitness& w) {
  const WitnessStats st = stats(w);
  const Int r = w.params.r, d = w.params.d;
  std::vector<bool> out;
  // Node 0, general tail on the left.
  {
    const Int a_r = w.bridges.front().seq_left.back();
    const Int eta0 = w.tail1_seq.front() + a_r - d;
    out.push_back(a_r <= w.chain.g1 + r + st.gamma[0] + eta0);
  }
  // Node n, general tail on the right.
  {
    const Int a_r = w.bridges.back().seq_right.back();
    const Int eta_r = a_r + w.tail2_seq.front() - d;
    out.push_back(a_r <= w.chain.g2 + r + st.gamma[1] + eta_r);
  }
  return out;
}

/// Two-bridge torsion inequalities: whenever m_i >= 1, one of the two
/// half-degree bounds must hold.  All comparisons are scaled by 2 to stay
/// in integers.
struct TorsionBoundsReport {
  bool m1_applicable = false, m1_first = false, m1_second = false;
  bool m2_applicable = false, m2_first = false, m2_second = false;
  bool ok() const {
    return (!m1_applicable || m1_first || m1_second) &&
           (!m2_applicable || m2_first || m2_second);
  }
};

inline TorsionBoundsReport check_torsion_bounds(const LimitWitness& w) {
  detail::require(w.chain.n_bridges == 2,
                  "check_torsion_bounds: requires a two-bridge chain");
  const WitnessStats st = stats(w);
  const Int r = w.params.r, d = w.params.d, t = w.chain.t;
  const std::size_t rr = static_cast<std::size_t>(r);
  const Int eta10 = st.eta[0][0];
  const Int eta20 = st.eta[1][0];
  const Int nu1r = st.nu[0][rr];
  const Int nu2r = st.nu[1][rr];
  const Int beta0 = st.beta[0];
  const Int betar = st.beta[rr];

  TorsionBoundsReport rep;
  if (st.m[0] >= 1) {
    rep.m1_applicable = true;
    rep.m1_first = d + st.m[0] * t + 2 * (nu1r >= 1 ? 1 : 0) <=
                   2 * (w.chain.g1 + r + st.gamma[0] + eta10);
    rep.m1_second = d + st.m[0] * t - 2 * betar - 2 * nu2r <
                    2 * (w.chain.g2 + r + st.gamma[1] + eta20);
  }
  if (st.m[1] >= 1) {
    rep.m2_applicable = true;
    rep.m2_first = d + st.m[1] * t <= 2 * (w.chain.g2 + r + st.gamma[1] + eta20);
    rep.m2_second = d + st.m[1] * t - 2 * beta0 - 2 * nu1r +
                        2 * (nu2r >= 1 ? 1 : 0) <
                    2 * (w.chain.g1 + r + st.gamma[0] + eta10);
  }
  return rep;
}

}  // namespace bnls
