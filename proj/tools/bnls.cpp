// Command-line front end: threshold queries, chain searches, sweeps, and
// the genus-34 table/relation reports.
//
// Exit codes: 0 = decided/success, 2 = undetermined verdict, 1 = usage or
// internal error.  Data goes to stdout, diagnostics to stderr; identical
// invocations produce byte-identical output.

#include <CLI11.hpp>
#include <iostream>

#include "bnls/bounds_loci.hpp"
#include "bnls/chain_search.hpp"
#include "bnls/chain_spec.hpp"
#include "bnls/ec_oracle.hpp"
#include "bnls/report.hpp"
#include "bnls/sweep.hpp"
#include "bnls/witness_json.hpp"

namespace {

using bnls::Int;

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  for (const std::string& item : bnls::detail::split(s, ','))
    out.push_back(bnls::detail::parse_int(item, "list entry"));
  return out;
}

std::string seq_str(std::span<const Int> seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i)
    out += (i ? "," : "") + std::to_string(seq[i]);
  return out + "]";
}

void print_witness_text(const bnls::LimitWitness& w) {
  std::cout << "witness:\n";
  std::cout << "  tail1 (g=" << w.chain.g1 << "): " << seq_str(w.tail1_seq)
            << "\n";
  for (std::size_t i = 0; i < w.bridges.size(); ++i) {
    const bnls::BridgeAspect& asp = w.bridges[i];
    std::cout << "  bridge " << i + 1 << " (t=" << w.chain.t
              << "): left=" << seq_str(asp.seq_left)
              << " right=" << seq_str(asp.seq_right) << " k=" << asp.class_k
              << "\n";
  }
  std::cout << "  tail2 (g=" << w.chain.g2 << "): " << seq_str(w.tail2_seq)
            << "\n";
  const bnls::WitnessStats st = bnls::stats(w);
  std::cout << "  m=[";
  for (std::size_t i = 0; i < st.m.size(); ++i)
    std::cout << (i ? "," : "") << st.m[i];
  std::cout << "] gamma=[" << st.gamma[0] << "," << st.gamma[1] << "]\n";
}

int emit_verdict(const bnls::Verdict& verdict, const std::string& format) {
  if (format == "json") {
    std::cout << bnls::to_json(verdict).dump(2) << "\n";
  } else {
    std::cout << "verdict: " << bnls::to_string(verdict.kind) << "\n";
    std::cout << "mode: " << bnls::to_string(verdict.mode) << "\n";
    std::cout << "criterion: " << bnls::to_string(verdict.criterion) << "\n";
    std::cout << "space_complete: " << (verdict.space_complete ? "true" : "false")
              << "\n";
    if (!verdict.note.empty()) std::cout << "note: " << verdict.note << "\n";
    if (verdict.witness) print_witness_text(*verdict.witness);
  }
  return verdict.kind == bnls::Verdict::Kind::kUndetermined ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limit linear series on chains of curves with elliptic bridges"};
  app.require_subcommand(1);

  // --- rho ---
  Int rg = 0, rr = 0, rd = 0;
  std::string rho_format = "text";
  CLI::App* rho_cmd = app.add_subcommand("rho", "Brill-Noether number");
  rho_cmd->add_option("--g", rg)->required();
  rho_cmd->add_option("--r", rr)->required();
  rho_cmd->add_option("--d", rd)->required();
  rho_cmd->add_option("--format", rho_format)
      ->check(CLI::IsMember({"text", "json"}));

  // --- eh ---
  Int eg = 0, er = 0, ed = 0;
  std::string eh_alpha, eh_format = "text";
  CLI::App* eh_cmd =
      app.add_subcommand("eh", "existence with prescribed ramification");
  eh_cmd->add_option("--g", eg, "tail genus")->required();
  eh_cmd->add_option("--r", er)->required();
  eh_cmd->add_option("--d", ed)->required();
  eh_cmd->add_option("--alpha", eh_alpha, "ramification, e.g. 0,0,1")
      ->required();
  eh_cmd->add_option("--format", eh_format)
      ->check(CLI::IsMember({"text", "json"}));

  // --- bounds ---
  Int bg = 0, br = 0, bd = 0, bg1 = 0, bg2 = 0;
  std::string bounds_format = "text";
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "existence range and nonexistence threshold");
  bounds_cmd->add_option("--g", bg)->required();
  bounds_cmd->add_option("--r", br)->required();
  bounds_cmd->add_option("--d", bd)->required();
  bounds_cmd->add_option("--g1", bg1)->required();
  bounds_cmd->add_option("--g2", bg2)->required();
  bounds_cmd->add_option("--format", bounds_format)
      ->check(CLI::IsMember({"text", "json"}));

  // --- search ---
  std::string tcbe, chain_str, mode_str = "crude", crit_str = "auto",
                    search_format = "text";
  Int sr = 0, sd = 0;
  bnls::SearchOptions opts;
  CLI::App* search_cmd = app.add_subcommand("search", "decide a limit g^r_d");
  search_cmd->add_option("--tcbe", tcbe, "shorthand g1=..,g2=..[,n=..],t=..");
  search_cmd->add_option("--chain", chain_str,
                         "chain grammar tail:<g>(,ell:<t>)+,tail:<g>");
  search_cmd->add_option("--r", sr)->required();
  search_cmd->add_option("--d", sd)->required();
  search_cmd->add_option("--mode", mode_str)
      ->check(CLI::IsMember({"crude", "refined"}));
  search_cmd->add_option("--criterion", crit_str)
      ->check(CLI::IsMember({"sufficient", "necessary", "auto"}));
  search_cmd->add_option("--slack-cap", opts.slack_cap);
  search_cmd->add_flag("--no-reduction", opts.unreduced_crude,
                       "keep the full crude space for the necessary criterion");
  search_cmd->add_option("--node-cap", opts.node_candidate_cap);
  search_cmd->add_option("--time-budget-ms", opts.time_budget_ms);
  search_cmd->add_option("--jobs", opts.jobs);
  search_cmd->add_option("--format", search_format)
      ->check(CLI::IsMember({"text", "json"}));

  // --- sweep ---
  Int sweep_gmax = 14, sweep_rmax = 2;
  int sweep_jobs = 1;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "nonexistence sweep: necessary search above the threshold");
  sweep_cmd->add_option("--g-max", sweep_gmax);
  sweep_cmd->add_option("--r-max", sweep_rmax);
  sweep_cmd->add_option("--jobs", sweep_jobs);

  // --- table34 ---
  std::string table_format = "md";
  CLI::App* table_cmd =
      app.add_subcommand("table34", "genus-34 locus tables");
  table_cmd->add_option("--format", table_format)
      ->check(CLI::IsMember({"md", "csv"}));

  // --- relations ---
  Int relg = 34, relg1 = 16, relg2 = 16, rel_tmin = 2, rel_tmax = 0;
  std::string rel_format = "md";
  CLI::App* rel_cmd =
      app.add_subcommand("relations", "locus containment statements");
  rel_cmd->add_option("--g", relg)->required();
  rel_cmd->add_option("--g1", relg1)->required();
  rel_cmd->add_option("--g2", relg2)->required();
  rel_cmd->add_option("--t-min", rel_tmin);
  rel_cmd->add_option("--t-max", rel_tmax);
  rel_cmd->add_option("--format", rel_format)
      ->check(CLI::IsMember({"md", "csv"}));

  // --- oracle ---
  Int ot = 5, od = 6, obudget = 200000;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "finite-field cross-check of the elliptic-aspect rules");
  oracle_cmd->add_option("--t", ot)->required();
  oracle_cmd->add_option("--d", od);
  oracle_cmd->add_option("--budget", obudget);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rho_cmd) {
      const Int value = bnls::rho(rg, rr, rd);
      if (rho_format == "json")
        std::cout << bnls::Json{{"rho", value}}.dump() << "\n";
      else
        std::cout << value << "\n";
      return 0;
    }

    if (*eh_cmd) {
      const std::vector<Int> alpha = parse_int_list(eh_alpha);
      const bool exists = bnls::eh_exists(eg, er, ed, alpha);
      const Int dim = bnls::eh_dimension(eg, er, ed, alpha);
      if (eh_format == "json")
        std::cout << bnls::Json{{"exists", exists}, {"dimension", dim}}.dump()
                  << "\n";
      else
        std::cout << "exists: " << (exists ? "true" : "false")
                  << "\ndimension: " << dim << "\n";
      return 0;
    }

    if (*bounds_cmd) {
      const bnls::ExistenceRange range =
          bnls::existence_range(bg, br, bd, bg1, bg2);
      const Int threshold = bnls::nonexistence_threshold(bg, br, bd, bg1, bg2);
      if (bounds_format == "json") {
        bnls::Json j;
        j["locus"] = bnls::locus_label(bnls::LocusId{bg, br, bd});
        j["rho"] = bnls::rho(bg, br, bd);
        j["existence"] = bnls::range_label(range);
        j["existence_values"] = range.values();
        j["nonexistence_threshold"] = threshold;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "locus: " << bnls::locus_label(bnls::LocusId{bg, br, bd})
                  << " (rho = " << bnls::rho(bg, br, bd) << ")\n";
        std::cout << "existence: " << bnls::range_label(range) << "\n";
        std::cout << "nonexistence threshold (t >= 4): " << threshold << "\n";
      }
      return 0;
    }

    if (*search_cmd) {
      if (tcbe.empty() == chain_str.empty())
        throw std::invalid_argument(
            "search: exactly one of --tcbe / --chain is required");
      const bnls::ChainSpec chain = tcbe.empty()
                                        ? bnls::parse_chain(chain_str)
                                        : bnls::parse_tcbe_shorthand(tcbe);
      const bnls::Mode mode =
          mode_str == "refined" ? bnls::Mode::kRefined : bnls::Mode::kCrude;
      if (crit_str == "auto") {
        bnls::Verdict verdict = bnls::search(chain, sr, sd, mode,
                                             bnls::Criterion::kNecessary, opts);
        if (verdict.kind != bnls::Verdict::Kind::kNotExists) {
          bnls::Verdict suff = bnls::search(chain, sr, sd, mode,
                                            bnls::Criterion::kSufficient, opts);
          if (suff.kind == bnls::Verdict::Kind::kExists ||
              verdict.kind == bnls::Verdict::Kind::kUndetermined)
            verdict = std::move(suff);
        }
        return emit_verdict(verdict, search_format);
      }
      const bnls::Criterion crit = crit_str == "sufficient"
                                       ? bnls::Criterion::kSufficient
                                       : bnls::Criterion::kNecessary;
      return emit_verdict(bnls::search(chain, sr, sd, mode, crit, opts),
                          search_format);
    }

    if (*sweep_cmd) {
      bnls::SearchOptions sweep_opts;
      sweep_opts.jobs = sweep_jobs;
      const bnls::SweepResult result =
          bnls::sweep_nonexistence(sweep_gmax, sweep_rmax, sweep_opts);
      std::cout << "instances: " << result.instances << "\n";
      std::cout << "violations: " << result.violations.size() << "\n";
      for (const bnls::SweepInstance& v : result.violations)
        std::cout << "  " << bnls::describe(v) << "\n";
      return result.ok() ? 0 : 1;
    }

    if (*table_cmd) {
      std::cout << bnls::render_table34(table_format);
      return 0;
    }

    if (*rel_cmd) {
      const bnls::RelationReport rep =
          bnls::relation_report(relg, relg1, relg2, rel_tmin, rel_tmax);
      std::cout << bnls::render_relations(rep, rel_format);
      return 0;
    }

    if (*oracle_cmd) {
      const bnls::CurveInstance curve = bnls::make_curve(ot, obudget);
      std::cout << "curve: p=" << curve.p << " A=" << curve.A
                << " B=" << curve.B << " P=(" << curve.px << "," << curve.py
                << ") order(P)=" << curve.t << " #E=" << curve.group_order
                << "\n";
      Int mismatches = 0, cells = 0;
      bool dims_ok = true;
      for (Int k = 0; k < ot; ++k) {
        if (!bnls::verify_dim_table(curve, od, k, od)) dims_ok = false;
        for (Int alpha = 0; alpha <= od; ++alpha)
          for (Int beta = 0; beta <= od; ++beta) {
            ++cells;
            if (bnls::exact_pair_oracle(curve, od, k, alpha, beta) !=
                bnls::pair_exact_exists(alpha, beta, k, ot, od))
              ++mismatches;
          }
      }
      std::cout << "dim tables: " << (dims_ok ? "ok" : "MISMATCH") << "\n";
      std::cout << "exact-pair cells: " << cells
                << ", mismatches: " << mismatches << "\n";
      return (dims_ok && mismatches == 0) ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
