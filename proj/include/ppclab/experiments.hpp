#pragma once

// Seeded Monte Carlo harnesses that turn the pair-correlation limit theorems
// into recorded, repeatable statistical checks:
//
//   * ppc_convergence  — F at beta = 1/d along an N ladder vs the Poissonian
//                        target (2s)^d, per seed.
//   * expectation      — mean of F over seeds vs its expected value; for
//                        one-dimensional perturbed sequences the target
//                        carries the finite-N window correction.
//   * variance_decay   — sample variance of F per rung and the least-squares
//                        slope of log Var against log N.
//   * beta_sweep       — F across a list of scaling exponents beta.
//
// Every run is reproducible from (config, seed list): sequences come from
// counter-based generators, rows are sorted by (N, beta, s, seed), and the
// report embeds a SHA-1 fingerprint of the canonical config text.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ppclab/detail/sha1.hpp"
#include "ppclab/io.hpp"
#include "ppclab/pair_correlation.hpp"
#include "ppclab/sequences.hpp"

namespace ppclab {

struct ExperimentConfig {
  SequenceSpec spec;
  std::vector<std::uint64_t> n_ladder;
  std::vector<double> s_values;
  std::vector<double> betas;  // beta_sweep only; other harnesses use 1/d
  std::vector<std::uint64_t> seeds;
  double tolerance = 0.05;
  std::string out_path;
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  int dim = 0;
  double beta = 0.0;
  double s = 0.0;
  double f = 0.0;
  double target = 0.0;
  double abs_err = 0.0;
};

struct ExperimentSummaryRow {
  std::uint64_t n = 0;
  double s = 0.0;
  double mean_f = 0.0;
  double var_f = 0.0;  // sample variance (n-1 denominator), 0 for one seed
  double max_abs_err = 0.0;
  std::size_t n_seeds = 0;
};

struct ExperimentReport {
  std::string experiment;
  std::string spec_text;
  std::string config_hash;  // SHA-1 of the canonical config text
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentSummaryRow> summary;  // empty for beta_sweep
  double fitted_slope = std::numeric_limits<double>::quiet_NaN();
};

// Poissonian pair correlation target: the volume of the rescaled sup-metric
// ball, (2s)^d.
inline double poissonian_target(int dim, double s) {
  return std::pow(2.0 * s, static_cast<double>(dim));
}

// Finite-N expected value of F for a perturbed sequence: the window of width
// 2s/N^(1/d) clips the triangular perturbation density, giving the corrected
// factor (1 - s^2/(eps^2 N^2)) per coordinate at d = 1. Meaningful for d = 1;
// for d >= 2 only the N -> infinity limit (2s)^d is asserted anywhere.
inline double perturbed_expectation_target(int dim, double s, double eps,
                                           std::uint64_t n) {
  const double nd = static_cast<double>(n);
  double corr = 1.0 - s * s / (eps * eps * nd * nd);
  if (corr < 0.0) corr = 0.0;
  return std::pow(2.0 * s * corr, static_cast<double>(dim));
}

namespace detail {

inline bool is_stochastic(const SequenceSpec& spec) {
  return spec.kind == SequenceKind::kPerturbed ||
         spec.kind == SequenceKind::kIid;
}

inline void validate_common(const ExperimentConfig& cfg) {
  if (cfg.n_ladder.empty())
    throw std::invalid_argument("experiment needs a nonempty N ladder");
  for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
    if (cfg.n_ladder[i] < 2)
      throw std::invalid_argument("ladder entries must be >= 2");
    if (i > 0 && cfg.n_ladder[i] <= cfg.n_ladder[i - 1])
      throw std::invalid_argument("N ladder must be strictly increasing");
  }
  if (cfg.s_values.empty())
    throw std::invalid_argument("experiment needs at least one s value");
  for (double s : cfg.s_values)
    if (!(s > 0.0)) throw std::invalid_argument("s values must be positive");
}

inline std::vector<std::uint64_t> effective_seeds(const ExperimentConfig& cfg,
                                                  bool require_seeds) {
  if (is_stochastic(cfg.spec)) {
    if (cfg.seeds.empty())
      throw std::invalid_argument(
          "stochastic sequence specs need a nonempty seed list");
    return cfg.seeds;
  }
  if (require_seeds && cfg.seeds.size() > 1)
    throw std::invalid_argument(
        "deterministic sequence specs take at most one (ignored) seed");
  return {cfg.spec.seed};  // single pass; seed column records the spec's own
}

// Canonical config text: sorted key=value lines; doubles in shortest
// round-trip form. Hashed into the report for reproducibility audits.
inline std::string canonical_config_text(const std::string& experiment,
                                         const ExperimentConfig& cfg) {
  auto join_u64 = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(v[i]);
    }
    return s;
  };
  auto join_d = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back(',');
      s += format_double(v[i]);
    }
    return s;
  };
  // keys already in sorted order
  std::string text;
  text += "beta=" + join_d(cfg.betas) + "\n";
  text += "experiment=" + experiment + "\n";
  text += "ladder=" + join_u64(cfg.n_ladder) + "\n";
  text += "s=" + join_d(cfg.s_values) + "\n";
  text += "seeds=" + join_u64(cfg.seeds) + "\n";
  text += "spec=" + cfg.spec.text + "\n";
  text += "tolerance=" + format_double(cfg.tolerance) + "\n";
  return text;
}

inline void sort_rows(std::vector<ExperimentRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ExperimentRow& a, const ExperimentRow& b) {
              return std::tie(a.n, a.beta, a.s, a.seed) <
                     std::tie(b.n, b.beta, b.s, b.seed);
            });
}

inline std::vector<ExperimentSummaryRow> summarize(
    const std::vector<ExperimentRow>& rows) {
  // rows are sorted by (N, beta, s, seed); group by (N, s)
  std::vector<ExperimentSummaryRow> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    double sum = 0.0, max_err = 0.0;
    double lo = rows[i].f, hi = rows[i].f;
    while (j < rows.size() && rows[j].n == rows[i].n && rows[j].s == rows[i].s) {
      sum += rows[j].f;
      max_err = std::max(max_err, rows[j].abs_err);
      lo = std::min(lo, rows[j].f);
      hi = std::max(hi, rows[j].f);
      ++j;
    }
    const std::size_t k = j - i;
    const double mean = sum / static_cast<double>(k);
    double var = 0.0;
    // A constant sample has variance exactly 0; computing it through the
    // rounded mean would otherwise leave ~1e-34 noise and hide degeneracy.
    if (k > 1 && lo != hi) {
      double acc = 0.0;
      for (std::size_t t = i; t < j; ++t) {
        const double dlt = rows[t].f - mean;
        acc += dlt * dlt;
      }
      var = acc / static_cast<double>(k - 1);
    }
    out.push_back({rows[i].n, rows[i].s, mean, var, max_err, k});
    i = j;
  }
  std::sort(out.begin(), out.end(),
            [](const ExperimentSummaryRow& a, const ExperimentSummaryRow& b) {
              return std::tie(a.n, a.s) < std::tie(b.n, b.s);
            });
  return out;
}

enum class TargetRule { kPoissonian, kExpectation };

// Shared harness: per seed, generate once at the top rung and evaluate every
// prefix; the counter-based generators make prefixes identical to fresh
// generation at the smaller N.
inline ExperimentReport run_harness(const std::string& name,
                                    const ExperimentConfig& cfg,
                                    const std::vector<double>& betas_or_empty,
                                    TargetRule target_rule,
                                    bool require_seeds) {
  validate_common(cfg);
  const auto seeds = effective_seeds(cfg, require_seeds);

  ExperimentReport report;
  report.experiment = name;
  report.spec_text = cfg.spec.text;
  report.config_hash = sha1_hex(canonical_config_text(name, cfg));

  for (std::uint64_t seed : seeds) {
    SequenceSpec run_spec = cfg.spec;
    if (is_stochastic(cfg.spec)) run_spec.seed = seed;
    const TorusPointSet full = generate(run_spec, cfg.n_ladder.back());
    const int d = full.dim();
    const std::vector<double> betas =
        betas_or_empty.empty()
            ? std::vector<double>{1.0 / static_cast<double>(d)}
            : betas_or_empty;
    for (std::uint64_t n : cfg.n_ladder) {
      const TorusPointSet pts = prefix(full, n);
      for (double beta : betas) {
        const PairCorrResult pc = pair_correlation(pts, beta, cfg.s_values);
        for (const PairCorrRow& row : pc.rows) {
          double target = poissonian_target(d, row.s);
          if (target_rule == TargetRule::kExpectation &&
              cfg.spec.kind == SequenceKind::kPerturbed && d == 1)
            target = perturbed_expectation_target(d, row.s, cfg.spec.eps, n);
          report.rows.push_back({seed, n, d, beta, row.s, row.value, target,
                                 std::abs(row.value - target)});
        }
      }
    }
  }
  sort_rows(report.rows);
  return report;
}

}  // namespace detail

// F at beta = 1/d along the ladder vs the Poissonian target, one row per
// (seed, N, s).
inline ExperimentReport run_ppc_convergence(const ExperimentConfig& cfg) {
  ExperimentReport r = detail::run_harness("ppc_convergence", cfg, {},
                                           detail::TargetRule::kPoissonian,
                                           /*require_seeds=*/false);
  r.summary = detail::summarize(r.rows);
  return r;
}

// Mean of F over seeds against its expected value (finite-N corrected for
// one-dimensional perturbed sequences).
inline ExperimentReport run_expectation_check(const ExperimentConfig& cfg) {
  ExperimentReport r = detail::run_harness("expectation", cfg, {},
                                           detail::TargetRule::kExpectation,
                                           /*require_seeds=*/false);
  r.summary = detail::summarize(r.rows);
  return r;
}

// Sample variance of F per rung plus the least-squares slope of
// log Var(F) against log N. Requires >= 30 seeds, >= 4 rungs, one s value.
inline ExperimentReport run_variance_decay(const ExperimentConfig& cfg) {
  if (cfg.seeds.size() < 30)
    throw std::invalid_argument("variance decay needs at least 30 seeds");
  if (cfg.n_ladder.size() < 4)
    throw std::invalid_argument("variance decay needs at least 4 ladder rungs");
  if (cfg.s_values.size() != 1)
    throw std::invalid_argument("variance decay uses a single s value");
  if (!detail::is_stochastic(cfg.spec))
    throw std::invalid_argument(
        "variance decay needs a stochastic sequence spec");

  ExperimentReport r = detail::run_harness("variance_decay", cfg, {},
                                           detail::TargetRule::kPoissonian,
                                           /*require_seeds=*/true);
  r.summary = detail::summarize(r.rows);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double count = 0;
  for (const auto& row : r.summary) {
    if (!(row.var_f > 0.0))
      throw std::runtime_error(
          "variance decay: degenerate zero variance at a rung");
    const double x = std::log(static_cast<double>(row.n));
    const double y = std::log(row.var_f);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    count += 1.0;
  }
  r.fitted_slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return r;
}

// F across a list of scaling exponents beta; rows only, no summary.
inline ExperimentReport run_beta_sweep(const ExperimentConfig& cfg) {
  if (cfg.betas.empty())
    throw std::invalid_argument("beta sweep needs a nonempty beta list");
  for (double b : cfg.betas)
    if (!(b >= 0.0 && b <= 1.0))
      throw std::invalid_argument("beta values must lie in [0, 1]");
  return detail::run_harness("beta_sweep", cfg, cfg.betas,
                             detail::TargetRule::kPoissonian,
                             /*require_seeds=*/false);
}

// --- CSV emission ----------------------------------------------------------

namespace detail {

// RFC 4180 quoting for the one free-text column (spec strings may hold
// commas).
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

}  // namespace detail

inline void write_experiment_csv(const ExperimentReport& report,
                                 std::ostream& os) {
  os << "experiment,spec,seed,N,d,beta,s,F,target,abs_err\n";
  for (const auto& r : report.rows) {
    os << report.experiment << ',' << detail::csv_field(report.spec_text)
       << ',' << r.seed << ',' << r.n << ',' << r.dim << ','
       << detail::format_double(r.beta) << ',' << detail::format_double(r.s)
       << ',' << detail::format_double(r.f) << ','
       << detail::format_double(r.target) << ','
       << detail::format_double(r.abs_err) << '\n';
  }
}

inline void write_summary_csv(const ExperimentReport& report,
                              std::ostream& os) {
  os << "N,s,mean_F,var_F,max_abs_err,n_seeds\n";
  for (const auto& r : report.summary) {
    os << r.n << ',' << detail::format_double(r.s) << ','
       << detail::format_double(r.mean_f) << ','
       << detail::format_double(r.var_f) << ','
       << detail::format_double(r.max_abs_err) << ',' << r.n_seeds << '\n';
  }
}

}  // namespace ppclab
