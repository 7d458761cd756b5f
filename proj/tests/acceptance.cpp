// Acceptance gate: twelve end-to-end checks covering pair counting, the
// perturbation phenomenon, kernel identities, exponential-sum bounds, and
// discrepancy scaling. Each check prints exactly one PASS/FAIL line with the
// measured quantities; the process exits nonzero if any check fails.
//
// Checks with a runtime budget (1, 2, and 8) time themselves and fail when
// the budget is exceeded.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ppclab/ppclab.hpp"
#include "support/quadrature.hpp"

using namespace ppclab;
namespace fs = std::filesystem;

namespace {

// Bounds on |S_N(<r, alpha>)| / (min_i r_i^(1/2-delta) N^(1/2+delta)) frozen
// from development-time sweeps: observed maxima 0.99589... for golden and
// 4.46168... for sqrt23 over the grids below, rounded up for headroom.
constexpr double kGrowthBoundGolden = 1.25;
constexpr double kGrowthBoundSqrt23 = 5.0;

std::string fmt(double x) { return detail::format_double(x); }

TorusPointSet random_points(std::uint64_t seed, std::size_t n, int d) {
  RandomSource rng(seed);
  std::vector<double> flat;
  flat.reserve(n * static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) flat.push_back(rng.uniform(i, j));
  return TorusPointSet(d, std::move(flat));
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// 1. Grid and naive pair counting agree exactly on randomized instances.

Outcome check_method_equivalence() {
  const std::vector<double> s_values{0.1, 1.0, 3.0, 10.0};
  RandomSource meta(20250817);
  int grid_used = 0;
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + static_cast<int>(meta.bits(i, 0) % 3);
    const std::size_t n = 2 + meta.bits(i, 1) % 1999;
    const double beta_choices[3] = {0.0, 0.5, 1.0 / d};
    const double beta = beta_choices[meta.bits(i, 2) % 3];
    const TorusPointSet pts = random_points(3000 + i, n, d);
    const PairCorrResult naive =
        pair_correlation(pts, beta, s_values, PairCountMethod::kNaive);
    const PairCorrResult grid =
        pair_correlation(pts, beta, s_values, PairCountMethod::kGrid);
    if (grid.method_used == PairCountMethod::kGrid) ++grid_used;
    for (std::size_t k = 0; k < s_values.size(); ++k) {
      if (naive.rows[k].count != grid.rows[k].count ||
          naive.rows[k].value != grid.rows[k].value) {
        std::ostringstream os;
        os << "mismatch at instance " << i << " (N=" << n << ", d=" << d
           << ", beta=" << fmt(beta) << ", s=" << fmt(s_values[k])
           << "): naive count " << naive.rows[k].count << " vs grid "
           << grid.rows[k].count;
        return {false, os.str()};
      }
    }
  }
  std::ostringstream os;
  os << "200/200 instances identical on all four s values (" << grid_used
     << " grid-counted, rest fell back to naive)";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 2. Small perturbations of the golden-ratio sequence are Poissonian at
//    beta = 1, for every seed, at both eps = 0.1 and eps = 0.01.

Outcome check_perturbed_poissonian() {
  const std::vector<double> s_values{0.5, 1.0, 2.0};
  double worst = 0.0;
  for (double eps : {0.1, 0.01}) {
    std::ostringstream spec_text;
    spec_text << "perturbed:golden:eps=" << fmt(eps) << ":seed=1";
    SequenceSpec spec = parse_spec(spec_text.str());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      spec.seed = seed;
      const TorusPointSet pts = generate(spec, 1000000);
      const PairCorrResult res =
          pair_correlation(pts, 1.0, s_values, PairCountMethod::kGrid);
      for (const PairCorrRow& row : res.rows) {
        const double target = 2.0 * row.s;
        const double rel = std::fabs(row.value - target) / target;
        worst = std::max(worst, rel);
        if (rel >= 0.05) {
          std::ostringstream os;
          os << "eps=" << fmt(eps) << " seed=" << seed << " s=" << fmt(row.s)
             << ": F=" << fmt(row.value) << " misses " << fmt(target)
             << " by " << fmt(rel * 100.0) << "%";
          return {false, os.str()};
        }
      }
    }
  }
  std::ostringstream os;
  os << "N=10^6, 10 seeds, eps in {0.1, 0.01}, s in {0.5, 1, 2}: all "
     << "|F - 2s|/2s < 0.05 (worst " << fmt(worst) << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 3. The unperturbed golden-ratio sequence stays far from Poissonian at some
//    s, at every N in the ladder.

Outcome check_deterministic_control() {
  std::vector<double> s_values;
  for (int k = 1; k <= 12; ++k) s_values.push_back(0.25 * k);
  double min_over_n = 1e300;
  const SequenceSpec spec = parse_spec("kronecker:golden");
  for (std::uint64_t n : {10000ULL, 100000ULL, 1000000ULL}) {
    const TorusPointSet pts = generate(spec, n);
    const PairCorrResult res = pair_correlation(pts, 1.0, s_values);
    double max_dev = 0.0;
    for (const PairCorrRow& row : res.rows)
      max_dev = std::max(max_dev, std::fabs(row.value - 2.0 * row.s));
    min_over_n = std::min(min_over_n, max_dev);
    if (max_dev <= 0.2) {
      std::ostringstream os;
      os << "N=" << n << ": max |F - 2s| over the s sweep is only "
         << fmt(max_dev) << " (needs > 0.2)";
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "golden Kronecker, N in {10^4, 10^5, 10^6}: max deviation per N "
     << "always exceeds 0.2 (smallest max " << fmt(min_over_n) << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 4. At beta = 1/2 both the van der Corput and golden Kronecker sequences are
//    Poissonian to within 5%.

Outcome check_small_beta_poissonian() {
  const std::vector<double> s_values{0.5, 1.0, 2.0};
  double worst = 0.0;
  for (const char* text : {"vdc:2", "kronecker:golden"}) {
    const TorusPointSet pts = generate(parse_spec(text), 1000000);
    const PairCorrResult res = pair_correlation(pts, 0.5, s_values);
    for (const PairCorrRow& row : res.rows) {
      const double target = 2.0 * row.s;
      const double rel = std::fabs(row.value - target) / target;
      worst = std::max(worst, rel);
      if (rel >= 0.05) {
        std::ostringstream os;
        os << text << " s=" << fmt(row.s) << ": F=" << fmt(row.value)
           << " misses " << fmt(target) << " by " << fmt(rel * 100.0) << "%";
        return {false, os.str()};
      }
    }
  }
  std::ostringstream os;
  os << "vdc:2 and golden at beta=0.5, N=10^6: all |F - 2s|/2s < 0.05 "
     << "(worst " << fmt(worst) << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 5. Seed-averaged F matches the expected value within the 3-sigma normal
//    band, in d = 1 (perturbed van der Corput) and d = 2 (perturbed Halton).

Outcome check_expectation_bands() {
  struct Setup {
    const char* spec;
    std::uint64_t n;
    int dim;
  };
  // d=1 uses eps = 0.2 at N = 10^5, where the finite-N kernel bias is ~1e-4
  // and invisible inside the band. d=2 runs at N = 10^4, where the clipped
  // triangular kernel biases E[F] - (2s)^2 by about -(2s^2/(eps sqrt(N)))^2;
  // eps = 0.9 keeps that bias an order of magnitude below the 3-sigma band
  // (measured z < 0.5 for every s, vs z ~ 3.9 at eps = 0.2).
  const Setup setups[] = {
      {"perturbed:vdc:2:eps=0.2:seed=1", 100000, 1},
      {"perturbed:halton:2,3:eps=0.9:seed=1", 10000, 2},
  };
  const std::vector<double> s_values{0.5, 1.0, 2.0};
  const int n_seeds = 50;
  double worst_z = 0.0;
  for (const Setup& setup : setups) {
    SequenceSpec spec = parse_spec(setup.spec);
    const double beta = 1.0 / setup.dim;
    std::vector<std::vector<double>> samples(s_values.size());
    for (std::uint64_t seed = 1; seed <= n_seeds; ++seed) {
      spec.seed = seed;
      const TorusPointSet pts = generate(spec, setup.n);
      const PairCorrResult res = pair_correlation(pts, beta, s_values);
      for (std::size_t k = 0; k < s_values.size(); ++k)
        samples[k].push_back(res.rows[k].value);
    }
    for (std::size_t k = 0; k < s_values.size(); ++k) {
      double mean = 0.0;
      for (double v : samples[k]) mean += v;
      mean /= n_seeds;
      double var = 0.0;
      for (double v : samples[k]) var += (v - mean) * (v - mean);
      var /= (n_seeds - 1);
      const double sigma_mean = std::sqrt(var / n_seeds);
      const double target = poissonian_target(setup.dim, s_values[k]);
      const double z = std::fabs(mean - target) / sigma_mean;
      worst_z = std::max(worst_z, z);
      if (z > 3.0) {
        std::ostringstream os;
        os << setup.spec << " s=" << fmt(s_values[k]) << ": mean F "
           << fmt(mean) << " vs target " << fmt(target) << " is "
           << fmt(z) << " sigma out (band is 3)";
        return {false, os.str()};
      }
    }
  }
  std::ostringstream os;
  os << "50-seed means within 3 sigma of (2s)^d for perturbed vdc (d=1, "
     << "N=10^5) and perturbed Halton (d=2, N=10^4); worst z "
     << fmt(worst_z);
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 6. Var[F] decays with N: fitted log-log slope at most -0.4.

Outcome check_variance_decay() {
  ExperimentConfig cfg;
  cfg.spec = parse_spec("perturbed:golden:eps=0.1:seed=1");
  cfg.n_ladder = {1000, 10000, 100000, 1000000};
  cfg.s_values = {1.0};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) cfg.seeds.push_back(seed);
  const ExperimentReport report = run_variance_decay(cfg);
  std::ostringstream os;
  os << "50 seeds, N in {10^3..10^6}, perturbed golden eps=0.1: fitted "
     << "slope of log Var[F] vs log N is " << fmt(report.fitted_slope)
     << " (needs <= -0.4)";
  return {report.fitted_slope <= -0.4, os.str()};
}

// ---------------------------------------------------------------------------
// 7. Closed-form phase expectations match tensor quadrature to 1e-9 in every
//    index-coincidence case, including the replacement rules at r = +/- r'.

std::vector<double> phase_coefficients(long long r, long long rp, double eps,
                                       OverlapCase c) {
  const double re = static_cast<double>(r) * eps;
  const double rpe = static_cast<double>(rp) * eps;
  const double pe = static_cast<double>(r + rp) * eps;
  const double me = static_cast<double>(r - rp) * eps;
  switch (c) {
    case OverlapCase::kKeqM: return {pe, -re, -rpe};
    case OverlapCase::kLeqN: return {re, rpe, -pe};
    case OverlapCase::kKeqN: return {me, -re, rpe};
    case OverlapCase::kLeqM: return {re, -me, -rpe};
    case OverlapCase::kKeqM_LeqN: return {pe, -pe};
    case OverlapCase::kKeqN_LeqM: return {me, -me};
    case OverlapCase::kAllDistinct: return {re, -re, rpe, -rpe};
  }
  throw std::logic_error("unhandled overlap case");
}

Outcome check_phase_expectation_oracle() {
  const OverlapCase cases[] = {
      OverlapCase::kKeqM,      OverlapCase::kLeqN,
      OverlapCase::kKeqN,      OverlapCase::kLeqM,
      OverlapCase::kKeqM_LeqN, OverlapCase::kKeqN_LeqM,
      OverlapCase::kAllDistinct};
  double worst = 0.0;
  long checked = 0;
  for (double eps : {0.1, 0.3, 0.7, 1.3}) {
    for (long long r = -5; r <= 5; ++r) {
      if (r == 0) continue;
      for (long long rp = -5; rp <= 5; ++rp) {
        if (rp == 0) continue;
        for (OverlapCase c : cases) {
          const double closed = pair_phase_expectation(r, rp, eps, c);
          const std::complex<double> oracle =
              qoracle::expectation_of_phase(phase_coefficients(r, rp, eps, c));
          const double diff = std::max(std::fabs(closed - oracle.real()),
                                       std::fabs(oracle.imag()));
          worst = std::max(worst, diff);
          ++checked;
          if (diff > 1e-9) {
            std::ostringstream os;
            os << "r=" << r << " r'=" << rp << " eps=" << fmt(eps)
               << " case " << to_string(c) << ": closed " << fmt(closed)
               << " vs quadrature " << fmt(oracle.real()) << " (diff "
               << fmt(diff) << ")";
            return {false, os.str()};
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " (r, r', eps, case) combinations within 1e-9 of "
     << "quadrature (worst " << fmt(worst) << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 8. The off-resonance frequency sum obeys its closed bound for every r' up
//    to 1000 and every damping exponent, with the analytic tail included.

Outcome check_resonance_sums() {
  std::vector<long long> rps;
  for (long long rp = 1; rp <= 1000; ++rp) rps.push_back(rp);
  const std::vector<double> sigmas{0.0, 0.25, 0.5, 0.9};
  const std::vector<BoundCheckResult> checks =
      resonance_sum_grid(rps, sigmas, 1000000);
  double worst_ratio = 0.0;
  for (const BoundCheckResult& c : checks) {
    worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
    if (!c.satisfied) {
      std::ostringstream os;
      os << "r'=" << static_cast<long long>(c.arg) << " sigma="
         << fmt(c.param1) << ": lhs " << fmt(c.lhs) << " exceeds bound "
         << fmt(c.rhs);
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << checks.size() << " (r', sigma) checks at R=10^6 all satisfied "
     << "(worst lhs/rhs " << fmt(worst_ratio) << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 9. The damped second moment grows no faster than N^(3/2): a constant
//    fitted at N = 100 keeps working at N = 1000 and N = 10000.

Outcome check_damped_moment_envelope() {
  const AlphaVector golden = AlphaVector::preset("golden");
  const double eps = 0.5;
  const double delta = 0.5;
  const std::uint64_t r_max = 100000;
  const BoundCheckResult base =
      damped_moment_check(golden, eps, 100, r_max, 1.0, delta);
  const double c_fit = (base.lhs + base.tail) / std::pow(100.0, 1.5);
  std::ostringstream os;
  os << "C fitted at N=100 is " << fmt(c_fit) << "; envelope ratios";
  for (std::uint64_t n : {1000ULL, 10000ULL}) {
    const BoundCheckResult res =
        damped_moment_check(golden, eps, n, r_max, c_fit, delta);
    os << " N=" << n << ": " << fmt((res.lhs + res.tail) / res.rhs);
    if (!res.satisfied) {
      os << " (exceeds 1)";
      return {false, os.str()};
    }
  }
  os << " (both <= 1)";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 10. Exponential-sum growth ratios stay below the recorded constants for the
//     golden and sqrt23 frequency grids.

Outcome check_growth_ratios() {
  const std::vector<std::uint64_t> ns{10, 100, 1000, 10000, 100000};
  const std::vector<double> deltas{0.25, 0.5};
  const AlphaVector golden = AlphaVector::preset("golden");
  double max_golden = 0.0;
  for (long long r = 1; r <= 100; ++r) {
    const FrequencyVector freq{{r}};
    for (std::uint64_t n : ns)
      for (double delta : deltas)
        max_golden =
            std::max(max_golden, expsum_growth_ratio(golden, freq, n, delta));
  }
  const AlphaVector sqrt23 = AlphaVector::preset("sqrt23");
  double max_sqrt23 = 0.0;
  for (long long r1 = 1; r1 <= 100; ++r1) {
    for (long long r2 = 1; r2 <= 100; ++r2) {
      const FrequencyVector freq{{r1, r2}};
      for (std::uint64_t n : ns)
        for (double delta : deltas)
          max_sqrt23 = std::max(max_sqrt23,
                                expsum_growth_ratio(sqrt23, freq, n, delta));
    }
  }
  std::ostringstream os;
  os << "max ratio golden " << fmt(max_golden) << " (bound "
     << fmt(kGrowthBoundGolden) << "), sqrt23 " << fmt(max_sqrt23)
     << " (bound " << fmt(kGrowthBoundSqrt23)
     << ") over r <= 100, N <= 10^5, delta in {1/4, 1/2}";
  const bool ok =
      max_golden <= kGrowthBoundGolden && max_sqrt23 <= kGrowthBoundSqrt23;
  return {ok, os.str()};
}

// ---------------------------------------------------------------------------
// 11. Exact 1d discrepancy formulas match the brute-force oracle; the
//     low-discrepancy scaling monitor stays bounded for vdc and golden and
//     grows past it for the i.i.d. control.

Outcome check_discrepancy() {
  RandomSource meta(424242);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + meta.bits(i, 0) % 200;
    const TorusPointSet pts = random_points(7000 + i, n, 1);
    const double star_exact = star_disc_1d(pts).value;
    const double star_brute = brute_disc(pts, /*anchored=*/true).value;
    const double ext_exact = extreme_disc_1d(pts).value;
    const double ext_brute = brute_disc(pts, /*anchored=*/false).value;
    if (std::fabs(star_exact - star_brute) > 1e-12 ||
        std::fabs(ext_exact - ext_brute) > 1e-12) {
      std::ostringstream os;
      os << "instance " << i << " (N=" << n << "): exact star/extreme "
         << fmt(star_exact) << "/" << fmt(ext_exact) << " vs brute "
         << fmt(star_brute) << "/" << fmt(ext_brute);
      return {false, os.str()};
    }
  }
  const std::vector<std::uint64_t> ladder{100, 1000, 10000, 100000};
  double max_low = 0.0;
  for (const char* text : {"vdc:2", "kronecker:golden"}) {
    const auto rows = low_disc_scaling(parse_spec(text), ladder);
    for (const ScalingRow& row : rows) {
      max_low = std::max(max_low, row.scaled);
      if (row.scaled > 3.0) {
        std::ostringstream os;
        os << text << " N=" << row.n << ": N D_N / log N = "
           << fmt(row.scaled) << " exceeds 3";
        return {false, os.str()};
      }
    }
  }
  const auto iid_rows = low_disc_scaling(parse_spec("iid:d=1:seed=77"), ladder);
  const double iid_first = iid_rows.front().scaled;
  const double iid_last = iid_rows.back().scaled;
  if (!(iid_last > iid_first && iid_last > 3.0)) {
    std::ostringstream os;
    os << "i.i.d. control does not grow: scaled " << fmt(iid_first)
       << " at N=100 vs " << fmt(iid_last) << " at N=10^5";
    return {false, os.str()};
  }
  std::ostringstream os;
  os << "100/100 exact-vs-brute matches within 1e-12; vdc/golden scaled "
     << "discrepancy <= " << fmt(max_low) << " (bound 3) while i.i.d. grows "
     << fmt(iid_first) << " -> " << fmt(iid_last);
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 12. Repeating an experiment run through the CLI reproduces the output
//     byte for byte, regardless of the worker count.

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome check_cli_determinism() {
  const fs::path dir =
      fs::temp_directory_path() / "ppclab-acceptance-determinism";
  fs::create_directories(dir);
  const std::string base_args =
      std::string("\"") + PPCLAB_CLI_PATH +
      "\" experiment --method ppc --spec perturbed:golden:eps=0.1:seed=1"
      " --ladder 100,1000 --s 0.5,1 --seeds 1,2,3,4,5 --out ";
  struct Run {
    const char* name;
    const char* env;
  };
  const Run runs[] = {{"a", ""}, {"b", ""}, {"c", "PPCLAB_THREADS=3 "}};
  std::vector<std::string> rows_bytes, summary_bytes;
  for (const Run& run : runs) {
    const fs::path out = dir / (std::string(run.name) + ".csv");
    const std::string cmd = std::string(run.env) + base_args + out.string() +
                            " 2>" + (dir / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    if (rc != 0) {
      std::ostringstream os;
      os << "CLI run '" << run.name << "' exited with status " << rc;
      return {false, os.str()};
    }
    rows_bytes.push_back(slurp(out));
    fs::path summary = out;
    summary.replace_extension(".summary.csv");
    summary_bytes.push_back(slurp(summary));
  }
  fs::remove_all(dir);
  if (rows_bytes[0].empty() || summary_bytes[0].empty())
    return {false, "first run produced empty output files"};
  for (int i = 1; i < 3; ++i) {
    if (rows_bytes[i] != rows_bytes[0] || summary_bytes[i] != summary_bytes[0]) {
      std::ostringstream os;
      os << "run " << i + 1 << " differs from run 1 (rows "
         << (rows_bytes[i] == rows_bytes[0] ? "equal" : "differ")
         << ", summary "
         << (summary_bytes[i] == summary_bytes[0] ? "equal" : "differ") << ")";
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "three CLI runs (one with PPCLAB_THREADS=3) produced byte-identical "
     << "row and summary CSVs (" << rows_bytes[0].size() << " + "
     << summary_bytes[0].size() << " bytes)";
  return {true, os.str()};
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;  // 0 = no budget
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "grid/naive pair-count equivalence", 60.0, check_method_equivalence},
      {2, "perturbed golden is Poissonian at beta=1", 300.0,
       check_perturbed_poissonian},
      {3, "unperturbed golden stays non-Poissonian", 0.0,
       check_deterministic_control},
      {4, "low-discrepancy sequences are Poissonian at beta=1/2", 0.0,
       check_small_beta_poissonian},
      {5, "seed-mean F sits in the 3-sigma expectation band", 0.0,
       check_expectation_bands},
      {6, "Var[F] decays with N", 0.0, check_variance_decay},
      {7, "phase expectations match quadrature", 0.0,
       check_phase_expectation_oracle},
      {8, "off-resonance sums obey the closed bound", 60.0,
       check_resonance_sums},
      {9, "damped moment stays under C N^1.5", 0.0,
       check_damped_moment_envelope},
      {10, "exponential-sum growth ratios stay bounded", 0.0,
       check_growth_ratios},
      {11, "discrepancy formulas and scaling behave", 0.0, check_discrepancy},
      {12, "CLI experiment runs are byte-reproducible", 0.0,
       check_cli_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = outcome.ok;
    std::string note;
    if (c.budget_seconds > 0.0) {
      if (elapsed >= c.budget_seconds) {
        ok = false;
        note = " [over the " + fmt(c.budget_seconds) + " s budget]";
      } else {
        note = " [budget " + fmt(c.budget_seconds) + " s]";
      }
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.label << ": "
         << outcome.detail << " (" << fmt(elapsed) << " s" << note << ")";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "acceptance: all 12 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " of 12 criteria FAILED"
            << std::endl;
  return 1;
}
