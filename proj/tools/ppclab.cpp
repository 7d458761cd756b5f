// ppclab — command-line front end for torus point sequences and their
// uniformity statistics.
//
// Subcommands:
//   generate    write the points of a sequence spec as CSV
//   ppc         pair correlation statistics F(s) for one point set
//   disc        discrepancy measures (exact 1d, brute oracle, KET bound,
//               low-discrepancy scaling monitor)
//   kernel      analytic kernel evaluations and certified bound checks
//   experiment  seeded Monte Carlo harnesses writing row + summary CSVs
//
// Options come from flags (--key value or --key=value) optionally merged
// with a plain key=value config file via --config; flags win. Exit codes:
// 0 success, 2 usage error (message names the offending key), 1 runtime
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ppclab/ppclab.hpp"

namespace {

using namespace ppclab;

// Usage errors exit 2; everything else escaping main exits 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_usage(const std::string& msg) { throw UsageError(msg); }

// ---------------------------------------------------------------------------
// small string/value helpers

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    fail_usage("key '" + key + "': expected a nonnegative integer, got '" +
               value + "'");
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    fail_usage("key '" + key + "': integer out of range: '" + value + "'");
  }
}

long long to_i64(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    fail_usage("key '" + key + "': expected an integer, got '" + value + "'");
  }
  if (pos != t.size())
    fail_usage("key '" + key + "': expected an integer, got '" + value + "'");
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    return detail::parse_double(trim(value), key);
  } catch (const std::exception& e) {
    fail_usage(std::string(e.what()));
  }
}

std::vector<double> to_double_list(const std::string& key,
                                   const std::string& value) {
  std::vector<double> out;
  for (const auto& part : split_list(value)) out.push_back(to_double(key, part));
  if (out.empty()) fail_usage("key '" + key + "': empty list");
  return out;
}

std::vector<std::uint64_t> to_u64_list(const std::string& key,
                                       const std::string& value) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split_list(value)) out.push_back(to_u64(key, part));
  return out;
}

// ---------------------------------------------------------------------------
// flag and config-file parsing

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_flags(int argc, char** argv, int start,
                      const std::set<std::string>& allowed) {
  KeyValues out;
  for (int i = start; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok.rfind("--", 0) != 0)
      fail_usage("unexpected argument '" + tok + "' (flags are --key value)");
    tok = tok.substr(2);
    std::string key, value;
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      key = tok.substr(0, eq);
      value = tok.substr(eq + 1);
    } else {
      key = tok;
      if (i + 1 >= argc) fail_usage("flag '--" + key + "' needs a value");
      value = argv[++i];
    }
    if (allowed.find(key) == allowed.end())
      fail_usage("unknown flag '--" + key + "' for this subcommand");
    if (out.count(key)) fail_usage("duplicate flag '--" + key + "'");
    out[key] = value;
  }
  return out;
}

// key=value lines, full-line # comments, blank lines ignored.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0)
      fail_usage("config line " + std::to_string(lineno) +
                 ": expected key=value, got '" + t + "'");
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

// Merge config-file keys (validated against the subcommand's set) with the
// config-shaped flags; flags win.
KeyValues merge_config(const KeyValues& flags,
                       const std::set<std::string>& config_keys) {
  KeyValues final_kv;
  const auto cfg_it = flags.find("config");
  if (cfg_it != flags.end()) {
    std::set<std::string> seen;
    for (const auto& [k, v] : read_config_file(cfg_it->second)) {
      if (config_keys.find(k) == config_keys.end())
        fail_usage("unknown config key '" + k + "'");
      if (!seen.insert(k).second)
        fail_usage("duplicate config key '" + k + "'");
      final_kv[k] = v;
    }
  }
  for (const auto& [k, v] : flags)
    if (config_keys.find(k) != config_keys.end()) final_kv[k] = v;
  return final_kv;
}

const std::string& require_key(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) fail_usage("missing required key '" + key + "'");
  return it->second;
}

SequenceSpec parse_spec_checked(const std::string& text) {
  try {
    SequenceSpec spec = parse_spec(text);
    if (spec.alpha && !spec.alpha->verified())
      std::cerr << "warning: custom alpha in '" << text
                << "': badness and rational independence are unverified\n";
    return spec;
  } catch (const std::exception& e) {
    fail_usage("key 'spec': " + std::string(e.what()));
  }
}

// ---------------------------------------------------------------------------
// output plumbing

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (!to_stdout()) {
      file_.open(path);
      if (!file_)
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return to_stdout() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream().good())
      throw std::runtime_error("write failed for '" +
                               (to_stdout() ? std::string("<stdout>") : path_) +
                               "'");
  }

 private:
  bool to_stdout() const { return path_.empty() || path_ == "-"; }
  std::string path_;
  std::ofstream file_;
};

std::string out_path(const KeyValues& kv) {
  const auto it = kv.find("out");
  return it == kv.end() ? std::string{} : it->second;
}

void resolve_threads(const KeyValues& flags) {
  std::string value;
  const auto it = flags.find("threads");
  if (it != flags.end()) {
    value = it->second;
  } else if (const char* env = std::getenv("PPCLAB_THREADS")) {
    value = env;
  } else {
    return;
  }
  const std::uint64_t k = to_u64("threads", value);
  if (k > 4096) fail_usage("key 'threads': implausible worker count");
  thread_limit() = static_cast<int>(k);
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_generate(int argc, char** argv) {
  const auto flags = parse_flags(argc, argv, 2,
                                 {"spec", "n", "out", "config", "threads"});
  resolve_threads(flags);
  const auto kv = merge_config(flags, {"spec", "n", "out"});
  const SequenceSpec spec = parse_spec_checked(require_key(kv, "spec"));
  std::uint64_t n = 0;
  if (kv.count("n")) {
    n = to_u64("n", kv.at("n"));
    if (n < 1) fail_usage("key 'n': must be >= 1");
  } else if (spec.kind != SequenceKind::kFile) {
    fail_usage("missing required key 'n'");
  }
  OutputTarget out(out_path(kv));
  write_points_csv(generate(spec, n), out.stream());
  out.finish();
  return 0;
}

int cmd_ppc(int argc, char** argv) {
  const auto flags = parse_flags(
      argc, argv, 2,
      {"spec", "n", "beta", "s", "method", "out", "config", "threads"});
  resolve_threads(flags);
  const auto kv =
      merge_config(flags, {"spec", "n", "beta", "s", "method", "out"});
  const SequenceSpec spec = parse_spec_checked(require_key(kv, "spec"));
  const std::uint64_t n = to_u64("n", require_key(kv, "n"));
  if (n < 2) fail_usage("key 'n': pair correlation needs n >= 2");
  const double beta = to_double("beta", require_key(kv, "beta"));
  if (!(beta >= 0.0 && beta <= 1.0))
    fail_usage("key 'beta': must lie in [0, 1]");
  const std::vector<double> s = to_double_list("s", require_key(kv, "s"));
  for (double v : s)
    if (!(v > 0.0)) fail_usage("key 's': values must be positive");

  PairCountMethod method = PairCountMethod::kAuto;
  if (kv.count("method")) {
    const std::string& m = kv.at("method");
    if (m == "naive") method = PairCountMethod::kNaive;
    else if (m == "grid") method = PairCountMethod::kGrid;
    else if (m == "auto") method = PairCountMethod::kAuto;
    else fail_usage("key 'method': expected naive, grid, or auto, got '" + m + "'");
  }

  OutputTarget out(out_path(kv));
  const TorusPointSet pts = generate(spec, n);
  write_pair_corr_csv(pair_correlation(pts, beta, s, method), out.stream());
  out.finish();
  return 0;
}

int cmd_disc(int argc, char** argv) {
  const auto flags = parse_flags(argc, argv, 2,
                                 {"spec", "n", "method", "ladder", "m", "c",
                                  "out", "config", "threads"});
  resolve_threads(flags);
  const auto kv =
      merge_config(flags, {"spec", "n", "method", "ladder", "out"});
  const SequenceSpec spec = parse_spec_checked(require_key(kv, "spec"));
  const std::string method = require_key(kv, "method");

  int ket_m = 64;
  if (flags.count("m")) {
    const std::uint64_t m = to_u64("m", flags.at("m"));
    if (m < 1 || m > 1'000'000) fail_usage("key 'm': must be in [1, 10^6]");
    ket_m = static_cast<int>(m);
  }
  std::optional<double> ket_c;
  if (flags.count("c")) {
    const double c = to_double("c", flags.at("c"));
    if (!(c > 0.0)) fail_usage("key 'c': must be positive");
    ket_c = c;
  }

  if (method == "scaling") {
    if (kv.count("n")) fail_usage("key 'n': not used with method=scaling");
    const auto ladder = to_u64_list("ladder", require_key(kv, "ladder"));
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      if (ladder[i] < 2) fail_usage("key 'ladder': entries must be >= 2");
      if (i > 0 && ladder[i] <= ladder[i - 1])
        fail_usage("key 'ladder': must be strictly increasing");
    }
    OutputTarget out(out_path(kv));
    const auto rows = low_disc_scaling(spec, ladder, ket_m);
    int dim = spec.dim();
    if (dim == 0) dim = generate(spec, 0).dim();  // file spec: read for d
    write_scaling_csv(rows, dim, out.stream());
    out.finish();
    return 0;
  }

  if (kv.count("ladder"))
    fail_usage("key 'ladder': only used with method=scaling");
  std::uint64_t n = 0;
  if (kv.count("n")) {
    n = to_u64("n", kv.at("n"));
    if (n < 1) fail_usage("key 'n': must be >= 1");
  } else if (spec.kind != SequenceKind::kFile) {
    fail_usage("missing required key 'n'");
  }

  OutputTarget out(out_path(kv));
  const TorusPointSet pts = generate(spec, n);
  DiscrepancyResult res;
  if (method == "star") res = star_disc_1d(pts);
  else if (method == "extreme") res = extreme_disc_1d(pts);
  else if (method == "brute-star") res = brute_disc(pts, true);
  else if (method == "brute-extreme") res = brute_disc(pts, false);
  else if (method == "ket")
    res = ket_c ? ket_bound(pts, ket_m, *ket_c) : ket_bound(pts, ket_m);
  else
    fail_usage("key 'method': expected star, extreme, brute-star, "
               "brute-extreme, ket, or scaling, got '" + method + "'");
  write_disc_csv({res}, out.stream());
  out.finish();
  return 0;
}

OverlapCase parse_case(const std::string& text) {
  if (text == "k=m") return OverlapCase::kKeqM;
  if (text == "l=n") return OverlapCase::kLeqN;
  if (text == "k=n") return OverlapCase::kKeqN;
  if (text == "l=m") return OverlapCase::kLeqM;
  if (text == "k=m,l=n") return OverlapCase::kKeqM_LeqN;
  if (text == "k=n,l=m") return OverlapCase::kKeqN_LeqM;
  if (text == "distinct") return OverlapCase::kAllDistinct;
  fail_usage("key 'case': expected one of k=m, l=n, k=n, l=m, "
             "\"k=m,l=n\", \"k=n,l=m\", distinct; got '" + text + "'");
}

int cmd_kernel(int argc, char** argv) {
  const auto flags = parse_flags(
      argc, argv, 2,
      {"check", "x", "r", "rp", "eps", "case", "alpha", "n", "rmax", "c",
       "delta", "sigma", "out", "config", "threads"});
  resolve_threads(flags);
  const auto kv = merge_config(flags, {"out"});
  const std::string check = require_key(flags, "check");

  // Validate flags and compute before touching the output file so usage
  // errors never leave a partial file behind.
  std::optional<double> scalar;
  std::optional<BoundCheckResult> bound;
  if (check == "sinc") {
    scalar = sinc_pi(to_double("x", require_key(flags, "x")));
  } else if (check == "pair-expectation") {
    const long long r = to_i64("r", require_key(flags, "r"));
    const long long rp = to_i64("rp", require_key(flags, "rp"));
    if (r == 0) fail_usage("key 'r': must be nonzero");
    if (rp == 0) fail_usage("key 'rp': must be nonzero");
    const double eps = to_double("eps", require_key(flags, "eps"));
    if (!(eps >= 0.0)) fail_usage("key 'eps': must be >= 0");
    scalar = pair_phase_expectation(r, rp, eps,
                                    parse_case(require_key(flags, "case")));
  } else if (check == "single-expectation") {
    const long long r = to_i64("r", require_key(flags, "r"));
    if (r == 0) fail_usage("key 'r': must be nonzero");
    const double eps = to_double("eps", require_key(flags, "eps"));
    if (!(eps >= 0.0)) fail_usage("key 'eps': must be >= 0");
    scalar = single_pair_expectation(r, eps);
  } else if (check == "density") {
    const auto x = to_double_list("x", require_key(flags, "x"));
    const double eps = to_double("eps", require_key(flags, "eps"));
    if (!(eps > 0.0)) fail_usage("key 'eps': must be > 0");
    scalar = triangular_density(x, eps);
  } else if (check == "moment") {
    AlphaVector alpha = [&] {
      try {
        return AlphaVector::parse(require_key(flags, "alpha"));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        fail_usage("key 'alpha': " + std::string(e.what()));
      }
    }();
    if (alpha.dim() != 1)
      fail_usage("key 'alpha': the damped moment check is one-dimensional");
    if (!alpha.verified())
      std::cerr << "warning: custom alpha: badness and rational independence "
                   "are unverified\n";
    const double eps = to_double("eps", require_key(flags, "eps"));
    if (!(eps > 0.0)) fail_usage("key 'eps': must be > 0");
    const std::uint64_t n = to_u64("n", require_key(flags, "n"));
    if (n < 1) fail_usage("key 'n': must be >= 1");
    const std::uint64_t rmax = to_u64("rmax", require_key(flags, "rmax"));
    if (rmax < 1) fail_usage("key 'rmax': must be >= 1");
    const double c = to_double("c", require_key(flags, "c"));
    if (!(c > 0.0)) fail_usage("key 'c': must be positive");
    const double delta = to_double("delta", require_key(flags, "delta"));
    if (!(delta > 0.0 && delta <= 1.0))
      fail_usage("key 'delta': must lie in (0, 1]");
    bound = damped_moment_check(alpha, eps, n, rmax, c, delta);
  } else if (check == "resonance") {
    const long long rp = to_i64("rp", require_key(flags, "rp"));
    if (rp == 0) fail_usage("key 'rp': must be nonzero");
    const double sigma = to_double("sigma", require_key(flags, "sigma"));
    if (!(sigma >= 0.0 && sigma < 1.0))
      fail_usage("key 'sigma': must lie in [0, 1)");
    const std::uint64_t rp_abs =
        rp > 0 ? static_cast<std::uint64_t>(rp)
               : static_cast<std::uint64_t>(-rp);
    std::uint64_t rmax = 1'000'000;
    if (flags.count("rmax")) rmax = to_u64("rmax", flags.at("rmax"));
    if (rmax < 4 * rp_abs) fail_usage("key 'rmax': must be at least 4*|rp|");
    bound = resonance_sum_check(rp, sigma, rmax);
  } else {
    fail_usage("key 'check': expected sinc, pair-expectation, "
               "single-expectation, density, moment, or resonance, got '" +
               check + "'");
  }

  OutputTarget out(out_path(kv));
  if (scalar)
    out.stream() << detail::format_double(*scalar) << '\n';
  else
    write_bound_check_csv({*bound}, out.stream());
  out.finish();
  return 0;
}

std::string summary_path(const std::string& rows_path) {
  const std::string suffix = ".csv";
  if (rows_path.size() > suffix.size() &&
      rows_path.compare(rows_path.size() - suffix.size(), suffix.size(),
                        suffix) == 0)
    return rows_path.substr(0, rows_path.size() - suffix.size()) +
           ".summary.csv";
  return rows_path + ".summary.csv";
}

int cmd_experiment(int argc, char** argv) {
  const auto flags = parse_flags(
      argc, argv, 2,
      {"spec", "beta", "s", "method", "seeds", "ladder", "tolerance", "out",
       "config", "threads"});
  resolve_threads(flags);
  const auto kv = merge_config(flags, {"spec", "beta", "s", "method", "seeds",
                                       "ladder", "tolerance", "out"});

  ExperimentConfig cfg;
  cfg.spec = parse_spec_checked(require_key(kv, "spec"));
  cfg.n_ladder = to_u64_list("ladder", require_key(kv, "ladder"));
  for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
    if (cfg.n_ladder[i] < 2) fail_usage("key 'ladder': entries must be >= 2");
    if (i > 0 && cfg.n_ladder[i] <= cfg.n_ladder[i - 1])
      fail_usage("key 'ladder': must be strictly increasing");
  }
  cfg.s_values = to_double_list("s", require_key(kv, "s"));
  for (double v : cfg.s_values)
    if (!(v > 0.0)) fail_usage("key 's': values must be positive");
  if (kv.count("seeds")) cfg.seeds = to_u64_list("seeds", kv.at("seeds"));
  if (kv.count("beta")) {
    cfg.betas = to_double_list("beta", kv.at("beta"));
    for (double b : cfg.betas)
      if (!(b >= 0.0 && b <= 1.0))
        fail_usage("key 'beta': values must lie in [0, 1]");
  }
  if (kv.count("tolerance")) {
    cfg.tolerance = to_double("tolerance", kv.at("tolerance"));
    if (!(cfg.tolerance > 0.0)) fail_usage("key 'tolerance': must be positive");
  }
  cfg.out_path = require_key(kv, "out");
  if (cfg.out_path.empty() || cfg.out_path == "-")
    fail_usage("key 'out': experiment needs a real output path");

  const std::string method = require_key(kv, "method");
  const bool stochastic = cfg.spec.kind == SequenceKind::kPerturbed ||
                          cfg.spec.kind == SequenceKind::kIid;
  if (stochastic && cfg.seeds.empty())
    fail_usage("key 'seeds': required for stochastic sequence specs");

  ExperimentReport report;
  bool with_summary = true;
  if (method == "ppc") {
    report = run_ppc_convergence(cfg);
  } else if (method == "expectation") {
    report = run_expectation_check(cfg);
  } else if (method == "variance") {
    if (cfg.seeds.size() < 30)
      fail_usage("key 'seeds': variance decay needs at least 30 seeds");
    if (cfg.n_ladder.size() < 4)
      fail_usage("key 'ladder': variance decay needs at least 4 rungs");
    if (cfg.s_values.size() != 1)
      fail_usage("key 's': variance decay uses a single s value");
    report = run_variance_decay(cfg);
  } else if (method == "beta") {
    if (cfg.betas.empty())
      fail_usage("key 'beta': required for the beta sweep");
    report = run_beta_sweep(cfg);
    with_summary = false;
  } else {
    fail_usage("key 'method': expected ppc, expectation, variance, or beta, "
               "got '" + method + "'");
  }

  {
    OutputTarget rows_out(cfg.out_path);
    write_experiment_csv(report, rows_out.stream());
    rows_out.finish();
  }
  if (with_summary) {
    OutputTarget sum_out(summary_path(cfg.out_path));
    write_summary_csv(report, sum_out.stream());
    sum_out.finish();
  }
  std::cerr << "experiment " << report.experiment << ": wrote " << cfg.out_path
            << " (" << report.rows.size() << " rows)";
  if (with_summary) std::cerr << " and " << summary_path(cfg.out_path);
  std::cerr << ", config sha1 " << report.config_hash;
  if (method == "variance")
    std::cerr << ", fitted slope " << detail::format_double(report.fitted_slope);
  std::cerr << '\n';
  return 0;
}

void print_usage(std::ostream& os) {
  os << "ppclab — torus point sequences and uniformity statistics\n"
        "\n"
        "usage: ppclab <subcommand> [--key value ...]\n"
        "\n"
        "subcommands:\n"
        "  generate    --spec S --n N [--out F]\n"
        "  ppc         --spec S --n N --beta B --s S1,S2,... [--method naive|grid|auto] [--out F]\n"
        "  disc        --spec S --n N --method star|extreme|brute-star|brute-extreme|ket [--m M] [--c C] [--out F]\n"
        "  disc        --spec S --method scaling --ladder N1,N2,... [--m M] [--out F]\n"
        "  kernel      --check sinc|pair-expectation|single-expectation|density|moment|resonance ...\n"
        "  experiment  --method ppc|expectation|variance|beta --spec S --ladder ... --s ... --out F\n"
        "\n"
        "sequence specs: kronecker:<alpha>, perturbed:<alpha>:eps=<e>:seed=<s>,\n"
        "  vdc:<base>, halton:<b1,b2,...>, iid:d=<d>:seed=<s>, file:<path>\n"
        "  (<alpha> = golden|sqrt2|sqrt23|sqrt235 or comma-separated decimals)\n"
        "\n"
        "common flags: --config <file> (key=value lines; flags win),\n"
        "  --threads <k> (or PPCLAB_THREADS), --out <file|->\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::ios_base::sync_with_stdio(false);
  try {
    if (argc < 2) {
      print_usage(std::cerr);
      return 2;
    }
    const std::string cmd = argv[1];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      print_usage(std::cout);
      return 0;
    }
    if (cmd == "generate") return cmd_generate(argc, argv);
    if (cmd == "ppc") return cmd_ppc(argc, argv);
    if (cmd == "disc") return cmd_disc(argc, argv);
    if (cmd == "kernel") return cmd_kernel(argc, argv);
    if (cmd == "experiment") return cmd_experiment(argc, argv);
    fail_usage("unknown subcommand '" + cmd + "'");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
