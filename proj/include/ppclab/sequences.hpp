#pragma once

// Point sequence constructions on the unit torus: Kronecker orbits from a
// generator vector, their randomly perturbed variants, van der Corput and
// Halton low-discrepancy sequences, i.i.d. uniform samples, and point sets
// loaded from CSV files. A sequence is described by a compact text spec such
// as "kronecker:golden" or "perturbed:sqrt2:eps=0.05:seed=7" so that CLI
// invocations and experiment configs are reproducible from a single string.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppclab/alpha.hpp"
#include "ppclab/io.hpp"
#include "ppclab/parallel.hpp"
#include "ppclab/random.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

enum class SequenceKind {
  kKronecker,    // x_n = frac(n * alpha)
  kPerturbed,    // y_n = frac(z_n + eps * X_n), deterministic core z_n
  kVanDerCorput, // radical inverse in one base
  kHalton,       // radical inverse per coordinate, pairwise coprime bases
  kIid,          // i.i.d. uniform from the counter RNG
  kFile,         // points read from a CSV file
};

struct SequenceSpec {
  SequenceKind kind;
  std::string text;  // the spec string this was parsed from

  std::optional<AlphaVector> alpha;  // kronecker (or a kronecker core)
  double eps = 0.0;                  // perturbed
  std::uint64_t seed = 0;            // perturbed / iid
  std::vector<unsigned> bases;       // vdc (one entry) / halton
  int iid_dim = 1;                   // iid
  std::string path;                  // file

  // Deterministic core of a perturbed sequence; the perturbation applies on
  // top of any low-discrepancy core, not only Kronecker orbits.
  SequenceKind core_kind = SequenceKind::kKronecker;

  int dim() const {
    switch (kind) {
      case SequenceKind::kPerturbed:
        switch (core_kind) {
          case SequenceKind::kKronecker:
            return alpha->dim();
          case SequenceKind::kVanDerCorput:
            return 1;
          case SequenceKind::kHalton:
            return static_cast<int>(bases.size());
          default:
            return 0;
        }
      case SequenceKind::kKronecker:
        return alpha->dim();
      case SequenceKind::kVanDerCorput:
        return 1;
      case SequenceKind::kHalton:
        return static_cast<int>(bases.size());
      case SequenceKind::kIid:
        return iid_dim;
      case SequenceKind::kFile:
        return 0;  // known only after reading the file
    }
    return 0;
  }
};

namespace detail {

inline std::vector<std::string> split_spec(const std::string& s, char sep) {
  std::vector<std::string> out;
  for (const auto part : split(s, sep)) out.emplace_back(part);
  return out;
}

inline std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(what + " must be a nonnegative integer, got '" +
                                s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " out of range: '" + s + "'");
  }
}

// key=value token, e.g. "eps=0.1".
inline std::pair<std::string, std::string> parse_kv(const std::string& tok) {
  const auto pos = tok.find('=');
  if (pos == std::string::npos || pos == 0)
    throw std::invalid_argument("expected key=value token, got '" + tok + "'");
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

inline unsigned parse_vdc_base(const std::string& tok) {
  const std::uint64_t b = parse_u64(tok, "vdc base");
  if (b < 2) throw std::invalid_argument("vdc base must be >= 2");
  return static_cast<unsigned>(b);
}

inline std::vector<unsigned> parse_halton_bases(const std::string& tok) {
  std::vector<unsigned> bases;
  for (const auto& part : split_spec(tok, ',')) {
    const std::uint64_t b = parse_u64(part, "halton base");
    if (b < 2) throw std::invalid_argument("halton bases must be >= 2");
    bases.push_back(static_cast<unsigned>(b));
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (std::gcd(bases[i], bases[j]) != 1)
        throw std::invalid_argument(
            "halton bases must be pairwise coprime; gcd(" +
            std::to_string(bases[i]) + ", " + std::to_string(bases[j]) +
            ") > 1");
  return bases;
}

}  // namespace detail

// Base-b radical inverse of n: reverse the base-b digits of n across the
// radix point. Exact integer reversal followed by one division.
inline double radical_inverse(unsigned base, std::uint64_t n) {
  if (base < 2) throw std::invalid_argument("radical inverse base must be >= 2");
  std::uint64_t rev = 0, scale = 1;
  while (n != 0) {
    rev = rev * base + n % base;
    scale *= base;
    n /= base;
  }
  return static_cast<double>(rev) / static_cast<double>(scale);
}

// Parse a sequence spec string. Accepted forms:
//   kronecker:<alpha>                alpha = preset name or comma decimals
//   perturbed:<core>:eps=<e>:seed=<s>    (seed optional, default 0)
//     <core> = <alpha> shorthand for a Kronecker core, or an explicit
//     deterministic core: kronecker:<alpha>, vdc:<base>, halton:<b1,b2,...>
//   vdc:<base>
//   halton:<b1,b2,...>               pairwise coprime bases >= 2
//   iid:d=<dim>:seed=<s>             (seed optional, default 0)
//   file:<path>
inline SequenceSpec parse_spec(const std::string& text) {
  SequenceSpec spec{};
  spec.text = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string{} : text.substr(colon + 1);

  if (head == "file") {
    if (rest.empty())
      throw std::invalid_argument("file spec needs a path: file:<path>");
    spec.kind = SequenceKind::kFile;
    spec.path = rest;
    return spec;
  }

  const auto toks = detail::split_spec(rest, ':');
  if (head == "kronecker") {
    if (rest.empty() || toks.size() != 1)
      throw std::invalid_argument("kronecker spec: kronecker:<alpha>");
    spec.kind = SequenceKind::kKronecker;
    spec.alpha = AlphaVector::parse(toks[0]);
    return spec;
  }
  if (head == "perturbed") {
    if (rest.empty() || toks.empty())
      throw std::invalid_argument(
          "perturbed spec: perturbed:<core>:eps=<e>:seed=<s>");
    spec.kind = SequenceKind::kPerturbed;

    // Core tokens end where the key=value tail (eps=, seed=) begins.
    std::size_t kv_start = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].find('=') != std::string::npos) {
        kv_start = i;
        break;
      }
    }
    if (kv_start == 0)
      throw std::invalid_argument("perturbed spec needs a core before eps=");
    if (toks[0] == "kronecker" || toks[0] == "vdc" || toks[0] == "halton") {
      if (kv_start != 2)
        throw std::invalid_argument("perturbed core '" + toks[0] +
                                    "' takes exactly one argument");
      if (toks[0] == "kronecker") {
        spec.core_kind = SequenceKind::kKronecker;
        spec.alpha = AlphaVector::parse(toks[1]);
      } else if (toks[0] == "vdc") {
        spec.core_kind = SequenceKind::kVanDerCorput;
        spec.bases = {detail::parse_vdc_base(toks[1])};
      } else {
        spec.core_kind = SequenceKind::kHalton;
        spec.bases = detail::parse_halton_bases(toks[1]);
        if (spec.bases.empty())
          throw std::invalid_argument("halton core needs at least one base");
      }
    } else if (kv_start == 1) {
      // Bare alpha shorthand: perturbed:golden:eps=0.1
      spec.core_kind = SequenceKind::kKronecker;
      spec.alpha = AlphaVector::parse(toks[0]);
    } else {
      throw std::invalid_argument(
          "perturbed core must be <alpha>, kronecker:<alpha>, vdc:<base>, "
          "or halton:<bases>");
    }

    bool have_eps = false;
    for (std::size_t i = kv_start; i < toks.size(); ++i) {
      const auto [key, value] = detail::parse_kv(toks[i]);
      if (key == "eps") {
        spec.eps = detail::parse_double(value, "eps");
        if (!(spec.eps > 0.0))
          throw std::invalid_argument(
              "eps must be > 0 (drop the perturbation for the unperturbed "
              "family)");
        have_eps = true;
      } else if (key == "seed") {
        spec.seed = detail::parse_u64(value, "seed");
      } else {
        throw std::invalid_argument("unknown perturbed spec key '" + key + "'");
      }
    }
    if (!have_eps)
      throw std::invalid_argument("perturbed spec needs eps=<e>");
    return spec;
  }
  if (head == "vdc") {
    if (rest.empty() || toks.size() != 1)
      throw std::invalid_argument("vdc spec: vdc:<base>");
    spec.kind = SequenceKind::kVanDerCorput;
    spec.bases = {detail::parse_vdc_base(toks[0])};
    return spec;
  }
  if (head == "halton") {
    if (rest.empty() || toks.size() != 1)
      throw std::invalid_argument("halton spec: halton:<b1,b2,...>");
    spec.kind = SequenceKind::kHalton;
    spec.bases = detail::parse_halton_bases(toks[0]);
    if (spec.bases.empty())
      throw std::invalid_argument("halton spec needs at least one base");
    return spec;
  }
  if (head == "iid") {
    if (rest.empty() || toks.empty())
      throw std::invalid_argument("iid spec: iid:d=<dim>:seed=<s>");
    spec.kind = SequenceKind::kIid;
    bool have_dim = false;
    for (const auto& tok : toks) {
      const auto [key, value] = detail::parse_kv(tok);
      if (key == "d") {
        const std::uint64_t d = detail::parse_u64(value, "iid dimension");
        if (d < 1 || d > 64)
          throw std::invalid_argument("iid dimension must be in [1, 64]");
        spec.iid_dim = static_cast<int>(d);
        have_dim = true;
      } else if (key == "seed") {
        spec.seed = detail::parse_u64(value, "seed");
      } else {
        throw std::invalid_argument("unknown iid spec key '" + key + "'");
      }
    }
    if (!have_dim) throw std::invalid_argument("iid spec needs d=<dim>");
    return spec;
  }
  throw std::invalid_argument("unknown sequence kind '" + head +
                              "' (expected kronecker, perturbed, vdc, halton, "
                              "iid, or file)");
}

// First n points of the sequence described by spec, indices starting at 1.
// For file specs, n == 0 loads the whole file; otherwise the file must hold
// at least n points and the first n are returned.
inline TorusPointSet generate(const SequenceSpec& spec, std::uint64_t n) {
  if (spec.kind == SequenceKind::kFile) {
    TorusPointSet all = read_points_csv(spec.path);
    if (n == 0 || n == all.size()) return all;
    if (n > all.size())
      throw std::runtime_error("file '" + spec.path + "' holds " +
                               std::to_string(all.size()) +
                               " points, fewer than requested " +
                               std::to_string(n));
    const int d = all.dim();
    std::vector<double> flat(all.flat().begin(),
                             all.flat().begin() +
                                 static_cast<std::ptrdiff_t>(n) * d);
    return TorusPointSet(d, std::move(flat));
  }

  const int d = spec.dim();
  std::vector<double> flat(static_cast<std::size_t>(n) * d);
  constexpr std::size_t kChunk = 16384;

  switch (spec.kind) {
    case SequenceKind::kKronecker: {
      const AlphaVector& a = *spec.alpha;
      parallel_chunks(n, kChunk, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
          const std::uint64_t idx = j + 1;
          for (int i = 0; i < d; ++i)
            flat[j * d + i] = detail::kronecker_coord(a.component(i).frac_bits, idx);
        }
      });
      break;
    }
    case SequenceKind::kPerturbed: {
      const RandomSource rng(spec.seed);
      const double eps = spec.eps;
      const bool kron_core = spec.core_kind == SequenceKind::kKronecker;
      parallel_chunks(n, kChunk, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
          const std::uint64_t idx = j + 1;
          for (int i = 0; i < d; ++i) {
            const double base =
                kron_core
                    ? detail::kronecker_coord(spec.alpha->component(i).frac_bits,
                                              idx)
                    : radical_inverse(spec.bases[i], idx);
            double y = base + eps * rng.uniform(idx, static_cast<std::uint64_t>(i));
            y -= std::floor(y);
            if (y >= 1.0) y = 0.0;
            flat[j * d + i] = y;
          }
        }
      });
      break;
    }
    case SequenceKind::kVanDerCorput:
    case SequenceKind::kHalton: {
      const auto& bases = spec.bases;
      parallel_chunks(n, kChunk, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j)
          for (int i = 0; i < d; ++i)
            flat[j * d + i] = radical_inverse(bases[i], j + 1);
      });
      break;
    }
    case SequenceKind::kIid: {
      const RandomSource rng(spec.seed);
      parallel_chunks(n, kChunk, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j)
          for (int i = 0; i < d; ++i)
            flat[j * d + i] =
                rng.uniform(j + 1, static_cast<std::uint64_t>(i));
      });
      break;
    }
    case SequenceKind::kFile:
      break;  // handled above
  }
  return TorusPointSet(d, std::move(flat));
}

inline TorusPointSet generate(const std::string& spec_text, std::uint64_t n) {
  return generate(parse_spec(spec_text), n);
}

// First m points of an existing set (m <= size).
inline TorusPointSet prefix(const TorusPointSet& points, std::size_t m) {
  if (m > points.size())
    throw std::invalid_argument("prefix length exceeds point count");
  const int d = points.dim();
  std::vector<double> flat(points.flat().begin(),
                           points.flat().begin() +
                               static_cast<std::ptrdiff_t>(m) * d);
  return TorusPointSet(d, std::move(flat));
}

}  // namespace ppclab
