#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "ppclab/continued_fraction.hpp"
#include "ppclab/io.hpp"
#include "ppclab/random.hpp"
#include "ppclab/sequences.hpp"

using namespace ppclab;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("radical inverse digit reversal") {
  CHECK(radical_inverse(2, 1) == 0.5);
  CHECK(radical_inverse(2, 2) == 0.25);
  CHECK(radical_inverse(2, 3) == 0.75);
  CHECK(radical_inverse(2, 4) == 0.125);
  CHECK(radical_inverse(3, 1) == Catch::Approx(1.0 / 3.0));
  CHECK(radical_inverse(3, 2) == Catch::Approx(2.0 / 3.0));
  CHECK(radical_inverse(3, 3) == Catch::Approx(1.0 / 9.0));
  CHECK(radical_inverse(7, 0) == 0.0);
  CHECK_THROWS_AS(radical_inverse(1, 5), std::invalid_argument);
}

TEST_CASE("Kronecker orbit fixed-point arithmetic is exact") {
  const AlphaVector golden = AlphaVector::preset("golden");
  const TorusPointSet pts = generate("kronecker:golden", 1);
  CHECK(pts.at(0)[0] == golden.value(0));

  // High-precision oracle: frac(n * alpha) with alpha recomputed to 100
  // decimal digits, entirely outside the u128 fixed-point path.
  const BigFloat alpha = (sqrt(BigFloat(5)) - 1) / 2;
  for (const std::uint64_t n : {std::uint64_t{1000000}, std::uint64_t{987654321}}) {
    BigFloat x = alpha * n;
    x -= floor(x);
    const double expect = x.convert_to<double>();
    const double got =
        detail::kronecker_coord(golden.component(0).frac_bits, n);
    CHECK(got == Catch::Approx(expect).margin(1e-15));
  }
}

TEST_CASE("perturbed points recompute from the counter RNG") {
  const SequenceSpec spec = parse_spec("perturbed:golden:eps=0.25:seed=9");
  const TorusPointSet pts = generate(spec, 10);
  const RandomSource rng(9);
  const auto bits = AlphaVector::preset("golden").component(0).frac_bits;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const std::uint64_t idx = j + 1;
    double y = detail::kronecker_coord(bits, idx) + 0.25 * rng.uniform(idx, 0);
    y -= std::floor(y);
    if (y >= 1.0) y = 0.0;
    CHECK(pts.at(j)[0] == y);
  }
}

TEST_CASE("halton hand values") {
  const TorusPointSet pts = generate("halton:2,3", 3);
  CHECK(pts.at(0)[0] == 0.5);
  CHECK(pts.at(0)[1] == Catch::Approx(1.0 / 3.0));
  CHECK(pts.at(1)[0] == 0.25);
  CHECK(pts.at(1)[1] == Catch::Approx(2.0 / 3.0));
  CHECK(pts.at(2)[0] == 0.75);
  CHECK(pts.at(2)[1] == Catch::Approx(1.0 / 9.0));
}

TEST_CASE("every family yields coordinates in [0,1) and consistent prefixes") {
  const std::vector<std::string> specs = {
      "kronecker:golden",
      "kronecker:sqrt23",
      "perturbed:golden:eps=0.1:seed=3",
      "perturbed:vdc:2:eps=0.2:seed=1",
      "perturbed:halton:2,3:eps=0.3:seed=4",
      "vdc:2",
      "halton:2,3,5",
      "iid:d=2:seed=11",
  };
  for (const auto& s : specs) {
    INFO("spec = " << s);
    const TorusPointSet big = generate(s, 50);
    const TorusPointSet small = generate(s, 30);
    REQUIRE(big.size() == 50);
    REQUIRE(small.size() == 30);
    REQUIRE(big.dim() == small.dim());
    for (double v : big.flat()) {
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
    }
    // Extending a sequence never changes earlier points (bitwise).
    for (std::size_t k = 0; k < small.flat().size(); ++k)
      CHECK(big.flat()[k] == small.flat()[k]);
  }
}

TEST_CASE("perturbed core forms") {
  const SequenceSpec vdc = parse_spec("perturbed:vdc:2:eps=0.5");
  CHECK(vdc.kind == SequenceKind::kPerturbed);
  CHECK(vdc.core_kind == SequenceKind::kVanDerCorput);
  CHECK(vdc.bases == std::vector<unsigned>{2});
  CHECK(vdc.dim() == 1);
  CHECK(vdc.seed == 0);

  const SequenceSpec hal = parse_spec("perturbed:halton:2,3:eps=0.5:seed=2");
  CHECK(hal.core_kind == SequenceKind::kHalton);
  CHECK(hal.dim() == 2);
  CHECK(hal.seed == 2);

  const SequenceSpec kr = parse_spec("perturbed:kronecker:sqrt2:eps=0.5");
  CHECK(kr.core_kind == SequenceKind::kKronecker);
  REQUIRE(kr.alpha.has_value());
  CHECK(kr.dim() == 1);

  const SequenceSpec bare = parse_spec("perturbed:golden:eps=0.1");
  CHECK(bare.core_kind == SequenceKind::kKronecker);
  CHECK(bare.eps == 0.1);
}

TEST_CASE("spec parse rejections") {
  CHECK_THROWS_AS(parse_spec("perturbed:golden"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("perturbed:golden:eps=0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("perturbed:golden:eps=-0.1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("perturbed:golden:eps=0.1:foo=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("perturbed:eps=0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("perturbed:vdc:2:3:eps=0.1"),
                  std::invalid_argument);
  CHECK_THROWS_WITH(parse_spec("halton:2,4"), ContainsSubstring("2, 4"));
  CHECK_THROWS_AS(parse_spec("halton:2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("vdc:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("vdc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("kronecker"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("iid:d=0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("iid:d=65"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("iid:seed=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("iid:d=2:x=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("sobol:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("file:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(""), std::invalid_argument);
}

TEST_CASE("generate with n = 0 returns an empty set of the right dimension") {
  const TorusPointSet empty = generate("halton:2,3,5", 0);
  CHECK(empty.size() == 0);
  CHECK(empty.dim() == 3);
}

TEST_CASE("file-backed point sets round-trip bitwise") {
  const auto path =
      std::filesystem::temp_directory_path() / "ppclab_seq_roundtrip.csv";
  const TorusPointSet pts = generate("halton:2,3", 20);
  write_points_csv(pts, path.string());

  const std::string spec = "file:" + path.string();
  const TorusPointSet all = generate(spec, 0);
  REQUIRE(all.size() == 20);
  REQUIRE(all.dim() == 2);
  for (std::size_t k = 0; k < pts.flat().size(); ++k)
    CHECK(all.flat()[k] == pts.flat()[k]);

  const TorusPointSet head = generate(spec, 5);
  CHECK(head.size() == 5);
  CHECK(head.at(4)[0] == pts.at(4)[0]);

  CHECK_THROWS_AS(generate(spec, 21), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("prefix extraction") {
  const TorusPointSet pts = generate("vdc:2", 8);
  const TorusPointSet head = prefix(pts, 3);
  CHECK(head.size() == 3);
  CHECK(head.at(2)[0] == 0.75);
  CHECK_THROWS_AS(prefix(pts, 9), std::invalid_argument);
}
