#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "cvue/bounds.hpp"
#include "cvue/channel.hpp"
#include "cvue/protocol.hpp"

using namespace cvue;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(make_params(892, 1000, 35, 0.4, 3.4).validate());
  CHECK_THROWS(make_params(4, 7, 1, 0.4, 1.0).validate());
  CHECK_THROWS(make_params(9, 8, 1, 0.4, 1.0).validate());
  CHECK_THROWS(make_params(4, 8, 9, 0.4, 1.0).validate());
  CHECK_THROWS(make_params(4, 8, 1, 0.0, 1.0).validate());
  CHECK_THROWS(make_params(4, 8, 1, 0.4, -1.0).validate());
  auto p = make_params(4, 8, 1, 0.4, 1.0);
  p.pad_len = 3;
  CHECK_THROWS(p.validate());
  CHECK(make_params(4, 8, 1, 0.4, 0.0).degenerate());
}

TEST_CASE("balanced labels: N = 8 enumeration is a bijection") {
  CHECK(balanced_count(8) == 70);
  CHECK(balanced_count(1000) == binomial(1000, 500));
  std::set<BitString> seen;
  for (int i = 0; i < 70; ++i) {
    const BitString b = unrank_balanced(Label(i), 8);
    CHECK(hamming_weight(b) == 4);
    CHECK(rank_balanced(b) == i);
    seen.insert(b);
  }
  CHECK(seen.size() == 70);
  CHECK_THROWS(unrank_balanced(Label(70), 8));
  CHECK_THROWS(rank_balanced(BitString{1, 1, 1, 0}));
}

TEST_CASE("balanced labels round trip at N = 1000") {
  Rng rng(6);
  for (int i = 0; i < 5; ++i) {
    const Label l = uniform_label(balanced_count(1000), rng);
    const BitString b = unrank_balanced(l, 1000);
    CHECK(hamming_weight(b) == 500);
    CHECK(rank_balanced(b) == l);
  }
}

TEST_CASE("key generation draws each N = 8 direction string with frequency 1/70") {
  const auto p = make_params(4, 8, 1, 0.4, 1.0);
  Rng rng(21);
  std::map<BitString, int> counts;
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) counts[key_gen(p, rng).directions]++;
  CHECK(counts.size() == 70);
  double chi = 0;
  for (const auto& [b, c] : counts) chi += (c - 1000.0) * (c - 1000.0) / 1000.0;
  // chi-square with 69 degrees of freedom: 0.001 upper quantile ~ 111.1
  CHECK(chi < 111.1);
  std::map<BitString, int> shuffled;
  for (int i = 0; i < draws; ++i) shuffled[key_gen_unlabelled(p, rng).directions]++;
  double chi2 = 0;
  for (const auto& [b, c] : shuffled) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  CHECK(shuffled.size() == 70);
  CHECK(chi2 < 111.1);
}

TEST_CASE("key structure and offsets") {
  const auto p = make_params(892, 1000, 35, 0.4, 3.4);
  Rng rng(8);
  const QecmKey k = key_gen(p, rng);
  CHECK_NOTHROW(validate_key(k, p));
  CHECK(k.pad.size() == 892);
  CHECK(k.directions.size() == 1000);
  CHECK(hamming_weight(k.directions) == 500);
  REQUIRE(k.label.has_value());
  CHECK(rank_balanced(k.directions) == *k.label);
  const double bound = 0.4 * std::tanh(3.4);
  for (double x : k.offsets) CHECK(std::fabs(x) < bound);
  QecmKey bad = k;
  bad.offsets[0] = bound;
  CHECK_THROWS(validate_key(bad, p));
  bad = k;
  bad.directions[0] ^= 1;
  CHECK_THROWS(validate_key(bad, p));
}

TEST_CASE("offset distribution parameters") {
  const auto d = offset_distribution(0.4, 3.4);
  CHECK(d.sigma() == doctest::Approx(std::sqrt(0.5 * std::cosh(3.4)) * std::tanh(3.4)));
  CHECK(d.bound() == doctest::Approx(0.39911).epsilon(1e-4));
  Rng rng(1);
  CHECK(sample_truncated_k(0.4, 0.0, rng) == 0.0);
}

TEST_CASE("degenerate r = 0 pins offsets and still works") {
  const auto p = make_params(4, 8, 1, 0.4, 0.0);
  Rng rng(2);
  const QecmKey k = key_gen(p, rng);
  for (double x : k.offsets) CHECK(x == 0.0);
}

TEST_CASE("encryption prepares the right mode") {
  const ModeState m0 = prepare_mode(0, 0, 0.1, 0.4, 3.4);
  CHECK(m0.mean(0, Quadrature::q) == doctest::Approx(0.5));
  CHECK(m0.covariance()(0, 0) == doctest::Approx(1.0 / std::cosh(3.4)));
  const ModeState m1 = prepare_mode(1, 1, 0.1, 0.4, 3.4);
  CHECK(m1.mean(0, Quadrature::p) == doctest::Approx(-0.3));
  CHECK(m1.mean(0, Quadrature::q) == doctest::Approx(0.0));
  CHECK(m1.covariance()(1, 1) == doctest::Approx(1.0 / std::cosh(3.4)));
  CHECK(threshold_bit(0.1, 0.1) == 0);
  CHECK(threshold_bit(0.0999, 0.1) == 1);
}

TEST_CASE("honest round trip at strong squeezing decrypts") {
  const auto p = make_params(16, 32, 3, 1.5, 4.0);
  auto codec = make_codec(p.codec_spec(CodecScheme::oracle));
  Rng rng(12);
  const QecmKey key = key_gen(p, rng);
  const BitString m = random_bits(16, rng);
  const CipherState c = encrypt(key, m, p, *codec);
  CHECK(c.modes.size() == 32);
  CHECK(decrypt(key, c, p, *codec, rng) == m);
}

TEST_CASE("round trip statistics agree with analytic rates") {
  const auto p = make_params(8, 64, 4, 0.4, 2.0);
  const RoundTripReport r = run_round_trip(p, 4000, 5);
  const double beta = ber_analytic(0.4, 2.0);
  CHECK(r.modes == 4000u * 64u);
  CHECK(binomial_z(r.flips, r.modes, beta) < 5.0);
  // exact binomial tail as the failure oracle
  double tail = 0;
  for (int j = 5; j <= 64; ++j) tail += std::exp(log_binomial(64, j) + j * std::log(beta) + (64 - j) * std::log1p(-beta));
  CHECK(binomial_z(r.failures, r.trials, tail) < 5.0);
}

TEST_CASE("round trip with the concrete codec") {
  const auto p = make_params(16, 64, 5, 0.4, 3.4);
  const RoundTripReport r = run_round_trip(p, 300, 5, nullptr, CodecScheme::concrete);
  CHECK(r.trials == 300);
  CHECK(r.failures <= 3);
}

TEST_CASE("t = N accepts every trial") {
  const auto p = make_params(2, 4, 4, 0.1, 0.5);
  const RoundTripReport r = run_round_trip(p, 200, 1);
  CHECK(r.failures == 0);
}

TEST_CASE("trials are reproducible from the master seed") {
  const auto p = make_params(8, 16, 1, 0.4, 3.4);
  const RoundTripReport a = run_round_trip(p, 100, 77), b = run_round_trip(p, 100, 77), c = run_round_trip(p, 100, 78);
  CHECK(a.flips == b.flips);
  CHECK(a.failures == b.failures);
  CHECK(a.flips != c.flips);
}
