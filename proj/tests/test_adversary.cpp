#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cvue/adversary.hpp"
#include "cvue/bounds.hpp"
#include "cvue/eb.hpp"

using namespace cvue;

TEST_CASE("strategy names and validation") {
  for (auto id : {StrategyId::heterodyne_split, StrategyId::forward_to_bob, StrategyId::measure_guess_basis})
    CHECK(strategy_from_string(to_string(id)) == id);
  CHECK_THROWS(strategy_from_string("clone"));
  CHECK_THROWS(AttackStrategy{StrategyId::heterodyne_split, 1.0}.validate());
  CHECK_THROWS(AttackStrategy{StrategyId::heterodyne_split, 0.0}.validate());
}

TEST_CASE("heterodyne split halves") {
  const double a = 0.4, r = 3.4;
  CipherState c;
  c.modes.push_back(make_squeezed_coherent<double>(Eigen::Vector2d(a, 0.0), r, Quadrature::q));
  c.modes.push_back(ModeState::vacuum());
  const CipherHalves h = heterodyne_split(c);
  REQUIRE(h.bob.modes.size() == 2);
  REQUIRE(h.charlie.modes.size() == 2);
  for (const auto* half : {&h.bob, &h.charlie}) {
    CHECK(half->modes[0].mean(0, Quadrature::q) == doctest::Approx(a / std::sqrt(2.0)));
    CHECK(half->modes[0].variance(0, Quadrature::q) == doctest::Approx(0.5 * (0.5 + 0.5 / std::cosh(r))));
    CHECK(half->modes[1].covariance().isApprox(Eigen::Matrix2d::Identity()));
    CHECK(half->modes[1].displacement().isZero());
  }
  const CipherHalves uneven = heterodyne_split(c, 0.8);
  CHECK(uneven.bob.modes[0].mean(0, Quadrature::q) == doctest::Approx(a * std::sqrt(0.8)));
  CHECK(uneven.charlie.modes[0].mean(0, Quadrature::q) == doctest::Approx(a * std::sqrt(0.2)));
}

TEST_CASE("split bit error formula") {
  CHECK(split_bit_error(0.4, 3.4, 0.5) == doctest::Approx(0.5 * std::erfc(0.4 / std::sqrt(1 + 1 / std::cosh(3.4)))));
  CHECK(split_bit_error(0.4, 3.4, 0.5) == doctest::Approx(0.291942).epsilon(1e-5));
  CHECK(split_bit_error(0.4, 40.0, 0.5) == doctest::Approx(0.5 * std::erfc(0.4)).epsilon(1e-9));
  CHECK(split_bit_error(1e-12, 3.4, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("empty game") {
  const GameOutcome g = run_cloning_game(make_params(4, 8, 1, 0.4, 1.0), AttackStrategy{}, 0, 1);
  CHECK(g.trials == 0);
  CHECK(g.wins == 0);
  CHECK(g.win_rate() == 0.0);
  CHECK(std::isnan(g.bob_bit_error_rate()));
}

TEST_CASE("forward to Bob: the blind guesser never wins at n = 20") {
  const auto p = make_params(20, 32, 3, 0.8, 4.0);
  const GameOutcome g = run_cloning_game(p, AttackStrategy{StrategyId::forward_to_bob, 0.5}, 100000, 2);
  CHECK(g.wins == 0);
  CHECK(g.charlie_bits == 0);
  CHECK(g.bob_successes > 99000);
  CHECK(check_against_bound(g, p).holds);
}

TEST_CASE("heterodyne split on a small weakly squeezed instance") {
  const auto p = make_params(4, 8, 1, 0.4, 0.5);
  const std::uint64_t trials = 50000;
  const GameOutcome g = run_cloning_game(p, AttackStrategy{StrategyId::heterodyne_split, 0.5}, trials, 3);
  const double e = split_bit_error(0.4, 0.5, 0.5);
  CHECK(binomial_z(g.bob_bit_errors, g.bob_bits, e) < 5.0);
  CHECK(binomial_z(g.charlie_bit_errors, g.charlie_bits, e) < 5.0);
  // each player succeeds iff at most one of 8 bits flips, independently given the key
  const double each = std::pow(1 - e, 8) + 8 * e * std::pow(1 - e, 7);
  CHECK(binomial_z(g.wins, trials, each * each) < 5.0);
  const BoundCheck b = check_against_bound(g, p);
  CHECK(b.holds);
  CHECK(g.win_interval.upper <= std::min(1.0, win_bound(4, tau(8, 1, 0.4))));
}

TEST_CASE("measuring a guessed basis") {
  const auto p = make_params(4, 16, 2, 0.6, 2.0);
  const GameOutcome g = run_cloning_game(p, AttackStrategy{StrategyId::measure_guess_basis, 0.5}, 5000, 4);
  CHECK(g.bob_bits == 5000u * 16u);
  CHECK(g.bob_bit_error_rate() > split_bit_error(0.6, 2.0, 0.5) * 0.9);
  CHECK(check_against_bound(g, p).holds);
}

TEST_CASE("bound check on a non-vacuous point") {
  const auto p = make_params(40, 64, 0, 0.05, 5.0);
  for (auto id : {StrategyId::heterodyne_split, StrategyId::forward_to_bob, StrategyId::measure_guess_basis}) {
    const GameOutcome g = run_cloning_game(p, AttackStrategy{id, 0.5}, 20000, 5);
    const BoundCheck b = check_against_bound(g, p);
    CHECK_FALSE(b.vacuous);
    CHECK(b.log2_bound == doctest::Approx(tau(64, 0, 0.05) - 40));
    CHECK(b.holds);
    CHECK(b.slack > 0);
  }
  const GameOutcome g = run_cloning_game(make_params(4, 8, 6, 0.4, 1.0), AttackStrategy{}, 10, 1);
  CHECK(std::isnan(check_against_bound(g, make_params(4, 8, 6, 0.4, 1.0)).log2_bound));
}

TEST_CASE("entanglement-based offsets") {
  CHECK(eb_offset(0.5, 0, 0.4, 3.4) == doctest::Approx(0.1 * std::tanh(3.4)));
  CHECK(eb_offset(-0.5, 1, 0.4, 3.4) == doctest::Approx(-0.1 * std::tanh(3.4)));
  CHECK(eb_acceptance_probability(0.4, 3.4) == doctest::Approx(std::erf(0.4 / std::sqrt(std::cosh(3.4)))));
  CHECK(eb_acceptance_probability(0.4, 3.4) == doctest::Approx(0.116130).epsilon(1e-5));
  CHECK_THROWS(RestrictedEprSpec{0.0, 0.4, 0, 0}.validate());
}

TEST_CASE("sampled EB modes") {
  Rng rng(9);
  for (int c : {0, 1}) {
    for (int phi : {0, 1}) {
      const RestrictedEprSpec spec{3.4, 0.4, c, phi};
      for (int i = 0; i < 200; ++i) {
        const EbModeSample s = sample_eb_mode(spec, rng);
        REQUIRE(std::fabs(s.u - spec.centre()) < 0.4);
        const auto axis = phi ? Quadrature::p : Quadrature::q;
        const double k = eb_offset(s.u, c, 0.4, 3.4);
        REQUIRE(s.mode.mean(0, axis) == doctest::Approx(spec.centre() + k));
        REQUIRE(s.mode.covariance()(phi, phi) == doctest::Approx(1.0 / std::cosh(3.4)));
      }
    }
  }
}

TEST_CASE("EB preparation of a whole challenge") {
  const auto p = make_params(8, 16, 1, 0.4, 3.4);
  auto codec = make_codec(p.codec_spec(CodecScheme::oracle));
  Rng rng(10);
  const QecmKey key = key_gen(p, rng);
  const BitString m = random_bits(8, rng);
  const EbChallengeRecord rec = eb_prepare(p, key.pad, key.directions, m, *codec, rng);
  CHECK(rec.cipher.modes.size() == 16);
  CHECK(rec.codeword == codec->encode(base_encrypt(key.pad, m)));
  for (std::size_t i = 0; i < 16; ++i) CHECK(std::fabs(rec.offsets[i]) < 0.4 * std::tanh(3.4));
}

TEST_CASE("rejection oracle matches the direct sampler") {
  const RejectionReport r = rejection_oracle_test(0.4, 3.4, 20000, 11);
  CHECK(r.passed);
  CHECK(std::fabs(r.acceptance_z) < 5.0);
  CHECK(r.u_ks.p_value > 0.001);
  CHECK(r.max_covariance_error < 1e-10);
  const EquivalenceReport e = game_equivalence_test(make_params(8, 16, 1, 0.4, 3.4), 20000, 12);
  CHECK(e.passed);
  CHECK(e.candidate_violations == 0);
  CHECK(e.range_violations == 0);
}
