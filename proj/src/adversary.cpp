#include "cvue/adversary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvue/bounds.hpp"

namespace cvue {

std::string to_string(StrategyId id) {
  switch (id) {
    case StrategyId::heterodyne_split: return "heterodyne_split";
    case StrategyId::forward_to_bob: return "forward_to_bob";
    case StrategyId::measure_guess_basis: return "measure_guess_basis";
  }
  return "?";
}

StrategyId strategy_from_string(const std::string& name) {
  if (name == "heterodyne_split") return StrategyId::heterodyne_split;
  if (name == "forward_to_bob") return StrategyId::forward_to_bob;
  if (name == "measure_guess_basis") return StrategyId::measure_guess_basis;
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected heterodyne_split, forward_to_bob or measure_guess_basis)");
}

void AttackStrategy::validate() const {
  if (!(split_transmittance > 0.0 && split_transmittance < 1.0)) {
    throw std::invalid_argument("strategy: split transmittance must lie in (0, 1)");
  }
}

namespace {

using TwoMode = GaussianState<double, 2>;

TwoMode with_vacuum(const ModeState& mode) {
  TwoMode::Vector d = TwoMode::Vector::Zero();
  TwoMode::Matrix cov = TwoMode::Matrix::Identity();
  d.head<2>() = mode.displacement();
  cov.topLeftCorner<2, 2>() = mode.covariance();
  return {d, cov};
}

TwoMode split_mode(const ModeState& mode, double transmittance) {
  return phase_flip(apply_beamsplitter(with_vacuum(mode), 0, 1, transmittance), 1);
}

double rate(std::uint64_t errors, std::uint64_t bits) {
  return bits ? static_cast<double>(errors) / static_cast<double>(bits) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

CipherHalves heterodyne_split(const CipherState& cipher, double transmittance) {
  CipherHalves halves;
  halves.bob.modes.reserve(cipher.modes.size());
  halves.charlie.modes.reserve(cipher.modes.size());
  for (const auto& mode : cipher.modes) {
    const TwoMode out = split_mode(mode, transmittance);
    halves.bob.modes.push_back(extract_mode(out, 0));
    halves.charlie.modes.push_back(extract_mode(out, 1));
  }
  return halves;
}

std::optional<BitString> decode_half(const CipherState& half, const QecmKey& key, const ProtocolParams& params,
                                     const Codec& codec, Rng& rng, double threshold_scale) {
  return decrypt(key, half, params, codec, rng, threshold_scale);
}

double split_bit_error(double displacement, double squeezing, double transmittance) {
  const double signal = displacement * std::sqrt(transmittance);
  const double noise = transmittance / std::cosh(squeezing) + (1.0 - transmittance);
  return 0.5 * std::erfc(signal / std::sqrt(noise));
}

double GameOutcome::bob_bit_error_rate() const { return rate(bob_bit_errors, bob_bits); }
double GameOutcome::charlie_bit_error_rate() const { return rate(charlie_bit_errors, charlie_bits); }

GameOutcome run_cloning_game(const ProtocolParams& params, const AttackStrategy& strategy, std::uint64_t trials,
                             std::uint64_t master_seed) {
  params.validate();
  strategy.validate();
  const double tb = strategy.split_transmittance;
  const double scale_bob = std::sqrt(tb);
  const double scale_charlie = std::sqrt(1.0 - tb);

  GameOutcome out;
  out.strategy = strategy.id;
  out.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = make_rng(master_seed, trial);
    const BitString message = random_bits(static_cast<std::size_t>(params.message_len), rng);
    const QecmKey key = key_gen_unlabelled(params, rng);
    OracleCodec codec(params.codec_spec(CodecScheme::oracle));
    const BitString codeword = codeword_for(key, message, codec);
    const CipherState cipher = prepare_cipher(key, codeword, params);

    auto recover = [&](const BitString& received) -> std::optional<BitString> {
      const auto decoded = codec.decode(received);
      if (!decoded) return std::nullopt;
      return base_decrypt(key.pad, *decoded);
    };

    std::optional<BitString> bob;
    std::optional<BitString> charlie;
    switch (strategy.id) {
      case StrategyId::heterodyne_split: {
        const CipherHalves halves = heterodyne_split(cipher, tb);
        // Key revealed from here on.
        const BitString cb = measure_codeword(key, halves.bob, rng, scale_bob);
        const BitString cc = measure_codeword(key, halves.charlie, rng, scale_charlie);
        out.bob_bits += cb.size();
        out.bob_bit_errors += hamming_distance(cb, codeword);
        out.charlie_bits += cc.size();
        out.charlie_bit_errors += hamming_distance(cc, codeword);
        bob = recover(cb);
        charlie = recover(cc);
        break;
      }
      case StrategyId::forward_to_bob: {
        const BitString cb = measure_codeword(key, cipher, rng, 1.0);
        out.bob_bits += cb.size();
        out.bob_bit_errors += hamming_distance(cb, codeword);
        bob = recover(cb);
        charlie = random_bits(static_cast<std::size_t>(params.message_len), rng);
        break;
      }
      case StrategyId::measure_guess_basis: {
        // Alice heterodynes before the key is known: q on one port, p on the other.
        std::vector<double> q_record(cipher.modes.size());
        std::vector<double> p_record(cipher.modes.size());
        for (std::size_t i = 0; i < cipher.modes.size(); ++i) {
          const TwoMode out2 = split_mode(cipher.modes[i], tb);
          q_record[i] = homodyne_outcome(out2, 0, Quadrature::q, rng);
          p_record[i] = homodyne_outcome(out2, 1, Quadrature::p, rng);
        }
        // Both players hold the same record and threshold on the revealed axis.
        BitString guess(cipher.modes.size());
        for (std::size_t i = 0; i < guess.size(); ++i) {
          guess[i] = key.directions[i] ? threshold_bit(p_record[i], scale_charlie * key.offsets[i])
                                       : threshold_bit(q_record[i], scale_bob * key.offsets[i]);
        }
        const std::size_t errors = hamming_distance(guess, codeword);
        out.bob_bits += guess.size();
        out.bob_bit_errors += errors;
        out.charlie_bits += guess.size();
        out.charlie_bit_errors += errors;
        bob = recover(guess);
        charlie = bob;
        break;
      }
    }
    const bool bob_ok = bob && *bob == message;
    const bool charlie_ok = charlie && *charlie == message;
    out.bob_successes += bob_ok;
    out.charlie_successes += charlie_ok;
    out.wins += (bob_ok && charlie_ok);
  }
  out.win_interval = wilson_interval(out.wins, out.trials);
  return out;
}

BoundCheck check_against_bound(const GameOutcome& outcome, const ProtocolParams& params) {
  params.validate();
  BoundCheck check;
  if (2 * params.correctable <= params.codeword_len) {
    const double tv = tau(params.codeword_len, params.correctable, params.displacement);
    check.log2_bound = log2_win_bound(params.message_len, tv);
    check.bound = win_bound(params.message_len, tv);
  } else {
    check.log2_bound = std::numeric_limits<double>::quiet_NaN();
    check.bound = 1.0;
  }
  check.vacuous = check.bound >= 1.0;
  check.win_upper = outcome.trials ? outcome.win_interval.upper : 0.0;
  check.holds = check.win_upper <= check.bound;
  check.slack = check.bound - check.win_upper;
  return check;
}

}  // namespace cvue
