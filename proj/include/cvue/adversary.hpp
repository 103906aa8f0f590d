#pragma once

// Cloning-game harness: a challenger encrypts, Alice splits the cipherstate,
// Bob and Charlie get the key and must both output the plaintext.

#include <cstdint>
#include <string>

#include "cvue/protocol.hpp"

namespace cvue {

enum class StrategyId { heterodyne_split, forward_to_bob, measure_guess_basis };

std::string to_string(StrategyId id);
StrategyId strategy_from_string(const std::string& name);

struct AttackStrategy {
  StrategyId id = StrategyId::heterodyne_split;
  /// Beamsplitter transmittance towards Bob for the splitting strategies.
  double split_transmittance = 0.5;

  void validate() const;
};

struct CipherHalves {
  CipherState bob;
  CipherState charlie;
};

/// Mixes each mode with vacuum on a beamsplitter; port 1 goes to Bob, port 2
/// to Charlie after a pi phase flip so both halves carry +sqrt(.) d.
CipherHalves heterodyne_split(const CipherState& cipher, double transmittance = 0.5);

/// Decrypts a half with thresholds at threshold_scale * k_i.
std::optional<BitString> decode_half(const CipherState& half, const QecmKey& key, const ProtocolParams& params,
                                     const Codec& codec, Rng& rng, double threshold_scale);

/// Per-bit error of a player who receives a fraction `transmittance` of the
/// mode: 1/2 Erfc(alpha sqrt(T) / sqrt(T / cosh r + 1 - T)).
double split_bit_error(double displacement, double squeezing, double transmittance);

struct GameOutcome {
  StrategyId strategy = StrategyId::heterodyne_split;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  std::uint64_t bob_successes = 0;
  std::uint64_t charlie_successes = 0;
  /// Codeword bits each player measured and how many were wrong; zero bits
  /// when the player never measures (the blind guesser).
  std::uint64_t bob_bits = 0;
  std::uint64_t bob_bit_errors = 0;
  std::uint64_t charlie_bits = 0;
  std::uint64_t charlie_bit_errors = 0;
  Interval win_interval;

  double win_rate() const { return trials ? static_cast<double>(wins) / static_cast<double>(trials) : 0.0; }
  /// NaN when no bits were measured.
  double bob_bit_error_rate() const;
  double charlie_bit_error_rate() const;
};

/// Trial i uses make_rng(master_seed, i); oracle codec throughout.
GameOutcome run_cloning_game(const ProtocolParams& params, const AttackStrategy& strategy, std::uint64_t trials,
                             std::uint64_t master_seed);

struct BoundCheck {
  double bound = 1.0;       // min(1, 2^(-n + tau))
  double log2_bound = 0.0;  // -n + tau, NaN when tau is undefined (t > N/2)
  bool vacuous = true;      // bound == 1
  double win_upper = 1.0;   // Wilson upper limit of the win rate
  bool holds = true;        // win_upper <= bound
  double slack = 0.0;       // bound - win_upper
};

BoundCheck check_against_bound(const GameOutcome& outcome, const ProtocolParams& params);

}  // namespace cvue
