#pragma once

// Entanglement-based preparation. The challenger holds one half of a
// restricted displaced EPR pair per mode, homodynes it to get u_i, and sets
// k_i = (u_i - alpha (-1)^{c_i}) tanh r. The restricted (truncated) state is
// not Gaussian, so it is represented by its measurement statistics: u_i is a
// truncated normal and the partner mode is the Gaussian conditional.

#include <cstdint>
#include <vector>

#include "cvue/protocol.hpp"

namespace cvue {

struct RestrictedEprSpec {
  double squeezing = 0.0;
  double displacement = 0.0;
  int codeword_bit = 0;
  int direction_bit = 0;

  void validate() const;
  /// alpha (-1)^c: centre of the admissible u-interval (centre - alpha, centre + alpha).
  double centre() const { return codeword_bit ? -displacement : displacement; }
};

struct EbModeSample {
  double u;
  ModeState mode;
};

/// u ~ Normal(centre, cosh(r)/2) truncated to (centre - alpha, centre + alpha);
/// partner displacement centre + (u - centre) tanh r along phi, squeezed as in encryption.
EbModeSample sample_eb_mode(const RestrictedEprSpec& spec, Rng& rng);

double eb_offset(double u, int codeword_bit, double displacement, double squeezing);

struct EbChallengeRecord {
  std::vector<double> u;
  std::vector<double> offsets;
  BitString codeword;
  CipherState cipher;
};

EbChallengeRecord eb_prepare(const ProtocolParams& params, const BitString& pad, const BitString& directions,
                             const BitString& message, Codec& codec, Rng& rng);

struct RejectionSample {
  double u;
  ModeState mode;
  std::uint64_t attempts;
};

/// Builds the displaced two-mode squeezed state, homodynes the challenger mode
/// in q and retries until u lands in the admissible interval.
RejectionSample eb_rejection_oracle(const RestrictedEprSpec& spec, Rng& rng);

/// Probability that an unrestricted challenger outcome is admissible.
double eb_acceptance_probability(double displacement, double squeezing);

struct EquivalenceReport {
  std::uint64_t samples = 0;
  std::uint64_t candidate_violations = 0;  // u not equal to k / tanh r + alpha (-1)^c
  std::uint64_t range_violations = 0;      // u outside (-2 alpha, 2 alpha)
  double max_candidate_error = 0.0;
  std::uint64_t flips_prepare_send = 0;
  std::uint64_t flips_entanglement = 0;
  double beta_prepare_send = 0.0;
  double beta_entanglement = 0.0;
  double z = 0.0;
  KsResult offsets_ks;
  bool passed = false;
};

/// Checks on `modes` sampled modes that (a) the two candidate u values are
/// k / tanh r +- alpha, (b) honest flip rates agree between prepare-and-send
/// and EB preparation (|z| <= 5), (c) EB-derived and directly sampled k agree
/// (KS p > 0.01, on up to 1e5 samples each).
EquivalenceReport game_equivalence_test(const ProtocolParams& params, std::uint64_t modes, std::uint64_t master_seed);

struct RejectionReport {
  std::uint64_t samples = 0;
  std::uint64_t attempts = 0;
  double acceptance_observed = 0.0;
  double acceptance_expected = 0.0;
  double acceptance_z = 0.0;           // binomial z of observed vs expected
  KsResult u_ks;                       // rejection-oracle u vs sample_eb_mode u
  double max_covariance_error = 0.0;   // vs diag(1/cosh r, cosh r), rotated per phi
  double max_displacement_error = 0.0; // vs centre + (u - centre) tanh r
  bool passed = false;
};

/// Compares `samples` accepted rejection-oracle draws with the same number of
/// direct draws (random codeword and direction bits on both sides).
RejectionReport rejection_oracle_test(double displacement, double squeezing, std::uint64_t samples,
                                      std::uint64_t master_seed);

}  // namespace cvue
