#pragma once

// Key generation, encryption and decryption of the squeezed-state scheme.
// A codeword bit c_i is carried by mode i as a displacement
// alpha (-1)^{c_i} + k_i along the squeezed quadrature phi_i.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvue/bits.hpp"
#include "cvue/codec.hpp"
#include "cvue/gaussian.hpp"
#include "cvue/random.hpp"
#include "cvue/stats.hpp"

namespace cvue {

struct ChannelParams;

struct ProtocolParams {
  int security_param = 1;  // lambda; recorded, the concrete sizes below are explicit
  int message_len = 0;     // n
  int codeword_len = 0;    // N, even
  int correctable = 0;     // t
  int pad_len = 0;         // z, equal to n for the one-time pad
  double displacement = 0.0;
  double squeezing = 0.0;

  void validate() const;
  CodecSpec codec_spec(CodecScheme scheme) const {
    return {message_len, codeword_len, correctable, scheme};
  }
  /// r = 0: no squeezing, offsets pinned to 0, no basis hiding.
  bool degenerate() const { return squeezing == 0.0; }
};

/// Parameters with n = z and N, t, alpha, r as given.
ProtocolParams make_params(int message_len, int codeword_len, int correctable, double displacement, double squeezing);

// --- balanced direction strings ----------------------------------------------

using Label = boost::multiprecision::cpp_int;

Label binomial(int n, int k);
/// Number of length-N strings of weight N/2.
Label balanced_count(int codeword_len);
/// Colexicographic rank of a weight-N/2 string, in [0, C(N, N/2)).
Label rank_balanced(const BitString& directions);
BitString unrank_balanced(const Label& label, int codeword_len);
/// Uniform integer in [0, bound).
Label uniform_label(const Label& bound, Rng& rng);
/// Uniform weight-N/2 string by shuffling; same distribution as unranking a uniform label.
BitString sample_balanced(int codeword_len, Rng& rng);

// --- key ---------------------------------------------------------------------

struct QecmKey {
  BitString pad;               // s, length z
  BitString directions;        // phi, length N, weight N/2
  std::vector<double> offsets; // k, each in (-alpha tanh r, alpha tanh r)
  std::optional<Label> label;  // rank of phi when it was drawn by label
};

/// Sampler for k: Normal(0, cosh(r) tanh(r)^2 / 2) truncated to (-alpha tanh r, alpha tanh r).
SymmetricTruncatedNormal offset_distribution(double displacement, double squeezing);
double sample_truncated_k(double displacement, double squeezing, Rng& rng);

/// Draws the label uniformly and unranks it into phi.
QecmKey key_gen(const ProtocolParams& params, Rng& rng);
/// Same key distribution without materializing the label; used by the
/// Monte-Carlo harnesses where C(N, N/2) arithmetic would dominate.
QecmKey key_gen_unlabelled(const ProtocolParams& params, Rng& rng);

void validate_key(const QecmKey& key, const ProtocolParams& params);

// --- cipherstate -------------------------------------------------------------

struct CipherState {
  std::vector<ModeState> modes;
};

ModeState prepare_mode(int codeword_bit, int direction_bit, double offset, double displacement, double squeezing);
CipherState prepare_cipher(const QecmKey& key, const BitString& codeword, const ProtocolParams& params);
/// Codeword c = Encode(Enc_base(s, m)).
BitString codeword_for(const QecmKey& key, const BitString& message, Codec& codec);
CipherState encrypt(const QecmKey& key, const BitString& message, const ProtocolParams& params, Codec& codec);

/// c = 1/2 - 1/2 sign(y - threshold), with sign(0) taken as +1.
inline std::uint8_t threshold_bit(double outcome, double threshold) { return outcome >= threshold ? 0 : 1; }

/// Homodynes every mode along phi_i and thresholds at scale * k_i.
BitString measure_codeword(const QecmKey& key, const CipherState& cipher, Rng& rng, double threshold_scale = 1.0);

std::optional<BitString> decrypt(const QecmKey& key, const CipherState& cipher, const ProtocolParams& params,
                                 const Codec& codec, Rng& rng, double threshold_scale = 1.0);

// --- Monte Carlo -------------------------------------------------------------

struct RoundTripReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  Interval failure_interval;
  std::uint64_t modes = 0;
  std::uint64_t flips = 0;
  Interval flip_interval;

  double failure_rate() const { return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0; }
  double flip_rate() const { return modes ? static_cast<double>(flips) / static_cast<double>(modes) : 0.0; }
};

/// Honest encrypt/decrypt trials; trial i uses make_rng(master_seed, i). An
/// optional channel sits between the parties. With the oracle codec a trial
/// fails exactly when more than t codeword bits flip.
RoundTripReport run_round_trip(const ProtocolParams& params, std::uint64_t trials, std::uint64_t master_seed,
                               const ChannelParams* channel = nullptr, CodecScheme scheme = CodecScheme::oracle);

}  // namespace cvue
