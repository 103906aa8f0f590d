#include "cvue/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cvue/channel.hpp"

namespace cvue {

void ProtocolParams::validate() const {
  if (security_param < 1) throw std::invalid_argument("params: security parameter lambda must be positive");
  if (message_len < 1) throw std::invalid_argument("params: message length n must be positive");
  if (codeword_len < 2 || codeword_len % 2 != 0) {
    throw std::invalid_argument("params: codeword length N must be a positive even integer");
  }
  if (message_len > codeword_len) throw std::invalid_argument("params: need n <= N");
  if (correctable < 0 || correctable > codeword_len) throw std::invalid_argument("params: need 0 <= t <= N");
  if (pad_len != message_len) throw std::invalid_argument("params: one-time pad needs z = n");
  if (!(displacement > 0.0) || !std::isfinite(displacement)) {
    throw std::invalid_argument("params: displacement alpha must be positive");
  }
  if (!(squeezing >= 0.0) || !std::isfinite(squeezing)) {
    throw std::invalid_argument("params: squeezing r must be nonnegative");
  }
}

ProtocolParams make_params(int message_len, int codeword_len, int correctable, double displacement,
                           double squeezing) {
  ProtocolParams p;
  p.message_len = message_len;
  p.codeword_len = codeword_len;
  p.correctable = correctable;
  p.pad_len = message_len;
  p.displacement = displacement;
  p.squeezing = squeezing;
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------

Label binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Label value = 1;
  for (int i = 1; i <= k; ++i) {
    value *= n - k + i;
    value /= i;
  }
  return value;
}

Label balanced_count(int codeword_len) { return binomial(codeword_len, codeword_len / 2); }

Label rank_balanced(const BitString& directions) {
  const auto n = static_cast<int>(directions.size());
  if (n % 2 != 0 || static_cast<int>(hamming_weight(directions)) != n / 2) {
    throw std::invalid_argument("rank_balanced: string is not balanced");
  }
  Label rank = 0;
  int seen = 0;
  for (int p = 0; p < n; ++p) {
    if (directions[p]) rank += binomial(p, ++seen);
  }
  return rank;
}

BitString unrank_balanced(const Label& label, int codeword_len) {
  if (codeword_len < 2 || codeword_len % 2 != 0) {
    throw std::invalid_argument("unrank_balanced: N must be a positive even integer");
  }
  if (label < 0 || label >= balanced_count(codeword_len)) {
    throw std::out_of_range("unrank_balanced: label out of range");
  }
  BitString bits(static_cast<std::size_t>(codeword_len), 0);
  Label rest = label;
  int ones = codeword_len / 2;
  Label value = binomial(codeword_len - 1, ones);  // C(p, ones) for p = N - 1
  for (int p = codeword_len - 1; p >= 0 && ones > 0; --p) {
    if (value <= rest) {
      bits[p] = 1;
      rest -= value;
      if (p > 0) value = value * ones / p;  // C(p-1, ones-1)
      --ones;
    } else if (p > 0) {
      value = value * (p - ones) / p;  // C(p-1, ones)
    }
  }
  if (ones != 0 || rest != 0) throw std::logic_error("unrank_balanced: inconsistent state");
  return bits;
}

Label uniform_label(const Label& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_label: bound must be positive");
  const auto bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  const Label mask = (Label(1) << bits) - 1;
  for (;;) {
    Label x = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
      x <<= 64;
      x |= Label(rng());
    }
    x &= mask;
    if (x < bound) return x;
  }
}

BitString sample_balanced(int codeword_len, Rng& rng) {
  if (codeword_len < 2 || codeword_len % 2 != 0) {
    throw std::invalid_argument("sample_balanced: N must be a positive even integer");
  }
  BitString bits(static_cast<std::size_t>(codeword_len), 0);
  std::fill(bits.begin(), bits.begin() + codeword_len / 2, 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  return bits;
}

// ---------------------------------------------------------------------------

SymmetricTruncatedNormal offset_distribution(double displacement, double squeezing) {
  const double tr = std::tanh(squeezing);
  return {std::sqrt(0.5 * std::cosh(squeezing)) * tr, displacement * tr};
}

double sample_truncated_k(double displacement, double squeezing, Rng& rng) {
  if (!(displacement > 0.0)) throw std::invalid_argument("sample_truncated_k: alpha must be positive");
  if (!(squeezing >= 0.0)) throw std::invalid_argument("sample_truncated_k: r must be nonnegative");
  if (squeezing == 0.0) return 0.0;
  return offset_distribution(displacement, squeezing)(rng);
}

namespace {

std::vector<double> sample_offsets(const ProtocolParams& params, Rng& rng) {
  std::vector<double> k(static_cast<std::size_t>(params.codeword_len), 0.0);
  if (params.degenerate()) return k;
  const auto dist = offset_distribution(params.displacement, params.squeezing);
  for (auto& v : k) v = dist(rng);
  return k;
}

}  // namespace

QecmKey key_gen(const ProtocolParams& params, Rng& rng) {
  params.validate();
  QecmKey key;
  key.pad = random_bits(static_cast<std::size_t>(params.pad_len), rng);
  key.label = uniform_label(balanced_count(params.codeword_len), rng);
  key.directions = unrank_balanced(*key.label, params.codeword_len);
  key.offsets = sample_offsets(params, rng);
  return key;
}

QecmKey key_gen_unlabelled(const ProtocolParams& params, Rng& rng) {
  QecmKey key;
  key.pad = random_bits(static_cast<std::size_t>(params.pad_len), rng);
  key.directions = sample_balanced(params.codeword_len, rng);
  key.offsets = sample_offsets(params, rng);
  return key;
}

void validate_key(const QecmKey& key, const ProtocolParams& params) {
  const auto n = static_cast<std::size_t>(params.codeword_len);
  if (key.pad.size() != static_cast<std::size_t>(params.pad_len)) {
    throw std::invalid_argument("key: pad length differs from z");
  }
  if (key.directions.size() != n || key.offsets.size() != n) {
    throw std::invalid_argument("key: direction/offset length differs from N");
  }
  if (hamming_weight(key.directions) != n / 2) throw std::invalid_argument("key: phi must have weight N/2");
  const double bound = params.displacement * std::tanh(params.squeezing);
  for (double k : key.offsets) {
    if (params.degenerate() ? k != 0.0 : !(k > -bound && k < bound)) {
      throw std::invalid_argument("key: offset outside (-alpha tanh r, alpha tanh r)");
    }
  }
  if (key.label && rank_balanced(key.directions) != *key.label) {
    throw std::invalid_argument("key: label does not match phi");
  }
}

// ---------------------------------------------------------------------------

ModeState prepare_mode(int codeword_bit, int direction_bit, double offset, double displacement, double squeezing) {
  const double amplitude = (codeword_bit ? -displacement : displacement) + offset;
  const Vector2<double> d = direction_bit ? Vector2<double>(0.0, amplitude) : Vector2<double>(amplitude, 0.0);
  return make_squeezed_coherent(d, squeezing, quadrature_from_bit(direction_bit));
}

CipherState prepare_cipher(const QecmKey& key, const BitString& codeword, const ProtocolParams& params) {
  const auto n = static_cast<std::size_t>(params.codeword_len);
  if (codeword.size() != n || key.directions.size() != n || key.offsets.size() != n) {
    throw std::invalid_argument("encrypt: codeword/key length differs from N");
  }
  CipherState cipher;
  cipher.modes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cipher.modes.push_back(
        prepare_mode(codeword[i], key.directions[i], key.offsets[i], params.displacement, params.squeezing));
  }
  return cipher;
}

BitString codeword_for(const QecmKey& key, const BitString& message, Codec& codec) {
  if (static_cast<int>(message.size()) != codec.spec().message_len) {
    throw std::invalid_argument("encrypt: message length differs from n");
  }
  return codec.encode(base_encrypt(key.pad, message));
}

CipherState encrypt(const QecmKey& key, const BitString& message, const ProtocolParams& params, Codec& codec) {
  return prepare_cipher(key, codeword_for(key, message, codec), params);
}

BitString measure_codeword(const QecmKey& key, const CipherState& cipher, Rng& rng, double threshold_scale) {
  const auto n = cipher.modes.size();
  if (key.directions.size() != n || key.offsets.size() != n) {
    throw std::invalid_argument("decrypt: cipherstate size differs from the key");
  }
  BitString bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = homodyne_outcome(cipher.modes[i], 0, quadrature_from_bit(key.directions[i]), rng);
    bits[i] = threshold_bit(y, threshold_scale * key.offsets[i]);
  }
  return bits;
}

std::optional<BitString> decrypt(const QecmKey& key, const CipherState& cipher, const ProtocolParams& params,
                                 const Codec& codec, Rng& rng, double threshold_scale) {
  if (static_cast<int>(cipher.modes.size()) != params.codeword_len) {
    throw std::invalid_argument("decrypt: cipherstate must have N modes");
  }
  const auto decoded = codec.decode(measure_codeword(key, cipher, rng, threshold_scale));
  if (!decoded) return std::nullopt;
  return base_decrypt(key.pad, *decoded);
}

RoundTripReport run_round_trip(const ProtocolParams& params, std::uint64_t trials, std::uint64_t master_seed,
                               const ChannelParams* channel, CodecScheme scheme) {
  params.validate();
  const CodecSpec spec = params.codec_spec(scheme);
  // The BCH codec is stateless and expensive to build; the oracle is rebuilt per trial.
  std::unique_ptr<Codec> shared = scheme == CodecScheme::concrete ? make_codec(spec) : nullptr;
  if (channel) channel->validate();
  const double scale = channel ? amplitude_gain(*channel) : 1.0;
  RoundTripReport report;
  report.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = make_rng(master_seed, i);
    const BitString message = random_bits(static_cast<std::size_t>(params.message_len), rng);
    const QecmKey key = key_gen_unlabelled(params, rng);
    std::unique_ptr<Codec> fresh = shared ? nullptr : make_codec(spec);
    Codec& codec = shared ? *shared : *fresh;
    const BitString codeword = codeword_for(key, message, codec);
    CipherState cipher = prepare_cipher(key, codeword, params);
    if (channel) cipher = apply_channel(cipher, *channel);
    const BitString received = measure_codeword(key, cipher, rng, scale);
    report.modes += received.size();
    report.flips += hamming_distance(received, codeword);
    const auto decoded = codec.decode(received);
    if (!decoded || base_decrypt(key.pad, *decoded) != message) ++report.failures;
  }
  report.failure_interval = wilson_interval(report.failures, report.trials);
  report.flip_interval = wilson_interval(report.flips, report.modes);
  return report;
}

}  // namespace cvue
