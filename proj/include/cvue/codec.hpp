#pragma once

// Classical layer: the one-time-pad base cipher and the t-error-correcting
// code wrapped around it.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cvue/bits.hpp"

namespace cvue {

BitString base_encrypt(const BitString& pad, const BitString& message);
BitString base_decrypt(const BitString& pad, const BitString& ciphertext);

enum class CodecScheme { oracle, concrete };

std::string to_string(CodecScheme scheme);
CodecScheme codec_scheme_from_string(const std::string& name);

struct CodecSpec {
  int message_len = 0;   // n
  int codeword_len = 0;  // N
  int correctable = 0;   // t
  CodecScheme scheme = CodecScheme::oracle;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

class Codec {
 public:
  virtual ~Codec() = default;
  virtual const CodecSpec& spec() const = 0;
  virtual BitString encode(const BitString& message) = 0;
  /// Message of the codeword within distance t, or nullopt on decode failure.
  virtual std::optional<BitString> decode(const BitString& received) const = 0;
};

/// Statistical stand-in for a t-error-correcting code. It remembers every
/// codeword it has issued and decodes successfully exactly when the received
/// word is within Hamming distance t of one of them. The decoding radius may
/// exceed N/2; that is how the degenerate t = N case is expressed.
class OracleCodec final : public Codec {
 public:
  explicit OracleCodec(CodecSpec spec);

  const CodecSpec& spec() const override { return spec_; }
  BitString encode(const BitString& message) override;
  std::optional<BitString> decode(const BitString& received) const override;

 private:
  CodecSpec spec_;
  std::vector<BitString> issued_;
};

/// Narrow-sense binary BCH code over GF(2^m), shortened to length N.
/// Systematic: parity in positions [0, deg g), message in [deg g, deg g + n),
/// remaining positions are zero (additional shortening).
class BchCodec final : public Codec {
 public:
  explicit BchCodec(CodecSpec spec);

  const CodecSpec& spec() const override { return spec_; }
  BitString encode(const BitString& message) override;
  std::optional<BitString> decode(const BitString& received) const override;

  int field_degree() const { return m_; }
  int parity_len() const { return static_cast<int>(generator_.size()) - 1; }
  const BitString& generator() const { return generator_; }

  /// Largest n for which (n, N, t) is realizable; 0 when none is.
  static int max_message_len(int codeword_len, int correctable);

 private:
  CodecSpec spec_;
  int m_ = 0;
  int n0_ = 0;  // 2^m - 1
  std::vector<int> exp_;
  std::vector<int> log_;
  BitString generator_;

  int gf_mul(int a, int b) const;
  int gf_div(int a, int b) const;
  std::vector<int> syndromes(const BitString& word) const;
};

std::unique_ptr<Codec> make_codec(const CodecSpec& spec);

}  // namespace cvue
