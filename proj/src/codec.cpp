#include "cvue/codec.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cvue {

BitString base_encrypt(const BitString& pad, const BitString& message) {
  if (pad.size() < message.size()) {
    throw std::invalid_argument("base cipher: pad is shorter than the message");
  }
  BitString out(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) out[i] = message[i] ^ pad[i];
  return out;
}

BitString base_decrypt(const BitString& pad, const BitString& ciphertext) { return base_encrypt(pad, ciphertext); }

std::string to_string(CodecScheme scheme) { return scheme == CodecScheme::oracle ? "oracle" : "concrete"; }

CodecScheme codec_scheme_from_string(const std::string& name) {
  if (name == "oracle") return CodecScheme::oracle;
  if (name == "concrete") return CodecScheme::concrete;
  throw std::invalid_argument("unknown codec scheme '" + name + "' (expected oracle or concrete)");
}

void CodecSpec::validate() const {
  if (message_len < 1) throw std::invalid_argument("codec: message length n must be positive");
  if (codeword_len < message_len) throw std::invalid_argument("codec: need n <= N");
  if (correctable < 0) throw std::invalid_argument("codec: t must be nonnegative");
  if (scheme == CodecScheme::oracle) {
    if (correctable > codeword_len) throw std::invalid_argument("codec: oracle radius t must not exceed N");
    return;
  }
  if (2 * correctable >= codeword_len) throw std::invalid_argument("codec: need t < N/2");
  const int max_n = BchCodec::max_message_len(codeword_len, correctable);
  if (max_n < message_len) {
    throw std::invalid_argument("codec: (n=" + std::to_string(message_len) + ", N=" + std::to_string(codeword_len) +
                                ", t=" + std::to_string(correctable) +
                                ") is not realizable by a shortened binary BCH code (max n = " +
                                std::to_string(max_n) + ")");
  }
}

// ---------------------------------------------------------------------------

OracleCodec::OracleCodec(CodecSpec spec) : spec_(spec) {
  spec_.scheme = CodecScheme::oracle;
  spec_.validate();
}

BitString OracleCodec::encode(const BitString& message) {
  if (static_cast<int>(message.size()) != spec_.message_len) {
    throw std::invalid_argument("encode: message length mismatch");
  }
  BitString word(static_cast<std::size_t>(spec_.codeword_len));
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = message[i % message.size()];
  if (std::find(issued_.begin(), issued_.end(), word) == issued_.end()) issued_.push_back(word);
  return word;
}

std::optional<BitString> OracleCodec::decode(const BitString& received) const {
  if (static_cast<int>(received.size()) != spec_.codeword_len) {
    throw std::invalid_argument("decode: codeword length mismatch");
  }
  const BitString* best = nullptr;
  std::size_t best_distance = std::numeric_limits<std::size_t>::max();
  for (const auto& word : issued_) {
    const std::size_t d = hamming_distance(word, received);
    if (d < best_distance) {
      best_distance = d;
      best = &word;
    }
  }
  if (best == nullptr || best_distance > static_cast<std::size_t>(spec_.correctable)) return std::nullopt;
  return BitString(best->begin(), best->begin() + spec_.message_len);
}

// ---------------------------------------------------------------------------

namespace {

// Primitive polynomials, bit i = coefficient of x^i.
constexpr int kPrimitive[] = {0, 0, 0, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053};
constexpr int kMinDegree = 3;
constexpr int kMaxDegree = 12;

struct GaloisField {
  int m = 0;
  int n0 = 0;
  std::vector<int> exp;
  std::vector<int> log;

  explicit GaloisField(int degree) : m(degree), n0((1 << degree) - 1), exp(2 * n0), log(n0 + 1, -1) {
    int x = 1;
    for (int i = 0; i < n0; ++i) {
      if (i > 0 && x == 1) throw std::logic_error("GF(2^m): polynomial is not primitive");
      exp[i] = x;
      log[x] = i;
      x <<= 1;
      if (x & (1 << m)) x ^= kPrimitive[m];
    }
    for (int i = n0; i < 2 * n0; ++i) exp[i] = exp[i - n0];
  }

  int mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : exp[log[a] + log[b]]; }
};

int field_degree_for(int codeword_len) {
  for (int m = kMinDegree; m <= kMaxDegree; ++m) {
    if ((1 << m) - 1 >= codeword_len) return m;
  }
  throw std::invalid_argument("codec: N too large for the supported BCH fields (max 4095)");
}

// Product of the minimal polynomials of alpha^1 .. alpha^{2t}.
BitString bch_generator(const GaloisField& gf, int t) {
  BitString g{1};
  std::vector<bool> covered(static_cast<std::size_t>(gf.n0), false);
  for (int i = 1; i <= 2 * t; ++i) {
    const int root = i % gf.n0;
    if (covered[root]) continue;
    // Minimal polynomial over GF(2^m) from the cyclotomic coset of `root`.
    std::vector<int> poly{1};
    int e = root;
    do {
      covered[e] = true;
      std::vector<int> next(poly.size() + 1, 0);
      const int a = gf.exp[e];
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] ^= poly[k];
        next[k] ^= gf.mul(poly[k], a);
      }
      poly = std::move(next);
      e = (2 * e) % gf.n0;
    } while (e != root);
    BitString minimal(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] > 1) throw std::logic_error("minimal polynomial has non-binary coefficient");
      minimal[k] = static_cast<std::uint8_t>(poly[k]);
    }
    BitString product(g.size() + minimal.size() - 1, 0);
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (!g[a]) continue;
      for (std::size_t b = 0; b < minimal.size(); ++b) product[a + b] ^= minimal[b];
    }
    g = std::move(product);
  }
  return g;
}

}  // namespace

int BchCodec::max_message_len(int codeword_len, int correctable) {
  if (codeword_len < 1 || correctable < 0 || 2 * correctable >= codeword_len) return 0;
  const int m = field_degree_for(codeword_len);
  const GaloisField gf(m);
  const int parity = static_cast<int>(bch_generator(gf, correctable).size()) - 1;
  return std::max(0, codeword_len - parity);
}

BchCodec::BchCodec(CodecSpec spec) : spec_(spec) {
  spec_.scheme = CodecScheme::concrete;
  spec_.validate();
  m_ = field_degree_for(spec_.codeword_len);
  GaloisField gf(m_);
  generator_ = bch_generator(gf, spec_.correctable);
  n0_ = gf.n0;
  exp_ = std::move(gf.exp);
  log_ = std::move(gf.log);
}

int BchCodec::gf_mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]; }

int BchCodec::gf_div(int a, int b) const {
  if (b == 0) throw std::domain_error("GF division by zero");
  if (a == 0) return 0;
  return exp_[(log_[a] - log_[b] + n0_) % n0_];
}

BitString BchCodec::encode(const BitString& message) {
  if (static_cast<int>(message.size()) != spec_.message_len) {
    throw std::invalid_argument("encode: message length mismatch");
  }
  const int r = parity_len();
  const auto n = static_cast<std::size_t>(spec_.codeword_len);
  BitString word(n, 0);
  std::copy(message.begin(), message.end(), word.begin() + r);
  BitString rem = word;
  for (int deg = static_cast<int>(n) - 1; deg >= r; --deg) {
    if (!rem[deg]) continue;
    const int shift = deg - r;
    for (int k = 0; k <= r; ++k) rem[shift + k] ^= generator_[k];
  }
  std::copy(rem.begin(), rem.begin() + r, word.begin());
  return word;
}

std::vector<int> BchCodec::syndromes(const BitString& word) const {
  std::vector<int> s(static_cast<std::size_t>(2 * spec_.correctable), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word[i]) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      s[j] ^= exp_[(static_cast<long>(i) * static_cast<long>(j + 1)) % n0_];
    }
  }
  return s;
}

std::optional<BitString> BchCodec::decode(const BitString& received) const {
  if (static_cast<int>(received.size()) != spec_.codeword_len) {
    throw std::invalid_argument("decode: codeword length mismatch");
  }
  BitString word = received;
  const std::vector<int> s = syndromes(word);
  const bool clean = std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });

  if (!clean) {
    // Berlekamp-Massey for the error-locator polynomial.
    std::vector<int> locator{1};
    std::vector<int> prev{1};
    int degree = 0;
    int gap = 1;
    int prev_discrepancy = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
      int d = s[k];
      for (int i = 1; i <= degree && i < static_cast<int>(locator.size()); ++i) {
        d ^= gf_mul(locator[i], s[k - i]);
      }
      if (d == 0) {
        ++gap;
        continue;
      }
      const int coef = gf_div(d, prev_discrepancy);
      std::vector<int> updated = locator;
      const auto needed = prev.size() + static_cast<std::size_t>(gap);
      if (updated.size() < needed) updated.resize(needed, 0);
      for (std::size_t i = 0; i < prev.size(); ++i) updated[i + static_cast<std::size_t>(gap)] ^= gf_mul(coef, prev[i]);
      if (2 * degree <= static_cast<int>(k)) {
        prev = locator;
        degree = static_cast<int>(k) + 1 - degree;
        prev_discrepancy = d;
        gap = 1;
      } else {
        ++gap;
      }
      locator = std::move(updated);
    }
    if (degree > spec_.correctable) return std::nullopt;

    // Chien search: position i is in error iff locator(alpha^{-i}) = 0.
    int found = 0;
    for (int i = 0; i < n0_; ++i) {
      int value = 0;
      for (int j = 0; j < static_cast<int>(locator.size()); ++j) {
        if (locator[j] == 0) continue;
        value ^= exp_[(log_[locator[j]] + (n0_ - i) * j % n0_) % n0_];
      }
      if (value != 0) continue;
      if (i >= spec_.codeword_len) return std::nullopt;
      word[i] ^= 1;
      ++found;
    }
    if (found != degree) return std::nullopt;
  }

  const int r = parity_len();
  for (int i = r + spec_.message_len; i < spec_.codeword_len; ++i) {
    if (word[i]) return std::nullopt;
  }
  return BitString(word.begin() + r, word.begin() + r + spec_.message_len);
}

std::unique_ptr<Codec> make_codec(const CodecSpec& spec) {
  if (spec.scheme == CodecScheme::oracle) return std::make_unique<OracleCodec>(spec);
  return std::make_unique<BchCodec>(spec);
}

}  // namespace cvue
