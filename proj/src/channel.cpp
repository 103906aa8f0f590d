#include "cvue/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace cvue {

std::string to_string(ChannelConvention convention) {
  return convention == ChannelConvention::paper ? "paper" : "symplectic";
}

ChannelConvention channel_convention_from_string(const std::string& name) {
  if (name == "paper") return ChannelConvention::paper;
  if (name == "symplectic") return ChannelConvention::symplectic;
  throw std::invalid_argument("unknown channel convention '" + name + "' (expected paper or symplectic)");
}

void ChannelParams::validate() const {
  if (!(transmittance > 0.0 && transmittance <= 1.0)) {
    throw std::invalid_argument("channel: transmittance T must lie in (0, 1]");
  }
  if (!(excess_noise >= 0.0) || !std::isfinite(excess_noise)) {
    throw std::invalid_argument("channel: excess noise xi must be nonnegative");
  }
}

double transmittance_from_fiber(double km, double db_per_km) {
  if (!(km >= 0.0) || !(db_per_km >= 0.0)) throw std::invalid_argument("fibre length and loss must be nonnegative");
  return std::pow(10.0, -db_per_km * km / 10.0);
}

double amplitude_gain(const ChannelParams& channel) {
  return channel.convention == ChannelConvention::paper ? channel.transmittance : std::sqrt(channel.transmittance);
}

double noisy_variance(double squeezing, const ChannelParams& channel) {
  channel.validate();
  const double t = channel.transmittance;
  return t / std::cosh(squeezing) + (1.0 - t) + t * channel.excess_noise;
}

double noisy_ber(double displacement, double squeezing, const ChannelParams& channel) {
  return 0.5 * std::erfc(amplitude_gain(channel) * displacement / std::sqrt(noisy_variance(squeezing, channel)));
}

ModeState apply_channel(const ModeState& mode, const ChannelParams& channel) {
  if (channel.is_identity()) return mode;
  const double t = channel.transmittance;
  const double added = 1.0 - t + t * channel.excess_noise;
  ModeState::Vector d = amplitude_gain(channel) * mode.displacement();
  ModeState::Matrix cov = t * mode.covariance() + added * ModeState::Matrix::Identity();
  return {d, cov};
}

CipherState apply_channel(const CipherState& cipher, const ChannelParams& channel) {
  channel.validate();
  CipherState out;
  out.modes.reserve(cipher.modes.size());
  for (const auto& mode : cipher.modes) out.modes.push_back(apply_channel(mode, channel));
  return out;
}

}  // namespace cvue
