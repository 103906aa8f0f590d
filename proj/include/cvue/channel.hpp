#pragma once

// Thermal-loss channel with excess noise (shot-noise units).

#include <string>

#include "cvue/protocol.hpp"

namespace cvue {

/// How the channel scales displacements: `paper` scales by T (the receiver
/// sees T alpha), `symplectic` by sqrt(T) as the attenuator map does. Both
/// map the covariance as Gamma -> T Gamma + (1 - T + T xi) I.
enum class ChannelConvention { paper, symplectic };

std::string to_string(ChannelConvention convention);
ChannelConvention channel_convention_from_string(const std::string& name);

struct ChannelParams {
  double transmittance = 1.0;  // T in (0, 1]
  double excess_noise = 0.0;   // xi >= 0
  ChannelConvention convention = ChannelConvention::paper;

  void validate() const;
  bool is_identity() const { return transmittance == 1.0 && excess_noise == 0.0; }
};

/// Fibre transmittance 10^(-loss * km / 10).
double transmittance_from_fiber(double km, double db_per_km = 0.22);

/// Displacement (and threshold) scale factor: T or sqrt(T).
double amplitude_gain(const ChannelParams& channel);

/// T / cosh r + (1 - T) + T xi: the received narrow-quadrature covariance entry.
double noisy_variance(double squeezing, const ChannelParams& channel);

/// 1/2 Erfc(g alpha / sqrt(noisy_variance)), g = amplitude_gain.
double noisy_ber(double displacement, double squeezing, const ChannelParams& channel);

ModeState apply_channel(const ModeState& mode, const ChannelParams& channel);
CipherState apply_channel(const CipherState& cipher, const ChannelParams& channel);

}  // namespace cvue
