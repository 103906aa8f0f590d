#include "cvue/eb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvue {

void RestrictedEprSpec::validate() const {
  if (!(squeezing > 0.0)) throw std::invalid_argument("EB preparation needs r > 0 (tanh 0 collapses k)");
  if (!(displacement > 0.0)) throw std::invalid_argument("EB preparation needs alpha > 0");
  if ((codeword_bit != 0 && codeword_bit != 1) || (direction_bit != 0 && direction_bit != 1)) {
    throw std::invalid_argument("EB preparation: bits must be 0 or 1");
  }
}

namespace {

ModeState partner_mode(const RestrictedEprSpec& spec, double u) {
  const double amplitude = spec.centre() + (u - spec.centre()) * std::tanh(spec.squeezing);
  const Vector2<double> d = spec.direction_bit ? Vector2<double>(0.0, amplitude) : Vector2<double>(amplitude, 0.0);
  return make_squeezed_coherent(d, spec.squeezing, quadrature_from_bit(spec.direction_bit));
}

SymmetricTruncatedNormal challenger_offset(double displacement, double squeezing) {
  return {std::sqrt(0.5 * std::cosh(squeezing)), displacement};
}

}  // namespace

EbModeSample sample_eb_mode(const RestrictedEprSpec& spec, Rng& rng) {
  spec.validate();
  const double u = spec.centre() + challenger_offset(spec.displacement, spec.squeezing)(rng);
  return {u, partner_mode(spec, u)};
}

double eb_offset(double u, int codeword_bit, double displacement, double squeezing) {
  return (u - (codeword_bit ? -displacement : displacement)) * std::tanh(squeezing);
}

EbChallengeRecord eb_prepare(const ProtocolParams& params, const BitString& pad, const BitString& directions,
                             const BitString& message, Codec& codec, Rng& rng) {
  params.validate();
  if (params.degenerate()) throw std::invalid_argument("EB preparation needs r > 0 (tanh 0 collapses k)");
  const auto n = static_cast<std::size_t>(params.codeword_len);
  if (directions.size() != n || hamming_weight(directions) != n / 2) {
    throw std::invalid_argument("EB preparation: phi must have length N and weight N/2");
  }
  EbChallengeRecord record;
  record.codeword = codec.encode(base_encrypt(pad, message));
  record.u.reserve(n);
  record.offsets.reserve(n);
  record.cipher.modes.reserve(n);
  const auto offset = challenger_offset(params.displacement, params.squeezing);
  for (std::size_t i = 0; i < n; ++i) {
    const RestrictedEprSpec spec{params.squeezing, params.displacement, record.codeword[i], directions[i]};
    const double u = spec.centre() + offset(rng);
    record.u.push_back(u);
    record.offsets.push_back(eb_offset(u, spec.codeword_bit, params.displacement, params.squeezing));
    record.cipher.modes.push_back(partner_mode(spec, u));
  }
  return record;
}

RejectionSample eb_rejection_oracle(const RestrictedEprSpec& spec, Rng& rng) {
  spec.validate();
  const double c = spec.centre();
  const auto tms = two_mode_squeezed(spec.squeezing, Eigen::Vector4d(c, 0.0, c, 0.0));
  for (std::uint64_t attempts = 1;; ++attempts) {
    const double u = homodyne_outcome(tms, 0, Quadrature::q, rng);
    if (!(std::abs(u - c) < spec.displacement)) continue;
    const GaussianStated conditional = condition_on_homodyne(tms, 0, Quadrature::q, u);
    ModeState mode = extract_mode(conditional, 0);
    if (spec.direction_bit) mode = rotate_quarter(mode, 0);
    return {u, mode, attempts};
  }
}

double eb_acceptance_probability(double displacement, double squeezing) {
  return std::erf(displacement / std::sqrt(std::cosh(squeezing)));
}

EquivalenceReport game_equivalence_test(const ProtocolParams& params, std::uint64_t modes,
                                        std::uint64_t master_seed) {
  params.validate();
  if (params.degenerate()) throw std::invalid_argument("EB equivalence needs r > 0");
  if (modes == 0) throw std::invalid_argument("EB equivalence needs at least one mode");
  const double alpha = params.displacement;
  const double r = params.squeezing;
  const double tr = std::tanh(r);
  const auto k_dist = offset_distribution(alpha, r);
  constexpr std::uint64_t kKsCap = 100000;
  const std::uint64_t ks_n = std::min(modes, kKsCap);

  EquivalenceReport report;
  report.samples = modes;
  std::vector<double> k_eb;
  std::vector<double> k_ps;
  k_eb.reserve(ks_n);
  k_ps.reserve(ks_n);

  Rng eb_rng = make_rng(master_seed, 0);
  Rng ps_rng = make_rng(master_seed, 1);
  for (std::uint64_t i = 0; i < modes; ++i) {
    // Entanglement-based mode.
    {
      const auto bits = eb_rng();
      const RestrictedEprSpec spec{r, alpha, static_cast<int>(bits & 1U), static_cast<int>((bits >> 1) & 1U)};
      const EbModeSample s = sample_eb_mode(spec, eb_rng);
      const double k = eb_offset(s.u, spec.codeword_bit, alpha, r);
      const double actual = k / tr + spec.centre();
      const double other = k / tr - spec.centre();
      const double err = std::abs(actual - s.u);
      report.max_candidate_error = std::max(report.max_candidate_error, err);
      if (err > 1e-9 * std::max(1.0, std::abs(s.u)) || std::abs(other - s.u) < alpha) ++report.candidate_violations;
      if (!(s.u > -2.0 * alpha && s.u < 2.0 * alpha)) ++report.range_violations;
      const double y = homodyne_outcome(s.mode, 0, quadrature_from_bit(spec.direction_bit), eb_rng);
      report.flips_entanglement += threshold_bit(y, k) != spec.codeword_bit;
      if (i < ks_n) k_eb.push_back(k);
    }
    // Prepare-and-send mode.
    {
      const auto bits = ps_rng();
      const int c = static_cast<int>(bits & 1U);
      const int phi = static_cast<int>((bits >> 1) & 1U);
      const double k = k_dist(ps_rng);
      const ModeState mode = prepare_mode(c, phi, k, alpha, r);
      const double y = homodyne_outcome(mode, 0, quadrature_from_bit(phi), ps_rng);
      report.flips_prepare_send += threshold_bit(y, k) != c;
      if (i < ks_n) k_ps.push_back(k);
    }
  }
  report.beta_prepare_send = static_cast<double>(report.flips_prepare_send) / static_cast<double>(modes);
  report.beta_entanglement = static_cast<double>(report.flips_entanglement) / static_cast<double>(modes);
  report.z = two_proportion_z(report.flips_prepare_send, modes, report.flips_entanglement, modes);
  report.offsets_ks = ks_two_sample(std::move(k_eb), std::move(k_ps));
  report.passed = report.candidate_violations == 0 && report.range_violations == 0 && std::abs(report.z) <= 5.0 &&
                  report.offsets_ks.p_value > 0.01;
  return report;
}

}  // namespace cvue

namespace cvue {

RejectionReport rejection_oracle_test(double displacement, double squeezing, std::uint64_t samples,
                                      std::uint64_t master_seed) {
  if (samples == 0) throw std::invalid_argument("rejection test needs at least one sample");
  RejectionReport report;
  report.samples = samples;
  report.acceptance_expected = eb_acceptance_probability(displacement, squeezing);
  const double c = std::cosh(squeezing);
  const double tr = std::tanh(squeezing);

  std::vector<double> u_oracle;
  std::vector<double> u_direct;
  u_oracle.reserve(samples);
  u_direct.reserve(samples);
  Rng oracle_rng = make_rng(master_seed, 0);
  Rng direct_rng = make_rng(master_seed, 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    {
      const auto bits = oracle_rng();
      const RestrictedEprSpec spec{squeezing, displacement, static_cast<int>(bits & 1U),
                                   static_cast<int>((bits >> 1) & 1U)};
      const RejectionSample s = eb_rejection_oracle(spec, oracle_rng);
      report.attempts += s.attempts;
      u_oracle.push_back(s.u);
      Eigen::Matrix2d expected_cov = spec.direction_bit ? Eigen::Vector2d(c, 1.0 / c).asDiagonal().toDenseMatrix()
                                                         : Eigen::Vector2d(1.0 / c, c).asDiagonal().toDenseMatrix();
      const double amplitude = spec.centre() + (s.u - spec.centre()) * tr;
      const Eigen::Vector2d expected_d =
          spec.direction_bit ? Eigen::Vector2d(0.0, amplitude) : Eigen::Vector2d(amplitude, 0.0);
      report.max_covariance_error =
          std::max(report.max_covariance_error, (s.mode.covariance() - expected_cov).cwiseAbs().maxCoeff());
      report.max_displacement_error =
          std::max(report.max_displacement_error, (s.mode.displacement() - expected_d).cwiseAbs().maxCoeff());
    }
    {
      const auto bits = direct_rng();
      const RestrictedEprSpec spec{squeezing, displacement, static_cast<int>(bits & 1U),
                                   static_cast<int>((bits >> 1) & 1U)};
      u_direct.push_back(sample_eb_mode(spec, direct_rng).u);
    }
  }
  report.acceptance_observed = static_cast<double>(samples) / static_cast<double>(report.attempts);
  report.acceptance_z = binomial_z(samples, report.attempts, report.acceptance_expected);
  report.u_ks = ks_two_sample(std::move(u_oracle), std::move(u_direct));
  report.passed = report.acceptance_z <= 5.0 && report.u_ks.p_value > 0.01 && report.max_covariance_error <= 1e-10 &&
                  report.max_displacement_error <= 1e-10;
  return report;
}

}  // namespace cvue
