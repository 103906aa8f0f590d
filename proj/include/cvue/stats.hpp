#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cvue {

double normal_cdf(double x);
/// Inverse of the standard normal CDF on (0, 1).
double normal_quantile(double p);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion; [0, 1] when trials == 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test (asymptotic p-value).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_survival(double lambda);

/// Pooled two-proportion z statistic.
double two_proportion_z(std::uint64_t hits_a, std::uint64_t n_a, std::uint64_t hits_b, std::uint64_t n_b);

/// Pearson chi-square statistic and p-value (1 dof) for a 2x2 contingency table.
struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
};
ChiSquareResult chi_square_2x2(std::uint64_t n00, std::uint64_t n01, std::uint64_t n10, std::uint64_t n11);

/// |observed - expected| in units of the binomial standard error sqrt(p(1-p)/n).
double binomial_z(std::uint64_t hits, std::uint64_t n, double p);

}  // namespace cvue

namespace cvue {

/// Normal(0, sigma^2) conditioned on the open interval (-bound, bound),
/// sampled by inverting the CDF.
class SymmetricTruncatedNormal {
 public:
  SymmetricTruncatedNormal(double sigma, double bound);

  template <typename Rng>
  double operator()(Rng& rng) const {
    for (;;) {
      const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      if (u == 0.0) continue;
      const double x = sigma_ * normal_quantile(lower_mass_ + u * mass_);
      if (x > -bound_ && x < bound_) return x;
    }
  }

  double sigma() const { return sigma_; }
  double bound() const { return bound_; }
  /// Probability mass of the untruncated normal inside the interval.
  double mass() const { return mass_; }

 private:
  double sigma_;
  double bound_;
  double lower_mass_;
  double mass_;
};

}  // namespace cvue
