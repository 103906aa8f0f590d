#include "cvue/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>

namespace cvue {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile needs p in (0, 1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw std::invalid_argument("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  const double lower = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double upper = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lower, upper};
}

double kolmogorov_survival(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("KS test needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_survival((ne + 0.12 + 0.11 / ne) * d)};
}

double two_proportion_z(std::uint64_t hits_a, std::uint64_t n_a, std::uint64_t hits_b, std::uint64_t n_b) {
  if (n_a == 0 || n_b == 0) throw std::invalid_argument("two_proportion_z needs nonempty samples");
  const double pa = static_cast<double>(hits_a) / static_cast<double>(n_a);
  const double pb = static_cast<double>(hits_b) / static_cast<double>(n_b);
  const double pooled = static_cast<double>(hits_a + hits_b) / static_cast<double>(n_a + n_b);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n_a) + 1.0 / static_cast<double>(n_b)));
  if (se == 0.0) return 0.0;
  return (pa - pb) / se;
}

ChiSquareResult chi_square_2x2(std::uint64_t n00, std::uint64_t n01, std::uint64_t n10, std::uint64_t n11) {
  const double a = static_cast<double>(n00);
  const double b = static_cast<double>(n01);
  const double c = static_cast<double>(n10);
  const double d = static_cast<double>(n11);
  const double n = a + b + c + d;
  const double r0 = a + b;
  const double r1 = c + d;
  const double c0 = a + c;
  const double c1 = b + d;
  if (r0 == 0 || r1 == 0 || c0 == 0 || c1 == 0) return {0.0, 1.0};
  const double diff = a * d - b * c;
  const double stat = n * diff * diff / (r0 * r1 * c0 * c1);
  return {stat, std::erfc(std::sqrt(stat / 2.0))};
}

double binomial_z(std::uint64_t hits, std::uint64_t n, double p) {
  if (n == 0) throw std::invalid_argument("binomial_z needs n > 0");
  const double nn = static_cast<double>(n);
  const double se = std::sqrt(p * (1.0 - p) / nn);
  const double diff = static_cast<double>(hits) / nn - p;
  if (se == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return std::abs(diff) / se;
}

}  // namespace cvue

namespace cvue {

SymmetricTruncatedNormal::SymmetricTruncatedNormal(double sigma, double bound) : sigma_(sigma), bound_(bound) {
  if (!(sigma > 0.0) || !(bound > 0.0)) {
    throw std::invalid_argument("truncated normal needs positive sigma and bound");
  }
  const double b = bound / sigma;
  lower_mass_ = normal_cdf(-b);
  mass_ = std::erf(b / std::numbers::sqrt2);
  if (!(mass_ > 0.0)) throw std::invalid_argument("truncation interval carries no probability mass");
}

}  // namespace cvue
