#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cvue/bits.hpp"
#include "cvue/random.hpp"
#include "cvue/stats.hpp"

using namespace cvue;

TEST_CASE("normal cdf and quantile are inverse") {
  for (double p : {1e-10, 0.001, 0.2, 0.5, 0.77, 0.999999}) CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975));
}

TEST_CASE("wilson interval") {
  const auto i = wilson_interval(5, 10);
  CHECK(i.lower == doctest::Approx(0.2365931).epsilon(1e-6));
  CHECK(i.upper == doctest::Approx(0.7634069).epsilon(1e-6));
  CHECK(wilson_interval(0, 100).lower == 0.0);
  CHECK(wilson_interval(100, 100).upper == 1.0);
  const auto e = wilson_interval(0, 0);
  CHECK(e.lower == 0.0);
  CHECK(e.upper == 1.0);
  CHECK_THROWS(wilson_interval(3, 2));
}

TEST_CASE("two-sample KS") {
  Rng rng(1);
  std::normal_distribution<double> g;
  std::vector<double> a(5000), b(5000), c(5000);
  for (auto& x : a) x = g(rng);
  for (auto& x : b) x = g(rng);
  for (auto& x : c) x = g(rng) + 0.2;
  CHECK(ks_two_sample(a, b).p_value > 0.001);
  CHECK(ks_two_sample(a, c).p_value < 1e-6);
  CHECK(ks_two_sample(a, a).statistic == 0.0);
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(0.01));
}

TEST_CASE("proportion tests") {
  CHECK(two_proportion_z(50, 100, 50, 100) == doctest::Approx(0.0));
  CHECK(std::fabs(two_proportion_z(10, 100, 40, 100)) > 4.0);
  CHECK(binomial_z(500, 1000, 0.5) == doctest::Approx(0.0));
  CHECK(binomial_z(600, 1000, 0.5) == doctest::Approx(100.0 / std::sqrt(250.0)));
  const auto chi = chi_square_2x2(10, 20, 30, 40);
  // (ad - bc)^2 N / (row1 row2 col1 col2)
  const double want = std::pow(10.0 * 40 - 20.0 * 30, 2) * 100 / (30.0 * 70 * 40 * 60);
  CHECK(chi.statistic == doctest::Approx(want));
}

TEST_CASE("truncated normal moments match the closed-form oracle") {
  const double sigma = 2.7324, a = 0.39911;
  const SymmetricTruncatedNormal dist(sigma, a);
  // variance of N(0, sigma^2) restricted to (-a, a)
  const double alpha = a / sigma;
  const double pdf = std::exp(-alpha * alpha / 2) / std::sqrt(2 * M_PI);
  const double mass = std::erf(alpha / std::sqrt(2.0));
  const double var = sigma * sigma * (1 - 2 * alpha * pdf / mass);
  CHECK(dist.mass() == doctest::Approx(mass));
  Rng rng(3);
  const int n = 200000;
  double sum = 0, sq = 0, peak = 0;
  for (int i = 0; i < n; ++i) {
    const double x = dist(rng);
    sum += x;
    sq += x * x;
    peak = std::max(peak, std::fabs(x));
  }
  CHECK(peak < a);
  CHECK(std::fabs(sum / n) < 5 * std::sqrt(var / n));
  CHECK(std::sqrt(sq / n) == doctest::Approx(std::sqrt(var)).epsilon(0.01));
  CHECK(std::sqrt(var) == doctest::Approx(0.230099).epsilon(1e-4));
  CHECK_THROWS(SymmetricTruncatedNormal(0.0, 1.0));
}

TEST_CASE("seeding is counter based") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  Rng a = make_rng(9, 4), b = make_rng(9, 4);
  CHECK(a() == b());
}

TEST_CASE("bit strings") {
  const BitString bits = {1, 0, 1, 1, 0, 0, 0, 1, 1};
  CHECK(to_hex(bits) == "b18");
  CHECK(from_hex("b18", 9) == bits);
  CHECK_THROWS(from_hex("b1c", 9));
  CHECK_THROWS(from_hex("b1", 9));
  CHECK_THROWS(from_hex("zz", 8));
  CHECK(hamming_weight(bits) == 5);
  CHECK(hamming_distance(bits, BitString(9, 0)) == 5);
  Rng rng(2);
  const BitString r = random_bits(1000, rng);
  CHECK(r.size() == 1000);
  CHECK(std::fabs(static_cast<double>(hamming_weight(r)) - 500.0) < 5 * std::sqrt(250.0));
  CHECK(from_hex(to_hex(r), 1000) == r);
}
