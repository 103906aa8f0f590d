#include "cvue/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cvue/channel.hpp"

namespace cvue {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("binary_entropy: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double ber_analytic(double displacement, double squeezing) {
  if (!(displacement >= 0.0)) throw std::invalid_argument("ber_analytic: alpha must be nonnegative");
  if (!(squeezing >= 0.0)) throw std::invalid_argument("ber_analytic: r must be nonnegative");
  return 0.5 * std::erfc(displacement * std::sqrt(std::cosh(squeezing)));
}

double dkl_binary(double a, double b) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw std::invalid_argument("dkl_binary: arguments must lie in (0, 1)");
  }
  return a * std::log(a / b) + (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
}

double eps_df(int codeword_len, int correctable, double displacement, double squeezing) {
  if (codeword_len < 1 || correctable < 0) throw std::invalid_argument("eps_df: need N >= 1 and t >= 0");
  if (correctable >= codeword_len) return 0.0;
  const double beta = ber_analytic(displacement, squeezing);
  const double a = static_cast<double>(correctable + 1) / codeword_len;
  if (beta >= a) return 1.0;
  if (beta == 0.0) return 0.0;
  if (correctable + 1 == codeword_len) return std::exp(codeword_len * std::log(beta));
  return std::exp(-codeword_len * dkl_binary(a, beta));
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

namespace {

void check_monogamy_args(int num_modes, double delta, double epsilon) {
  if (num_modes < 2 || num_modes % 2 != 0) throw std::invalid_argument("monogamy bound: M must be even and >= 2");
  if (!(delta >= 0.0) || !(epsilon >= 0.0)) throw std::invalid_argument("monogamy bound: delta, eps must be >= 0");
}

}  // namespace

double monogamy_bound_exact(int num_modes, double delta, double epsilon) {
  check_monogamy_args(num_modes, delta, epsilon);
  const int half = num_modes / 2;
  const double log_x = std::log(2.0 * std::sqrt(delta * epsilon));
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(half) + 1);
  for (int k = 0; k <= half; ++k) {
    const double power = k == 0 ? 0.0 : k * log_x;
    terms.push_back(2.0 * log_binomial(half, k) + power);
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return std::exp(top + std::log(sum) - log_binomial(num_modes, half));
}

double monogamy_bound_relaxed(int num_modes, double delta, double epsilon) {
  check_monogamy_args(num_modes, delta, epsilon);
  return std::sqrt(std::numbers::e) * std::pow(0.5 + std::sqrt(delta * epsilon), num_modes / 2);
}

double tau(int codeword_len, int correctable, double displacement) {
  if (correctable < 0 || 2 * correctable > codeword_len) throw std::invalid_argument("tau: need 0 <= t <= N/2");
  if (!(displacement >= 0.0)) throw std::invalid_argument("tau: alpha must be nonnegative");
  const double half = codeword_len / 2.0;
  return half + (half - correctable) * std::log2(1.0 + 2.0 * displacement) + correctable +
         0.5 * std::numbers::log2e;
}

double log2_win_bound(int message_len, double tau_value) { return tau_value - message_len; }

double win_bound(int message_len, double tau_value) {
  return std::min(1.0, std::exp2(log2_win_bound(message_len, tau_value)));
}

double asymptotic_margin(double displacement, double squeezing) {
  const double beta = ber_analytic(displacement, squeezing);
  return binary_entropy(beta) - (0.5 - beta) * (1.0 - std::log2(1.0 + 2.0 * displacement));
}

double conjugate_coding_bound(int message_len) {
  if (message_len < 1) throw std::invalid_argument("conjugate_coding_bound: n must be >= 1");
  return std::pow(0.5 + 0.5 * (1.0 / std::numbers::sqrt2), message_len);
}

SecurityReport security_report(const ProtocolParams& params) {
  params.validate();
  SecurityReport report;
  report.params = params;
  report.beta = ber_analytic(params.displacement, params.squeezing);
  report.eps_df = eps_df(params.codeword_len, params.correctable, params.displacement, params.squeezing);
  report.asymptotic_margin = asymptotic_margin(params.displacement, params.squeezing);
  if (2 * params.correctable <= params.codeword_len) {
    report.tau = tau(params.codeword_len, params.correctable, params.displacement);
    report.log2_win_bound = log2_win_bound(params.message_len, report.tau);
    report.win_bound = win_bound(params.message_len, report.tau);
  } else {
    report.tau = report.log2_win_bound = report.win_bound = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2a: return "fig2a";
    case FigureId::fig2b: return "fig2b";
    case FigureId::fig4: return "fig4";
  }
  return "?";
}

FigureId figure_from_string(const std::string& name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig2a") return FigureId::fig2a;
  if (name == "fig2b") return FigureId::fig2b;
  if (name == "fig4") return FigureId::fig4;
  throw std::invalid_argument("unknown figure id '" + name + "' (expected fig1, fig2a, fig2b or fig4)");
}

std::vector<double> Range::values() const {
  if (points < 1) throw std::invalid_argument("grid range needs at least one point");
  if (points == 1) return {start};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) v[i] = start + i * (stop - start) / (points - 1);
  return v;
}

FigureGrid default_grid(FigureId id) {
  FigureGrid g;
  g.squeezing = {2.5, 4.5, 41};
  g.displacement = {0.01, 1.0, 100};
  g.transmittance = {0.5, 1.0, 51};
  g.excess_noise = {0.0, 0.1, 51};
  g.message_len = {10, 5000, 250};
  g.transmittance_curves = {1.0, 0.95, 0.9, 0.85, 0.8};
  if (id == FigureId::fig2a) g.squeezing = {2.0, 5.0, 61};
  return g;
}

Table emit_figure_data(FigureId id, const FigureGrid& grid) {
  Table table;
  switch (id) {
    case FigureId::fig1: {
      table.columns = {"r", "alpha", "margin", "secure"};
      for (double r : grid.squeezing.values()) {
        for (double a : grid.displacement.values()) {
          const double m = asymptotic_margin(a, r);
          table.rows.push_back({r, a, m, m < 0.0 ? 1.0 : 0.0});
        }
      }
      break;
    }
    case FigureId::fig2a: {
      table.columns = {"r", "T", "xi", "beta_noisy"};
      for (double t : grid.transmittance_curves) {
        for (double r : grid.squeezing.values()) {
          const ChannelParams ch{t, grid.fixed_excess_noise, ChannelConvention::paper};
          table.rows.push_back({r, t, grid.fixed_excess_noise, noisy_ber(grid.fixed_displacement, r, ch)});
        }
      }
      break;
    }
    case FigureId::fig2b: {
      table.columns = {"T", "xi", "beta_noisy"};
      for (double t : grid.transmittance.values()) {
        for (double xi : grid.excess_noise.values()) {
          const ChannelParams ch{t, xi, ChannelConvention::paper};
          table.rows.push_back({t, xi, noisy_ber(grid.fixed_displacement, grid.fixed_squeezing, ch)});
        }
      }
      break;
    }
    case FigureId::fig4: {
      table.columns = {"n", "N", "t", "ideal", "conjugate", "cv", "log2_ideal", "log2_conjugate", "log2_cv"};
      const double beta = ber_analytic(grid.fixed_displacement, grid.fixed_squeezing);
      const double rate = 1.0 - binary_entropy(beta);
      const double log2_conj = std::log2(0.5 + 0.5 * (1.0 / std::numbers::sqrt2));
      for (double nv : grid.message_len.values()) {
        const int n = static_cast<int>(std::lround(nv));
        int big_n = static_cast<int>(std::ceil(n / rate));
        if (big_n % 2 != 0) ++big_n;
        const int t = static_cast<int>(std::lround(grid.flip_fraction * big_n));
        const double tv = tau(big_n, t, grid.fixed_displacement);
        const double l2cv = log2_win_bound(n, tv);
        table.rows.push_back({static_cast<double>(n), static_cast<double>(big_n), static_cast<double>(t),
                              std::exp2(-static_cast<double>(n)), conjugate_coding_bound(n),
                              std::min(1.0, std::exp2(l2cv)), -static_cast<double>(n), n * log2_conj, l2cv});
      }
      break;
    }
  }
  return table;
}

}  // namespace cvue
