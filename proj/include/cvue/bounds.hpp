#pragma once

// Closed-form quantities: bit-error rates, the decryption-failure bound,
// monogamy-game bounds, the security slack tau and figure tables.

#include <string>
#include <vector>

#include "cvue/protocol.hpp"

namespace cvue {

/// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double x);

/// beta = 1/2 Erfc(alpha sqrt(cosh r)).
double ber_analytic(double displacement, double squeezing);

/// a ln(a/b) + (1-a) ln((1-a)/(1-b)) for a, b in (0, 1).
double dkl_binary(double a, double b);

/// Chernoff bound exp[-N D((t+1)/N || beta)] on Pr[more than t flips].
/// Returns 1 when beta >= (t+1)/N and 0 when t >= N.
double eps_df(int codeword_len, int correctable, double displacement, double squeezing);

/// ln C(n, k) via lgamma.
double log_binomial(int n, int k);

/// (1/C(M, M/2)) sum_k C(M/2, k)^2 (2 sqrt(delta eps))^k, evaluated in log space.
double monogamy_bound_exact(int num_modes, double delta, double epsilon);
/// sqrt(e) (1/2 + sqrt(delta eps))^(M/2).
double monogamy_bound_relaxed(int num_modes, double delta, double epsilon);

/// N/2 + (N/2 - t) log2(1 + 2 alpha) + t + 1/2 log2(e); needs t <= N/2.
double tau(int codeword_len, int correctable, double displacement);

/// log2 of 2^(-n + tau), unclipped.
double log2_win_bound(int message_len, double tau_value);
/// min(1, 2^(-n + tau)).
double win_bound(int message_len, double tau_value);

/// h(beta) - (1/2 - beta)(1 - log2(1 + 2 alpha)); negative where the scheme is
/// asymptotically securable.
double asymptotic_margin(double displacement, double squeezing);

/// (1/2 + 1/(2 sqrt 2))^n.
double conjugate_coding_bound(int message_len);

struct SecurityReport {
  ProtocolParams params;
  double beta = 0.0;
  double eps_df = 0.0;
  double tau = 0.0;
  double log2_win_bound = 0.0;
  double win_bound = 0.0;
  double asymptotic_margin = 0.0;
};

/// tau and the win bound are NaN when t > N/2.
SecurityReport security_report(const ProtocolParams& params);

// --- figure tables -----------------------------------------------------------

enum class FigureId { fig1, fig2a, fig2b, fig4 };

std::string to_string(FigureId id);
FigureId figure_from_string(const std::string& name);

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int points = 1;

  std::vector<double> values() const;
};

struct FigureGrid {
  Range squeezing;
  Range displacement;
  Range transmittance;
  Range excess_noise;
  Range message_len;
  std::vector<double> transmittance_curves;
  double fixed_displacement = 0.4;
  double fixed_squeezing = 3.6;
  double fixed_excess_noise = 0.001;
  double flip_fraction = 0.035;
};

FigureGrid default_grid(FigureId id);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// fig1:  r, alpha, margin, secure
/// fig2a: r, T, xi, beta_noisy            (alpha fixed)
/// fig2b: T, xi, beta_noisy               (r, alpha fixed)
/// fig4:  n, N, t, ideal, conjugate, cv, log2_ideal, log2_conjugate, log2_cv
///        with N the smallest even integer >= n / (1 - h(beta)) and t = round(fraction N)
Table emit_figure_data(FigureId id, const FigureGrid& grid);

}  // namespace cvue
