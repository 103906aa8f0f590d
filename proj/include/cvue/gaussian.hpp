#pragma once

// Gaussian states of optical modes in the (q1,p1,...,qN,pN) ordering.
//
// Phase-space convention: the Wigner function is proportional to
// exp[-(x-d)^T Gamma^{-1} (x-d)], so a homodyne measurement of one quadrature
// has variance Gamma_jj / 2. The vacuum has Gamma = I (shot noise 1/2).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cvue {

/// Axis-aligned homodyne direction: q (angle 0) or p (angle pi/2).
enum class Quadrature : std::uint8_t { q = 0, p = 1 };

inline Quadrature quadrature_from_bit(int bit) { return bit ? Quadrature::p : Quadrature::q; }
inline int quadrature_bit(Quadrature dir) { return static_cast<int>(dir); }

inline constexpr double kPositiveDefiniteTolerance = 1e-12;

template <typename Scalar, int Modes = Eigen::Dynamic>
class GaussianState {
  static_assert(Modes == Eigen::Dynamic || Modes > 0, "a Gaussian state has at least one mode");

 public:
  static constexpr int Dim = Modes == Eigen::Dynamic ? Eigen::Dynamic : 2 * Modes;
  using Vector = Eigen::Matrix<Scalar, Dim, 1>;
  using Matrix = Eigen::Matrix<Scalar, Dim, Dim>;

  GaussianState(Vector displacement, Matrix covariance)
      : d_(std::move(displacement)), cov_(std::move(covariance)) {
    if (d_.size() == 0 || d_.size() % 2 != 0) {
      throw std::invalid_argument("displacement length must be a positive multiple of 2");
    }
    if (cov_.rows() != d_.size() || cov_.cols() != d_.size()) {
      throw std::invalid_argument("covariance must be 2N x 2N for an N-mode displacement");
    }
    cov_ = (cov_ + cov_.transpose()) / Scalar(2);
    if (cov_.llt().info() != Eigen::Success) {
      throw std::invalid_argument("covariance matrix is not positive-definite");
    }
  }

  static GaussianState vacuum(int num_modes = Modes) {
    if (num_modes <= 0) throw std::invalid_argument("vacuum needs a positive mode count");
    return GaussianState(Vector::Zero(2 * num_modes), Matrix::Identity(2 * num_modes, 2 * num_modes));
  }

  int num_modes() const { return static_cast<int>(d_.size() / 2); }
  const Vector& displacement() const { return d_; }
  const Matrix& covariance() const { return cov_; }

  Scalar mean(int mode, Quadrature dir) const { return d_(index(mode, dir)); }

  /// Measurement variance of one quadrature (half the covariance entry).
  Scalar variance(int mode, Quadrature dir) const {
    const int i = index(mode, dir);
    return cov_(i, i) / Scalar(2);
  }

  int index(int mode, Quadrature dir) const {
    if (mode < 0 || mode >= num_modes()) {
      throw std::out_of_range("mode index " + std::to_string(mode) + " out of range");
    }
    return 2 * mode + quadrature_bit(dir);
  }

  template <typename Other>
  GaussianState<Other, Modes> cast() const {
    return {d_.template cast<Other>(), cov_.template cast<Other>()};
  }

 private:
  Vector d_;
  Matrix cov_;
};

using GaussianStated = GaussianState<double>;
using ModeState = GaussianState<double, 1>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar, int Modes>
Scalar marginal_variance(const GaussianState<Scalar, Modes>& state, int mode, Quadrature dir) {
  return state.variance(mode, dir);
}

/// Squeezed coherent state with covariance diag((cosh r)^(2b-1), (cosh r)^(1-2b)),
/// b being the direction bit; the narrow quadrature has variance 1/(2 cosh r).
template <typename Scalar>
GaussianState<Scalar, 1> make_squeezed_coherent(const Vector2<Scalar>& displacement, Scalar r,
                                                 Quadrature dir) {
  using std::cosh;
  if (!(r >= Scalar(0))) throw std::invalid_argument("squeezing parameter must be nonnegative");
  const Scalar c = cosh(r);
  typename GaussianState<Scalar, 1>::Matrix cov = GaussianState<Scalar, 1>::Matrix::Zero();
  if (dir == Quadrature::q) {
    cov(0, 0) = Scalar(1) / c;
    cov(1, 1) = c;
  } else {
    cov(0, 0) = c;
    cov(1, 1) = Scalar(1) / c;
  }
  return {displacement, cov};
}

/// Squeezed vacuum with covariance diag(e^-z, e^z) (q) or diag(e^z, e^-z) (p).
template <typename Scalar>
GaussianState<Scalar, 1> squeezed_vacuum(Scalar zeta, Quadrature dir) {
  using std::exp;
  if (!(zeta >= Scalar(0))) throw std::invalid_argument("squeezing parameter must be nonnegative");
  typename GaussianState<Scalar, 1>::Matrix cov = GaussianState<Scalar, 1>::Matrix::Zero();
  const Scalar s = dir == Quadrature::q ? Scalar(-1) : Scalar(1);
  cov(0, 0) = exp(s * zeta);
  cov(1, 1) = exp(-s * zeta);
  return {Vector2<Scalar>::Zero(), cov};
}

/// Two-mode squeezed state: I cosh z on the diagonal blocks, sigma_z sinh z off-diagonal.
template <typename Scalar>
GaussianState<Scalar, 2> two_mode_squeezed(Scalar zeta,
                                           const Eigen::Matrix<Scalar, 4, 1>& displacement =
                                               Eigen::Matrix<Scalar, 4, 1>::Zero()) {
  using std::cosh;
  using std::sinh;
  if (!(zeta >= Scalar(0))) throw std::invalid_argument("squeezing parameter must be nonnegative");
  const Scalar c = cosh(zeta);
  const Scalar s = sinh(zeta);
  Eigen::Matrix<Scalar, 4, 4> cov;
  // clang-format off
  cov << c, 0,  s,  0,
         0, c,  0, -s,
         s, 0,  c,  0,
         0, -s, 0,  c;
  // clang-format on
  return {displacement, cov};
}

template <typename Scalar, int ModesA, int ModesB>
GaussianState<Scalar> tensor_product(const GaussianState<Scalar, ModesA>& a,
                                     const GaussianState<Scalar, ModesB>& b) {
  const auto na = a.displacement().size();
  const auto nb = b.displacement().size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d(na + nb);
  d << a.displacement(), b.displacement();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cov =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(na + nb, na + nb);
  cov.topLeftCorner(na, na) = a.covariance();
  cov.bottomRightCorner(nb, nb) = b.covariance();
  return {std::move(d), std::move(cov)};
}

/// Block-diagonal symplectic form with J = [[0, 1], [-1, 0]] per mode.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> symplectic_form(int num_modes) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> omega =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(2 * num_modes, 2 * num_modes);
  for (int m = 0; m < num_modes; ++m) {
    omega(2 * m, 2 * m + 1) = Scalar(1);
    omega(2 * m + 1, 2 * m) = Scalar(-1);
  }
  return omega;
}

/// Beamsplitter acting on modes (a, b):
///   x_a' =  sqrt(T) x_a + sqrt(1-T) x_b
///   x_b' = -sqrt(1-T) x_a + sqrt(T) x_b      for x in {q, p}.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> beamsplitter_matrix(int num_modes, int a, int b,
                                                                          Scalar transmittance) {
  using std::sqrt;
  if (!(transmittance >= Scalar(0) && transmittance <= Scalar(1))) {
    throw std::invalid_argument("beamsplitter transmittance must lie in [0, 1]");
  }
  if (a == b || a < 0 || b < 0 || a >= num_modes || b >= num_modes) {
    throw std::out_of_range("beamsplitter needs two distinct valid mode indices");
  }
  const Scalar t = sqrt(transmittance);
  const Scalar u = sqrt(Scalar(1) - transmittance);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(2 * num_modes, 2 * num_modes);
  for (int k = 0; k < 2; ++k) {
    const int ia = 2 * a + k;
    const int ib = 2 * b + k;
    s(ia, ia) = t;
    s(ia, ib) = u;
    s(ib, ia) = -u;
    s(ib, ib) = t;
  }
  return s;
}

template <typename Scalar, int Modes, typename Derived>
GaussianState<Scalar, Modes> apply_symplectic(const GaussianState<Scalar, Modes>& state,
                                              const Eigen::MatrixBase<Derived>& s) {
  using State = GaussianState<Scalar, Modes>;
  typename State::Vector d = s * state.displacement();
  typename State::Matrix cov = s * state.covariance() * s.transpose();
  return {std::move(d), std::move(cov)};
}

template <typename Scalar, int Modes>
GaussianState<Scalar, Modes> apply_beamsplitter(const GaussianState<Scalar, Modes>& state, int a, int b,
                                                Scalar transmittance) {
  return apply_symplectic(state, beamsplitter_matrix<Scalar>(state.num_modes(), a, b, transmittance));
}

/// Phase rotation of one mode by pi/2: (q, p) -> (-p, q).
template <typename Scalar, int Modes>
GaussianState<Scalar, Modes> rotate_quarter(const GaussianState<Scalar, Modes>& state, int mode) {
  const int n = state.num_modes();
  state.index(mode, Quadrature::q);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(2 * n, 2 * n);
  s(2 * mode, 2 * mode) = Scalar(0);
  s(2 * mode, 2 * mode + 1) = Scalar(-1);
  s(2 * mode + 1, 2 * mode) = Scalar(1);
  s(2 * mode + 1, 2 * mode + 1) = Scalar(0);
  return apply_symplectic(state, s);
}

/// Phase rotation of one mode by pi: (q, p) -> (-q, -p).
template <typename Scalar, int Modes>
GaussianState<Scalar, Modes> phase_flip(const GaussianState<Scalar, Modes>& state, int mode) {
  using State = GaussianState<Scalar, Modes>;
  const int iq = state.index(mode, Quadrature::q);
  typename State::Vector d = state.displacement();
  typename State::Matrix cov = state.covariance();
  d.template segment<2>(iq) *= Scalar(-1);
  // Flipping both quadratures of one mode negates its cross terms with other modes.
  cov.template middleRows<2>(iq) *= Scalar(-1);
  cov.template middleCols<2>(iq) *= Scalar(-1);
  return {std::move(d), std::move(cov)};
}

/// Reduced single-mode state (partial trace over the other modes).
template <typename Scalar, int Modes>
GaussianState<Scalar, 1> extract_mode(const GaussianState<Scalar, Modes>& state, int mode) {
  const int i = state.index(mode, Quadrature::q);
  return {state.displacement().template segment<2>(i), state.covariance().template block<2, 2>(i, i)};
}

template <typename Scalar, int Modes>
Scalar min_covariance_eigenvalue(const GaussianState<Scalar, Modes>& state) {
  Eigen::SelfAdjointEigenSolver<typename GaussianState<Scalar, Modes>::Matrix> es(state.covariance(),
                                                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Conditional state of the remaining modes after a homodyne outcome.
/// The measured quadrature is conditioned on (Schur complement) and the
/// measured mode, including its conjugate quadrature, is discarded.
template <typename Scalar, int Modes>
GaussianState<Scalar> condition_on_homodyne(const GaussianState<Scalar, Modes>& state, int mode,
                                            Quadrature dir, Scalar outcome) {
  using DynVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using DynMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = state.num_modes();
  if (n < 2) throw std::invalid_argument("conditioning needs at least two modes");
  const int a = state.index(mode, dir);

  std::vector<int> keep;
  keep.reserve(2 * (n - 1));
  for (int i = 0; i < 2 * n; ++i) {
    if (i / 2 != mode) keep.push_back(i);
  }
  const auto& cov = state.covariance();
  const auto& d = state.displacement();
  const auto m = static_cast<Eigen::Index>(keep.size());
  DynVec d_rest(m);
  DynVec cross(m);
  DynMat cov_rest(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    d_rest(i) = d(keep[i]);
    cross(i) = cov(keep[i], a);
    for (Eigen::Index j = 0; j < m; ++j) cov_rest(i, j) = cov(keep[i], keep[j]);
  }
  const Scalar caa = cov(a, a);
  DynVec d_cond = d_rest + cross * ((outcome - d(a)) / caa);
  DynMat cov_cond = cov_rest - cross * cross.transpose() / caa;
  return {std::move(d_cond), std::move(cov_cond)};
}

template <typename Scalar>
struct HomodyneRecord {
  Scalar outcome;
  int mode_index;
  Quadrature direction;
  /// Empty when the measured state had a single mode.
  std::optional<GaussianState<Scalar>> conditional_state;
};

/// Draws a homodyne outcome ~ Normal(d_j, Gamma_jj / 2) without conditioning.
template <typename Scalar, int Modes, typename Rng>
Scalar homodyne_outcome(const GaussianState<Scalar, Modes>& state, int mode, Quadrature dir, Rng& rng) {
  using std::sqrt;
  std::normal_distribution<Scalar> normal(state.mean(mode, dir), sqrt(state.variance(mode, dir)));
  return normal(rng);
}

template <typename Scalar, int Modes, typename Rng>
HomodyneRecord<Scalar> homodyne_sample(const GaussianState<Scalar, Modes>& state, int mode, Quadrature dir,
                                       Rng& rng) {
  const Scalar x = homodyne_outcome(state, mode, dir, rng);
  HomodyneRecord<Scalar> record{x, mode, dir, std::nullopt};
  if (state.num_modes() > 1) record.conditional_state = condition_on_homodyne(state, mode, dir, x);
  return record;
}

}  // namespace cvue
