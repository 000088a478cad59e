#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace dirgrad {

// Additive noise entering the directional-derivative oracle:
// returned value = <g(x,xi), e> + zeta + eta, with E zeta^2 <= delta_zeta and
// |eta| <= delta_eta almost surely. zeta is a truncated Gaussian (clamped at
// 6 sd), eta is uniform on [-delta_eta, delta_eta].
struct NoiseModel {
  double delta_zeta = 0.0;
  double delta_eta = 0.0;

  double sample_zeta(Rng& rng) const;
  double sample_eta(Rng& rng) const;
};

// Contract for f(x) = E_xi F(x, xi) with a stochastic gradient g(x, xi),
// |g(x,xi) - grad f(x)| bounded in second moment by sigma^2, and grad F
// L(xi)-Lipschitz with L2 = sqrt(E L(xi)^2). Test problems also carry ground
// truth (f*, x*) so harness output can report exact suboptimality.
class StochasticObjective {
 public:
  virtual ~StochasticObjective() = default;

  virtual int dim() const = 0;
  virtual double l2() const = 0;
  virtual double sigma_sq() const = 0;
  // Strong-convexity modulus w.r.t. the p-norm; 0 if merely convex.
  virtual double mu(int p) const = 0;

  virtual bool has_ground_truth() const = 0;
  virtual double f_star() const = 0;
  virtual const Vec& x_star() const = 0;

  virtual Vec sample_xi(Rng& rng) const = 0;
  virtual double value(const Vec& x, const Vec& xi) const = 0;            // F(x, xi)
  virtual double dir_derivative(const Vec& x, const Vec& xi, const Vec& e) const = 0;

  // Noise-free evaluation path, available on test problems.
  virtual double true_value(const Vec& x) const = 0;
  virtual Vec true_gradient(const Vec& x) const = 0;
};

// f(x) = (1/2) (x - x*)' diag(spectrum) (x - x*) + f*, with stochastic
// gradient g(x, xi) = grad f(x) + xi where the coordinates of xi are
// independent truncated Gaussians with E|xi|_2^2 <= sigma^2.
class QuadraticObjective final : public StochasticObjective {
 public:
  QuadraticObjective(Vec spectrum, Vec x_star, double f_star, double sigma, double mu);

  int dim() const override { return static_cast<int>(spectrum_.size()); }
  double l2() const override { return l2_; }
  double sigma_sq() const override { return sigma_ * sigma_; }
  double mu(int p) const override;

  bool has_ground_truth() const override { return true; }
  double f_star() const override { return f_star_; }
  const Vec& x_star() const override { return x_star_; }

  Vec sample_xi(Rng& rng) const override;
  double value(const Vec& x, const Vec& xi) const override;
  double dir_derivative(const Vec& x, const Vec& xi, const Vec& e) const override;

  double true_value(const Vec& x) const override;
  Vec true_gradient(const Vec& x) const override;

  const Vec& spectrum() const { return spectrum_; }

 private:
  Vec spectrum_;
  Vec x_star_;
  double f_star_;
  double sigma_;
  double mu_;
  double l2_;
};

// Factory used by the harness and tests. When sparse_solution is set, x* has
// two nonzero entries (so |x*|_1 <= sqrt(2) |x*|_2); otherwise x* is a random
// direction. Either way |x*|_2 = 1 and x0 = 0 gives R_2 = 1.
std::unique_ptr<QuadraticObjective> make_quadratic(int n, const Vec& spectrum, double sigma,
                                                   double mu, bool sparse_solution, Rng& rng);

struct GradientEstimate {
  Vec vector;                      // scalar * direction
  Vec direction;                   // unit vector e
  double scalar = 0.0;             // (1/m) sum of oracle answers
  std::int64_t batch_size = 0;
  std::int64_t oracle_calls = 0;   // == batch_size
};

// Optional per-call recording of the noise components, for verification.
struct OracleTape {
  std::vector<double> zeta;
  std::vector<double> eta;
};

// Uniform direction on the unit Euclidean sphere (normalized Gaussian vector;
// the all-zeros draw is rejected and redrawn).
Vec sample_direction(Rng& rng, int n);

// One noisy oracle answer: <g(x,xi), e> + zeta + eta.
double noisy_dir_derivative(const StochasticObjective& obj, const NoiseModel& noise, const Vec& x,
                            const Vec& xi, const Vec& e, Rng& rng, OracleTape* tape = nullptr);

// Smoothing-parameter-induced oracle accuracies of the finite-difference
// reduction: (delta_zeta, delta_eta) = (L2^2 t^2 / 4, 2 Delta / t).
std::pair<double, double> implied_noise_levels(double t, double l2, double delta);

// Strategy interface so algorithms run against either oracle flavor.
class GradientEstimator {
 public:
  virtual ~GradientEstimator() = default;
  virtual GradientEstimate estimate(const Vec& x, std::int64_t m, Rng& rng) const = 0;
  // Oracle accuracy (delta_zeta, delta_eta) promised by this estimator.
  virtual std::pair<double, double> noise_levels() const = 0;
  virtual const StochasticObjective& objective() const = 0;

  void set_tape(OracleTape* tape) { tape_ = tape; }

 protected:
  OracleTape* tape_ = nullptr;
};

// Mini-batch estimator (1/m) sum_i f~'(x, xi_i, e) * e with one shared
// direction e per batch.
class DirectionalEstimator final : public GradientEstimator {
 public:
  DirectionalEstimator(const StochasticObjective& obj, NoiseModel noise)
      : obj_(&obj), noise_(noise) {}

  GradientEstimate estimate(const Vec& x, std::int64_t m, Rng& rng) const override;
  std::pair<double, double> noise_levels() const override {
    return {noise_.delta_zeta, noise_.delta_eta};
  }
  const StochasticObjective& objective() const override { return *obj_; }

 private:
  const StochasticObjective* obj_;
  NoiseModel noise_;
};

// Two-point feedback: (1/m) sum_i [(f~(x + t e, xi_i) - f~(x, xi_i)) / t] e
// with f~ = F + Xi, |Xi| <= value_noise_bound a.s., Xi drawn independently at
// the two points.
class FiniteDifferenceEstimator final : public GradientEstimator {
 public:
  FiniteDifferenceEstimator(const StochasticObjective& obj, double t, double value_noise_bound);

  GradientEstimate estimate(const Vec& x, std::int64_t m, Rng& rng) const override;
  std::pair<double, double> noise_levels() const override {
    return implied_noise_levels(t_, obj_->l2(), value_noise_bound_);
  }
  const StochasticObjective& objective() const override { return *obj_; }

  double smoothing() const { return t_; }
  double value_noise_bound() const { return value_noise_bound_; }

 private:
  const StochasticObjective* obj_;
  double t_;
  double value_noise_bound_;
};

// Convenience wrappers matching the operation-level contracts.
GradientEstimate estimate_gradient(const StochasticObjective& obj, const NoiseModel& noise,
                                   const Vec& x, std::int64_t m, Rng& rng,
                                   OracleTape* tape = nullptr);
GradientEstimate finite_difference_estimate(const StochasticObjective& obj, const Vec& x,
                                            std::int64_t m, double t, double value_noise_bound,
                                            Rng& rng, OracleTape* tape = nullptr);

}  // namespace dirgrad
