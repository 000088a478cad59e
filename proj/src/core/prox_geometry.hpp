#pragma once

#include <variant>

#include "core/common.hpp"

namespace dirgrad {

// Proximal setup for p in {1, 2}. For p=2 the prox-function is the squared
// Euclidean norm d(x) = |x|_2^2 / 2; for p=1 it is the scaled squared
// kappa-norm d(x) = (coeff/2) |x|_kappa^2 with kappa = 1 + 1/ln n and
// coeff = e * n^((kappa-1)(2-kappa)/kappa) * ln n. Both are 1-strongly convex
// with respect to the corresponding p-norm.
struct ProxSetup {
  int p = 2;
  int n = 0;
  double kappa = 2.0;  // meaningful for p=1 only
  double coeff = 1.0;  // prox scaling constant; 1 for p=2

  static ProxSetup make(int p, int n);

  // Dual norm index: 2 for p=2, +infinity for p=1.
  double dual_q() const;
};

// d_bar(x) = radius^2 * d((x - center)/radius); recentered/rescaled prox used
// by the restart algorithms. Still 1-strongly convex w.r.t. the p-norm, with
// minimum 0 attained at `center`.
struct ShiftedProx {
  ProxSetup base;
  Vec center;
  double radius = 1.0;

  static ShiftedProx make(const ProxSetup& base, Vec center, double radius);
};

using Geometry = std::variant<ProxSetup, ShiftedProx>;

const ProxSetup& base_setup(const Geometry& geom);

// |x|_p for p in {1, 2, inf}. Empty vectors are rejected.
double norm(const Vec& x, double p);

// |x|_kappa for kappa in (1, 2], computed with max-scaling to avoid
// under/overflow.
double kappa_norm(const Vec& x, double kappa);

double prox_value(const ProxSetup& setup, const Vec& x);
double prox_value(const ShiftedProx& prox, const Vec& x);
double prox_value(const Geometry& geom, const Vec& x);

Vec prox_gradient(const ProxSetup& setup, const Vec& x);
Vec prox_gradient(const ShiftedProx& prox, const Vec& x);
Vec prox_gradient(const Geometry& geom, const Vec& x);

// Bregman divergence V[z](x) = d(x) - d(z) - <grad d(z), x - z>.
double bregman(const ProxSetup& setup, const Vec& z, const Vec& x);
double bregman(const ShiftedProx& prox, const Vec& z, const Vec& x);
double bregman(const Geometry& geom, const Vec& z, const Vec& x);

// argmin_v { step * <g, v - z> + V[z](v) } over all of R^n. Closed form:
// z - step*g for p=2, and the conjugate mirror map for p=1.
Vec mirror_step(const ProxSetup& setup, const Vec& z, const Vec& g, double step);
Vec mirror_step(const ShiftedProx& prox, const Vec& z, const Vec& g, double step);
Vec mirror_step(const Geometry& geom, const Vec& z, const Vec& g, double step);

// Inverse mirror map grad d*(y) for the p=1 setup:
// (1/c) |y|_{k'}^{2-k'} |y_i|^{k'-1} sign(y_i), k' = kappa/(kappa-1).
Vec conjugate_gradient_map(const ProxSetup& setup, const Vec& y);

// rho_n = min{q-1, 16 ln n - 8} * n^(2/q - 1) (q in {2, inf}). For n < 8 the
// formula value is returned with a warning: the lemma certifying it assumes
// n >= 8.
double rho_constant(int n, double q);

// Omega_p: 1 for p=2; the prox coefficient (= O(ln n)) for p=1.
double omega_constant(const ProxSetup& setup);

}  // namespace dirgrad
