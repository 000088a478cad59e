#include "core/prox_geometry.hpp"

#include <cmath>
#include <limits>

#include "core/logging.hpp"

namespace dirgrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |v|^t for t > 0 with an explicit zero guard (avoids 0^0 when t underflows
// towards 0 for large n).
inline double pow_abs(double v, double t) {
  const double a = std::abs(v);
  if (a == 0.0) return 0.0;
  return std::exp(t * std::log(a));
}

}  // namespace

ProxSetup ProxSetup::make(int p, int n) {
  if (p != 1 && p != 2) throw InvalidArgument("ProxSetup: p must be 1 or 2");
  if (n < 2) throw InvalidArgument("ProxSetup: dimension must be >= 2");
  ProxSetup s;
  s.p = p;
  s.n = n;
  if (p == 1) {
    const double ln = std::log(static_cast<double>(n));
    s.kappa = 1.0 + 1.0 / ln;
    const double expo = (s.kappa - 1.0) * (2.0 - s.kappa) / s.kappa;
    s.coeff = std::exp(1.0) * std::pow(static_cast<double>(n), expo) * ln;
  } else {
    s.kappa = 2.0;
    s.coeff = 1.0;
  }
  return s;
}

double ProxSetup::dual_q() const { return p == 1 ? kInf : 2.0; }

ShiftedProx ShiftedProx::make(const ProxSetup& base, Vec center, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("ShiftedProx: radius must be > 0");
  require_size(center, base.n, "ShiftedProx center");
  return ShiftedProx{base, std::move(center), radius};
}

const ProxSetup& base_setup(const Geometry& geom) {
  if (const auto* s = std::get_if<ProxSetup>(&geom)) return *s;
  return std::get<ShiftedProx>(geom).base;
}

double norm(const Vec& x, double p) {
  if (x.size() == 0) throw DimensionError("norm: empty vector");
  if (p == 1.0) return x.lpNorm<1>();
  if (p == 2.0) return x.norm();
  if (p == kInf) return x.lpNorm<Eigen::Infinity>();
  throw InvalidArgument("norm: p must be 1, 2 or inf");
}

double kappa_norm(const Vec& x, double kappa) {
  const double m = x.lpNorm<Eigen::Infinity>();
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += pow_abs(x[i] / m, kappa);
  return m * std::pow(acc, 1.0 / kappa);
}

double prox_value(const ProxSetup& setup, const Vec& x) {
  require_size(x, setup.n, "prox_value");
  if (setup.p == 2) return 0.5 * x.squaredNorm();
  const double r = kappa_norm(x, setup.kappa);
  return 0.5 * setup.coeff * r * r;
}

double prox_value(const ShiftedProx& prox, const Vec& x) {
  require_size(x, prox.base.n, "prox_value");
  const double r2 = prox.radius * prox.radius;
  return r2 * prox_value(prox.base, (x - prox.center) / prox.radius);
}

double prox_value(const Geometry& geom, const Vec& x) {
  return std::visit([&](const auto& g) { return prox_value(g, x); }, geom);
}

Vec prox_gradient(const ProxSetup& setup, const Vec& x) {
  require_size(x, setup.n, "prox_gradient");
  if (setup.p == 2) return x;
  const double r = kappa_norm(x, setup.kappa);
  Vec out = Vec::Zero(x.size());
  if (r == 0.0) return out;  // removable singularity: grad d(0) = 0
  const double scale = setup.coeff * std::pow(r, 2.0 - setup.kappa);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    out[i] = scale * pow_abs(x[i], setup.kappa - 1.0) * (x[i] > 0.0 ? 1.0 : -1.0);
  }
  return out;
}

Vec prox_gradient(const ShiftedProx& prox, const Vec& x) {
  require_size(x, prox.base.n, "prox_gradient");
  return prox.radius * prox_gradient(prox.base, (x - prox.center) / prox.radius);
}

Vec prox_gradient(const Geometry& geom, const Vec& x) {
  return std::visit([&](const auto& g) { return prox_gradient(g, x); }, geom);
}

namespace {

template <typename ProxT>
double bregman_impl(const ProxT& prox, const Vec& z, const Vec& x) {
  require_same_size(z, x, "bregman");
  const Vec gz = prox_gradient(prox, z);
  return prox_value(prox, x) - prox_value(prox, z) - gz.dot(x - z);
}

}  // namespace

double bregman(const ProxSetup& setup, const Vec& z, const Vec& x) {
  return bregman_impl(setup, z, x);
}

double bregman(const ShiftedProx& prox, const Vec& z, const Vec& x) {
  return bregman_impl(prox, z, x);
}

double bregman(const Geometry& geom, const Vec& z, const Vec& x) {
  return std::visit([&](const auto& g) { return bregman(g, z, x); }, geom);
}

Vec conjugate_gradient_map(const ProxSetup& setup, const Vec& y) {
  require_size(y, setup.n, "conjugate_gradient_map");
  const double kp = setup.kappa / (setup.kappa - 1.0);
  const double r = kappa_norm(y, kp);
  Vec out = Vec::Zero(y.size());
  if (r == 0.0) return out;
  const double scale = std::pow(r, 2.0 - kp) / setup.coeff;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] == 0.0) continue;
    out[i] = scale * pow_abs(y[i], kp - 1.0) * (y[i] > 0.0 ? 1.0 : -1.0);
  }
  return out;
}

Vec mirror_step(const ProxSetup& setup, const Vec& z, const Vec& g, double step) {
  require_size(z, setup.n, "mirror_step");
  require_same_size(z, g, "mirror_step");
  if (step < 0.0) throw InvalidArgument("mirror_step: step must be >= 0");
  if (setup.p == 2) return z - step * g;
  // p=1: z+ = grad d*(grad d(z) - step g).
  const Vec y = prox_gradient(setup, z) - step * g;
  return conjugate_gradient_map(setup, y);
}

Vec mirror_step(const ShiftedProx& prox, const Vec& z, const Vec& g, double step) {
  require_size(z, prox.base.n, "mirror_step");
  require_same_size(z, g, "mirror_step");
  if (step < 0.0) throw InvalidArgument("mirror_step: step must be >= 0");
  // Translate/scale to the base coordinates, step there, map back.
  const Vec zp = (z - prox.center) / prox.radius;
  const Vec w = mirror_step(prox.base, zp, g, step / prox.radius);
  return prox.center + prox.radius * w;
}

Vec mirror_step(const Geometry& geom, const Vec& z, const Vec& g, double step) {
  return std::visit([&](const auto& p) { return mirror_step(p, z, g, step); }, geom);
}

double rho_constant(int n, double q) {
  if (n < 2) throw InvalidArgument("rho_constant: n must be >= 2");
  if (q != 2.0 && q != kInf) throw InvalidArgument("rho_constant: q must be 2 or inf");
  if (n < 8)
    DIRGRAD_LOG_WARN("rho_constant: n = %d < 8, the lemma certifying the constant does not apply",
                     n);
  const double ln = std::log(static_cast<double>(n));
  if (q == kInf) return (16.0 * ln - 8.0) / static_cast<double>(n);
  return std::min(q - 1.0, 16.0 * ln - 8.0);  // n^(2/q - 1) = 1 for q = 2
}

double omega_constant(const ProxSetup& setup) {
  return setup.p == 2 ? 1.0 : setup.coeff;
}

}  // namespace dirgrad
