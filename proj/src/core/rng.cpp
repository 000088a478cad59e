#include "core/rng.hpp"

#include <cmath>

namespace dirgrad {

std::uint64_t mix_u64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_ = v * f;
  has_cached_ = true;
  return u * f;
}

double Rng::truncated_normal(double sd, double clamp) {
  const double x = sd * normal();
  const double lim = clamp * sd;
  if (x > lim) return lim;
  if (x < -lim) return -lim;
  return x;
}

Rng Rng::split(std::uint64_t stream_id) const {
  return Rng(mix_u64(mix_u64(seed_) ^ mix_u64(stream_id + 0x632be59bd9b4e019ULL)));
}

}  // namespace dirgrad
