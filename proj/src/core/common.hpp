#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace dirgrad {

using Vec = Eigen::VectorXd;

// Invalid inputs (bad sizes, bad parameter values) throw these; numerical
// routines that can legitimately fail (e.g. reference minimizers) throw
// ConvergenceError.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_same_size(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size())
    throw DimensionError(std::string(what) + ": size mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
}

inline void require_size(const Vec& a, Eigen::Index n, const char* what) {
  if (a.size() != n)
    throw DimensionError(std::string(what) + ": expected size " + std::to_string(n) + ", got " +
                         std::to_string(a.size()));
}

}  // namespace dirgrad
