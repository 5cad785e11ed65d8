#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace momg {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Vec3<double> zero3() { return Vec3<double>::Zero(); }

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent configuration input.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A state with nonpositive density, nonpositive temperature, or non-finite
/// entries where a physical state is required.
class NonphysicalState : public Error {
 public:
  explicit NonphysicalState(const std::string& what) : Error(what) {}
};

/// A reconstructed face state has nonpositive temperature; callers fall back
/// to the first-order face value at the offending face.
class NonphysicalReconstruction : public Error {
 public:
  explicit NonphysicalReconstruction(const std::string& what) : Error(what) {}
};

/// The anisotropic-Gaussian tensor lost positive definiteness.
class NonSpdTensor : public Error {
 public:
  NonSpdTensor(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

/// A solver update failed even after the single half-step retry.
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what) : Error(what) {}
};

}  // namespace momg
