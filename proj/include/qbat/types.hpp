// types.hpp — Shared scalar-templated dense types and error categories

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qbat {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

// Default tolerance for physicality and symplecticity checks.
inline constexpr double tol_phys = 1e-9;

// Dynamics without a stationary solution (positive drift spectrum).
class unstable_error : public std::runtime_error {
public:
    explicit unstable_error(const std::string& what) : std::runtime_error(what) {}
};

// Linear-algebra failure distinct from instability (singular system, no convergence).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qbat
