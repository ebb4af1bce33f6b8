// gaussian.hpp — Gaussian-state algebra on quadrature covariance matrices.
//
// Conventions (used throughout the library):
//   quadrature ordering x1,p1,x2,p2,...; r = (x,p)^T per mode
//   sigma_ij = <{r_i, r_j}> of centered quadratures, vacuum covariance = identity
//   symplectic form per mode: Omega = [[0,1],[-1,0]]

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qbat/types.hpp"

namespace qbat {

// Omega_N = direct sum of n copies of [[0,1],[-1,0]].
template <typename Scalar>
Matrix<Scalar> symplectic_form(Eigen::Index n_modes) {
    if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
    Matrix<Scalar> omega = Matrix<Scalar>::Zero(2 * n_modes, 2 * n_modes);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = Scalar(1);
        omega(2 * k + 1, 2 * k) = Scalar(-1);
    }
    return omega;
}

// Bose-Einstein occupation N = 1/(e^{beta*mu} - 1) = (coth(beta*mu/2) - 1)/2.
template <typename Scalar>
Scalar thermal_occupation(Scalar beta, Scalar mu) {
    const Scalar x = beta * mu;
    if (!(x > Scalar(0)))
        throw std::invalid_argument("thermal_occupation: beta*mu must be positive");
    return Scalar(1) / std::expm1(x);
}

template <typename Scalar>
struct GaussianState {
    Vector<Scalar> mean; // length 2n
    Matrix<Scalar> cov;  // 2n x 2n symmetric

    Eigen::Index modes() const { return cov.rows() / 2; }
};

// mean = 0, cov = (1+2N) * identity on each mode.
template <typename Scalar>
GaussianState<Scalar> thermal_state(Scalar occupation, Eigen::Index n_modes = 1) {
    if (occupation < Scalar(0))
        throw std::invalid_argument("thermal_state: occupation must be >= 0");
    if (n_modes < 1) throw std::invalid_argument("thermal_state: n_modes must be >= 1");
    GaussianState<Scalar> state;
    state.mean = Vector<Scalar>::Zero(2 * n_modes);
    state.cov = (Scalar(1) + Scalar(2) * occupation)
                * Matrix<Scalar>::Identity(2 * n_modes, 2 * n_modes);
    return state;
}

// Symplectic spectrum: moduli of the eigenvalues of i*Omega*sigma, one per mode,
// sorted ascending. Eigenvalues come in +/- pairs; the pairing is checked.
template <typename Derived>
Vector<typename Derived::Scalar> symplectic_eigenvalues(const Eigen::MatrixBase<Derived>& cov) {
    using Scalar = typename Derived::Scalar;
    const Matrix<Scalar> sigma = cov;
    const Eigen::Index dim = sigma.rows();
    if (dim % 2 != 0 || sigma.cols() != dim)
        throw std::invalid_argument("symplectic_eigenvalues: covariance must be 2n x 2n");
    if (!sigma.isApprox(sigma.transpose(), Scalar(1e-10)))
        throw std::invalid_argument("symplectic_eigenvalues: covariance must be symmetric");
    const Eigen::Index n = dim / 2;

    Eigen::EigenSolver<Matrix<Scalar>> solver(symplectic_form<Scalar>(n) * sigma, false);
    std::vector<Scalar> mods(dim);
    for (Eigen::Index i = 0; i < dim; ++i) mods[i] = std::abs(solver.eigenvalues()[i]);
    std::sort(mods.begin(), mods.end());

    Vector<Scalar> nu(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Scalar a = mods[2 * k];
        const Scalar b = mods[2 * k + 1];
        if (std::abs(a - b) > Scalar(1e-8) * std::max(Scalar(1), b))
            throw numerical_error("symplectic_eigenvalues: +/- pair mismatch");
        nu[k] = (a + b) / Scalar(2);
    }
    return nu;
}

template <typename Scalar>
Vector<Scalar> symplectic_eigenvalues(const GaussianState<Scalar>& state) {
    return symplectic_eigenvalues(state.cov);
}

// Uncertainty-principle guard: min symplectic eigenvalue >= 1 - tol.
template <typename Scalar>
bool check_physicality(const GaussianState<Scalar>& state, Scalar tol = Scalar(tol_phys)) {
    return symplectic_eigenvalues(state.cov).minCoeff() >= Scalar(1) - tol;
}

// S Omega S^T == Omega within tol.
template <typename Derived>
bool is_symplectic(const Eigen::MatrixBase<Derived>& s,
                   typename Derived::Scalar tol = typename Derived::Scalar(tol_phys)) {
    using Scalar = typename Derived::Scalar;
    const Matrix<Scalar> S = s;
    if (S.rows() != S.cols() || S.rows() % 2 != 0) return false;
    const Matrix<Scalar> omega = symplectic_form<Scalar>(S.rows() / 2);
    return ((S * omega * S.transpose()) - omega).template lpNorm<Eigen::Infinity>() <= tol;
}

// mean -> S mean, cov -> S cov S^T.
template <typename Scalar>
GaussianState<Scalar> apply_symplectic(const GaussianState<Scalar>& state,
                                       const Matrix<Scalar>& s) {
    if (s.rows() != state.cov.rows())
        throw std::invalid_argument("apply_symplectic: dimension mismatch");
    if (!is_symplectic(s))
        throw std::invalid_argument("apply_symplectic: matrix is not symplectic");
    GaussianState<Scalar> out;
    out.mean = s * state.mean;
    out.cov = s * state.cov * s.transpose();
    return out;
}

// Single-mode quadrature rotation O(theta) = cos(theta) I + sin(theta) Omega.
template <typename Scalar>
Matrix<Scalar> rotation_matrix(Scalar theta) {
    Matrix<Scalar> o(2, 2);
    o << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return o;
}

// Single-mode squeezer K(r) = exp(-r sigma_z) = diag(e^{-r}, e^{r}).
template <typename Scalar>
Matrix<Scalar> squeeze_matrix(Scalar r) {
    Matrix<Scalar> k(2, 2);
    k << std::exp(-r), Scalar(0), Scalar(0), std::exp(r);
    return k;
}

// Euler-decomposed single-mode channel S = O(theta) K(r).
template <typename Scalar>
struct ChannelSpec {
    Scalar rotation_angle{0};
    Scalar squeeze_r{0};

    Matrix<Scalar> matrix() const {
        return rotation_matrix(rotation_angle) * squeeze_matrix(squeeze_r);
    }
};

// Covariance of a thermal state pushed through S = O(theta) K(r), in closed form:
//   (1+2N_A) * [[e^{-2r}cos^2 + e^{2r}sin^2,  sin(2theta)sinh(2r)],
//               [sin(2theta)sinh(2r),         e^{2r}cos^2 + e^{-2r}sin^2]]
template <typename Scalar>
GaussianState<Scalar> euler_charged_cov(Scalar occupation, const ChannelSpec<Scalar>& channel) {
    if (occupation < Scalar(0))
        throw std::invalid_argument("euler_charged_cov: occupation must be >= 0");
    const Scalar c2 = std::cos(channel.rotation_angle) * std::cos(channel.rotation_angle);
    const Scalar s2 = std::sin(channel.rotation_angle) * std::sin(channel.rotation_angle);
    const Scalar em = std::exp(Scalar(-2) * channel.squeeze_r);
    const Scalar ep = std::exp(Scalar(2) * channel.squeeze_r);
    const Scalar off = std::sin(Scalar(2) * channel.rotation_angle)
                       * std::sinh(Scalar(2) * channel.squeeze_r);
    GaussianState<Scalar> out;
    out.mean = Vector<Scalar>::Zero(2);
    out.cov.resize(2, 2);
    out.cov << em * c2 + ep * s2, off, off, ep * c2 + em * s2;
    out.cov *= Scalar(1) + Scalar(2) * occupation;
    return out;
}

// Block-diagonal direct sum of two covariance blocks.
template <typename Scalar>
Matrix<Scalar> direct_sum(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

} // namespace qbat
