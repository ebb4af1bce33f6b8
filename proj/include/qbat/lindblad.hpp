// lindblad.hpp — Drift/diffusion construction for a squeezed thermal bath,
// stability and bona-fide checks, Lyapunov steady state, covariance flow.
//
// Drift and diffusion follow from quadratic H = (1/2) r^T H_s r and linear
// jump operators L_k = b_k^T r:
//   A = Omega H_s - Omega Im(B B^dag),   D = -2 Omega Re(B B^dag) Omega,
// with B the 2n x m matrix whose columns are the b_k. The jump amplitudes are
// normalized so that at lambda = r_B = 0 the drift eigenvalues have real part
// -Gamma/2 and the thermal state (1+2N_B) I is stationary.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qbat/gaussian.hpp"
#include "qbat/types.hpp"

namespace qbat {

template <typename Scalar>
struct DriveSpec {
    Scalar mu{1};       // oscillator quantum, hbar = 1
    Scalar lambda{0};   // parametric drive strength
    Scalar tau_a{0};    // charging window start
    Scalar tau_b{std::numeric_limits<Scalar>::infinity()}; // window end

    void validate() const {
        if (!(mu > Scalar(0))) throw std::invalid_argument("DriveSpec: mu must be > 0");
        if (lambda < Scalar(0)) throw std::invalid_argument("DriveSpec: lambda must be >= 0");
        if (!(tau_a < tau_b)) throw std::invalid_argument("DriveSpec: tau_a < tau_b required");
    }
};

template <typename Scalar>
struct BathSpec {
    Scalar gamma{0};    // damping rate
    Scalar n_b{0};      // bath occupation
    Scalar r_b{0};      // bath squeezing
    Scalar theta_b{0};  // bath squeezing phase
    Scalar n_a{0};      // preparation-bath occupation (initial state)

    void validate() const {
        if (gamma < Scalar(0)) throw std::invalid_argument("BathSpec: gamma must be >= 0");
        if (n_b < Scalar(0)) throw std::invalid_argument("BathSpec: n_b must be >= 0");
        if (r_b < Scalar(0)) throw std::invalid_argument("BathSpec: r_b must be >= 0");
        if (n_a < Scalar(0)) throw std::invalid_argument("BathSpec: n_a must be >= 0");
    }
};

// Columns are quadrature coefficient vectors b_k of the jump operators L_k = b_k^T r.
template <typename Scalar>
struct LindbladSpec {
    ComplexMatrix<Scalar> b_matrix;
};

// H_s = mu I - lambda sigma_x when the drive is on, mu I otherwise.
template <typename Scalar>
Matrix<Scalar> hamiltonian_matrix(const DriveSpec<Scalar>& drive, bool drive_on) {
    Matrix<Scalar> h = drive.mu * Matrix<Scalar>::Identity(2, 2);
    if (drive_on) {
        h(0, 1) -= drive.lambda;
        h(1, 0) -= drive.lambda;
    }
    return h;
}

// Squeezed thermal bath jump vectors on quadratures, a = (x + i p)/sqrt(2):
//   L_+ = sqrt(Gamma (N_B+1)) (a cosh r_B + a^dag sinh r_B e^{+i theta_B})
//   L_- = sqrt(Gamma N_B)     (a^dag cosh r_B + a sinh r_B e^{-i theta_B})
template <typename Scalar>
LindbladSpec<Scalar> jump_vectors(const BathSpec<Scalar>& bath) {
    using C = std::complex<Scalar>;
    bath.validate();
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    const ComplexVector<Scalar> a_vec =
        (ComplexVector<Scalar>(2) << C(inv_sqrt2, 0), C(0, inv_sqrt2)).finished();
    const ComplexVector<Scalar> adag_vec = a_vec.conjugate();

    const Scalar ch = std::cosh(bath.r_b);
    const Scalar sh = std::sinh(bath.r_b);
    const C phase = std::polar(Scalar(1), bath.theta_b);

    LindbladSpec<Scalar> spec;
    spec.b_matrix.resize(2, 2);
    spec.b_matrix.col(0) =
        std::sqrt(bath.gamma * (bath.n_b + Scalar(1))) * (ch * a_vec + sh * phase * adag_vec);
    spec.b_matrix.col(1) =
        std::sqrt(bath.gamma * bath.n_b) * (ch * adag_vec + sh * std::conj(phase) * a_vec);
    return spec;
}

template <typename Scalar>
struct DriftDiffusion {
    Matrix<Scalar> drift;     // A
    Matrix<Scalar> diffusion; // D, symmetric PSD

    Eigen::Index modes() const { return drift.rows() / 2; }
};

template <typename Scalar>
DriftDiffusion<Scalar> drift_diffusion(const DriveSpec<Scalar>& drive,
                                       const BathSpec<Scalar>& bath,
                                       bool drive_on = true) {
    drive.validate();
    bath.validate();
    const Matrix<Scalar> omega = symplectic_form<Scalar>(1);
    DriftDiffusion<Scalar> dd;
    dd.drift = omega * hamiltonian_matrix(drive, drive_on);
    dd.diffusion = Matrix<Scalar>::Zero(2, 2);
    if (bath.gamma > Scalar(0)) {
        const ComplexMatrix<Scalar> b = jump_vectors(bath).b_matrix;
        const ComplexMatrix<Scalar> bb = b * b.adjoint();
        dd.drift -= omega * bb.imag();
        dd.diffusion = Scalar(-2) * omega * bb.real() * omega;
        dd.diffusion = ((dd.diffusion + dd.diffusion.transpose()) / Scalar(2)).eval();
    }
    return dd;
}

template <typename Scalar>
DriftDiffusion<Scalar> direct_sum(const DriftDiffusion<Scalar>& a,
                                  const DriftDiffusion<Scalar>& b) {
    return DriftDiffusion<Scalar>{direct_sum(a.drift, b.drift),
                                  direct_sum(a.diffusion, b.diffusion)};
}

template <typename Scalar>
struct StabilityReport {
    bool stable{false};
    Scalar margin{0};                     // mu^2 - lambda^2 + Gamma^2/4
    ComplexVector<Scalar> eigenvalues;    // spectrum of A
    bool spectral_stable{false};          // max Re eig(A) < 0
};

// Routh-Hurwitz for the single-mode drift: A = Omega H_s - (Gamma/2) I gives
// tr A = -Gamma and det A = mu^2 - lambda^2 + Gamma^2/4, so for Gamma > 0 the
// flow is asymptotically stable iff the margin is positive. For Gamma = 0 the
// closed flow is bounded iff mu > lambda (marginal, no decay).
template <typename Scalar>
StabilityReport<Scalar> stability_check(const DriveSpec<Scalar>& drive,
                                        const BathSpec<Scalar>& bath) {
    const DriftDiffusion<Scalar> dd = drift_diffusion(drive, bath, true);
    StabilityReport<Scalar> report;
    report.margin = drive.mu * drive.mu - drive.lambda * drive.lambda
                    + bath.gamma * bath.gamma / Scalar(4);
    Eigen::EigenSolver<Matrix<Scalar>> solver(dd.drift, false);
    report.eigenvalues = solver.eigenvalues();
    report.spectral_stable = report.eigenvalues.real().maxCoeff() < Scalar(0);
    report.stable = bath.gamma > Scalar(0) ? report.margin > Scalar(0)
                                           : drive.mu > drive.lambda;
    return report;
}

// det D >= det(Omega^T A - A^T Omega), with D additionally required PSD.
// Single mode only.
template <typename Scalar>
bool bona_fide_check(const DriftDiffusion<Scalar>& dd) {
    if (dd.modes() != 1)
        throw std::invalid_argument("bona_fide_check: single mode only");
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(dd.diffusion, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -Scalar(1e-12)) return false;
    const Matrix<Scalar> omega = symplectic_form<Scalar>(1);
    const Matrix<Scalar> rhs =
        omega.transpose() * dd.drift - dd.drift.transpose() * omega;
    return dd.diffusion.determinant() >= rhs.determinant() - Scalar(1e-12);
}

namespace detail {

// Solve A X + X A^T + D = 0 by vectorization; (2n)^2 unknowns, n <= 3.
template <typename Scalar>
Matrix<Scalar> solve_lyapunov(const Matrix<Scalar>& a, const Matrix<Scalar>& d) {
    const Eigen::Index dim = a.rows();
    const Eigen::Index dim2 = dim * dim;
    Matrix<Scalar> kron = Matrix<Scalar>::Zero(dim2, dim2);
    const Matrix<Scalar> eye = Matrix<Scalar>::Identity(dim, dim);
    // vec(AX + XA^T) = (I (x) A + A (x) I) vec(X), column-major vec
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index k = 0; k < dim; ++k) {
                kron(i + dim * j, k + dim * j) += a(i, k);       // I (x) A
                kron(i + dim * j, i + dim * k) += a(j, k);       // A (x) I
            }
    Vector<Scalar> rhs(dim2);
    for (Eigen::Index j = 0; j < dim; ++j) rhs.segment(j * dim, dim) = -d.col(j);

    Eigen::FullPivLU<Matrix<Scalar>> lu(kron);
    if (!lu.isInvertible())
        throw numerical_error("solve_lyapunov: singular linear system");
    const Vector<Scalar> x = lu.solve(rhs);
    Matrix<Scalar> sigma(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) sigma.col(j) = x.segment(j * dim, dim);
    return ((sigma + sigma.transpose()) / Scalar(2)).eval();
}

} // namespace detail

// Stationary covariance solving A sigma + sigma A^T + D = 0.
template <typename Scalar>
GaussianState<Scalar> steady_state(const DriftDiffusion<Scalar>& dd) {
    Eigen::EigenSolver<Matrix<Scalar>> solver(dd.drift, false);
    if (solver.eigenvalues().real().maxCoeff() >= Scalar(0))
        throw unstable_error("steady_state: drift spectrum is not strictly stable");
    GaussianState<Scalar> state;
    state.mean = Vector<Scalar>::Zero(dd.drift.rows());
    state.cov = detail::solve_lyapunov(dd.drift, dd.diffusion);
    const Scalar residual = (dd.drift * state.cov + state.cov * dd.drift.transpose()
                             + dd.diffusion)
                                .template lpNorm<Eigen::Infinity>();
    if (!(residual < Scalar(1e-10) * std::max(Scalar(1), state.cov.template lpNorm<Eigen::Infinity>())))
        throw numerical_error("steady_state: Lyapunov residual too large");
    return state;
}

template <typename Scalar>
struct Trajectory {
    std::vector<Scalar> times;
    std::vector<GaussianState<Scalar>> states;
    std::vector<Vector<Scalar>> spectra;
};

namespace detail {

// e^{Mt} of the augmented generator [[L, vec D],[0, 0]] with L = I(x)A + A(x)I
// gives vec sigma(t) = e^{Lt} vec sigma_0 + phi(L,t) vec D exactly for any A,
// including marginal and non-diagonalizable cases.
template <typename Scalar>
Matrix<Scalar> propagate_augmented(const Matrix<Scalar>& a, const Matrix<Scalar>& d,
                                   const Matrix<Scalar>& sigma0, Scalar t) {
    const Eigen::Index dim = a.rows();
    const Eigen::Index dim2 = dim * dim;
    Matrix<Scalar> m = Matrix<Scalar>::Zero(dim2 + 1, dim2 + 1);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index k = 0; k < dim; ++k) {
                m(i + dim * j, k + dim * j) += a(i, k);
                m(i + dim * j, i + dim * k) += a(j, k);
            }
    for (Eigen::Index j = 0; j < dim; ++j)
        m.col(dim2).segment(j * dim, dim) = d.col(j);
    const Matrix<Scalar> em = (m * t).exp();
    Vector<Scalar> v0(dim2 + 1);
    for (Eigen::Index j = 0; j < dim; ++j) v0.segment(j * dim, dim) = sigma0.col(j);
    v0[dim2] = Scalar(1);
    const Vector<Scalar> vt = em * v0;
    Matrix<Scalar> sigma(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) sigma.col(j) = vt.segment(j * dim, dim);
    return ((sigma + sigma.transpose()) / Scalar(2)).eval();
}

} // namespace detail

// Integrate sigma_dot = A sigma + sigma A^T + D and mean_dot = A mean on the
// given grid. Exact propagation throughout: via the steady state when one
// exists, via e^{At} sigma0 e^{A^T t} when D = 0, via the augmented matrix
// exponential otherwise.
template <typename Scalar>
Trajectory<Scalar> evolve(const GaussianState<Scalar>& initial,
                          const DriftDiffusion<Scalar>& dd,
                          const std::vector<Scalar>& t_grid,
                          Scalar tol = Scalar(1e-7)) {
    if (t_grid.empty() || t_grid.front() < Scalar(0))
        throw std::invalid_argument("evolve: grid must start at t >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("evolve: grid must be strictly increasing");
    if (initial.cov.rows() != dd.drift.rows())
        throw std::invalid_argument("evolve: dimension mismatch");

    const bool stable =
        Eigen::EigenSolver<Matrix<Scalar>>(dd.drift, false).eigenvalues().real().maxCoeff()
        < Scalar(0);
    const bool pure_drift = dd.diffusion.template lpNorm<Eigen::Infinity>() == Scalar(0);

    Matrix<Scalar> sigma_inf;
    if (stable) sigma_inf = steady_state(dd).cov;

    Trajectory<Scalar> traj;
    traj.times = t_grid;
    traj.states.reserve(t_grid.size());
    traj.spectra.reserve(t_grid.size());
    for (const Scalar t : t_grid) {
        GaussianState<Scalar> state;
        const Matrix<Scalar> prop = (dd.drift * t).exp();
        state.mean = prop * initial.mean;
        if (stable) {
            state.cov = sigma_inf
                        + prop * (initial.cov - sigma_inf) * prop.transpose();
        } else if (pure_drift) {
            state.cov = prop * initial.cov * prop.transpose();
        } else {
            state.cov = detail::propagate_augmented(dd.drift, dd.diffusion,
                                                    initial.cov, t);
        }
        state.cov = ((state.cov + state.cov.transpose()) / Scalar(2)).eval();
        const Vector<Scalar> nu = symplectic_eigenvalues(state.cov);
        if (nu.minCoeff() < Scalar(1) - tol)
            throw numerical_error("evolve: trajectory state violates physicality");
        traj.spectra.push_back(nu);
        traj.states.push_back(std::move(state));
    }
    return traj;
}

// Closed-system (Gamma = 0) energy gain from the thermal initial state:
//   dE(t) = mu lambda^2 (1+2N_A) f(z) t^2,  z = (lambda^2 - mu^2) t^2,
// f(z) = sinh^2(sqrt z)/z for z > 0, sin^2(sqrt -z)/(-z) for z < 0, f(0) = 1.
template <typename Scalar>
Scalar closed_energy_analytic(Scalar t, const DriveSpec<Scalar>& drive, Scalar n_a) {
    drive.validate();
    const Scalar z = (drive.lambda * drive.lambda - drive.mu * drive.mu) * t * t;
    Scalar f;
    if (std::abs(z) < Scalar(1e-6)) {
        f = Scalar(1) + z / Scalar(3) + Scalar(2) * z * z / Scalar(45);
    } else if (z > Scalar(0)) {
        const Scalar s = std::sinh(std::sqrt(z));
        f = s * s / z;
    } else {
        const Scalar s = std::sin(std::sqrt(-z));
        f = s * s / (-z);
    }
    return drive.mu * drive.lambda * drive.lambda * (Scalar(1) + Scalar(2) * n_a) * t * t * f;
}

} // namespace qbat
