#pragma once

#include <complex>
#include <Eigen/Dense>

namespace speclab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cplx kI{0.0, 1.0};

// Accuracy contracts of the dense kernel, kept in one place.
struct KernelTolerances {
    double eig_residual = 1e-9;     // backward-error certificate, n <= 1000
    double svd_residual = 1e-10;    // ||A v - s u|| <= svd_residual * ||A||_F
    double vector_norm = 1e-12;     // unit-vector slack
    double hermitian_skew = 1e-12;  // ||A - A^H||_F / ||A||_F gate
    double hermitian_residual = 1e-10;
    double condition_max = 1e14;    // solve() refusal threshold
    int svd_full_max_n = 512;       // full bidiagonalization below, inverse iteration above
    int invit_max_steps = 50;
    int eig_max_n = 4096;
};

inline KernelTolerances& kernel_tolerances() {
    static KernelTolerances tols;
    return tols;
}

} // namespace speclab
