#pragma once

#include <functional>

#include "speclab/types.hpp"

namespace speclab {

// A smooth 2*pi-periodic function held as samples on the odd uniform grid
// x_j = 2*pi*j/(2K+1), j = 0..2K, together with its Fourier coefficients
// indexed -K..K.  The two representations are kept consistent; evaluation
// between nodes is trigonometric interpolation (exact for band-limited
// functions).
class PeriodicFunction {
public:
    explicit PeriodicFunction(Vec values);
    static PeriodicFunction from_fourier(Vec coeffs);
    static PeriodicFunction from_callable(int grid_size, const std::function<cplx(double)>& f);

    int grid_size() const { return static_cast<int>(values_.size()); }
    int max_mode() const { return (grid_size() - 1) / 2; }

    const Vec& values() const { return values_; }
    const Vec& fourier() const { return fourier_; }

    // n-th Fourier coefficient; zero outside -K..K.
    cplx coeff(int n) const;

    double grid_node(int j) const;

    cplx eval(double x) const;
    cplx derivative_at(double x) const;
    PeriodicFunction derivative() const;

    cplx mean() const { return coeff(0); }

    // Largest |n| with |coeff(n)| > tol * max|coeff|; 0 for constants.
    int bandwidth(double tol = 1e-14) const;

    // Exact spectral resampling onto a finer (or coarser) odd grid.
    PeriodicFunction resampled(int new_grid_size) const;

    double max_abs() const { return values_.cwiseAbs().maxCoeff(); }

    bool same_function(const PeriodicFunction& other, double tol = 1e-12) const;

private:
    PeriodicFunction() = default;
    void values_to_fourier();
    void fourier_to_values();

    Vec values_;   // samples at grid_node(j)
    Vec fourier_;  // coefficient n stored at index n + K
};

} // namespace speclab
