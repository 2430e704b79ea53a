#pragma once

#include <vector>

#include "speclab/periodic_function.hpp"
#include "speclab/region.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Polynomial-in-xi symbol p(x, xi) = sum_{k<=m} c_k(x) xi^k on the cylinder
// T*S^1, with periodic coefficient functions on a shared grid.
struct Symbol1D {
    std::vector<PeriodicFunction> coeffs; // c_0 .. c_m
    bool analytic_hint = true;

    Symbol1D(std::vector<PeriodicFunction> c, bool analytic = true);

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int grid_size() const { return coeffs.front().grid_size(); }

    // Largest Fourier bandwidth over all coefficients.
    int bandwidth(double tol = 1e-14) const;

    // max over grid nodes of sum_k |c_k(x)|
    double coeff_sum_max() const;
};

cplx eval_symbol(const Symbol1D& p, double x, double xi);

// (1/i){p, conj(p)}(x, xi); the imaginary residue is checked against 1e-12
// and discarded.
double bracket(const Symbol1D& p, double x, double xi);

double xi_cut_default(const Symbol1D& p, const RegionSpec& region);

// Midpoint-rule measure of {(x, xi) in [0,2pi) x [-xi_cut, xi_cut] :
// p(x, xi) in region}, with 4x4 sub-sampling of boundary cells.
double weyl_volume(const Symbol1D& p, const RegionSpec& region, double xi_cut,
                   int resolution);

// Built-in symbols used by the CLI and the experiment fixtures.
Symbol1D make_exp_ix(cplx scale = 1.0, int grid_size = 33);             // xi + scale*e^{ix}
Symbol1D make_shifted_cos(cplx shift, double amp, int grid_size = 33);  // xi + shift + i*amp*cos x
Symbol1D make_schrodinger_iv(double amp, int grid_size = 33);           // xi^2 + i*amp*cos x

} // namespace speclab
