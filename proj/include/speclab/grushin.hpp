#pragma once

#include <ostream>

#include "speclab/fourier_operator.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Per-z reduction data for a matrix P: smallest singular pair (t0, t1),
// the gauge-fixed vectors e0 (right) and f0 (left), and the scalar
// effective function E_mp whose zeros are the eigenvalues of P.
//
// Gauge: the largest-magnitude entry of e0 is made real positive; f0
// inherits its phase through f0 = (P - z) e0 / t0.
struct GrushinData {
    cplx z;
    double t0 = 0.0, t1 = 0.0;
    Vec e0, f0;
    cplx E_mp = 0.0;
    double block_residual = 0.0;
    bool has_effective = false;
};

// t0, t1 from the two smallest eigenvalues of (P-z)^H (P-z); t0 is then
// re-evaluated as ||(P-z) e0|| in unsquared arithmetic.
GrushinData singular_pair(const Mat& P, cplx z);
GrushinData singular_pair(const FourierOperator& op, cplx z);

// Adds E_mp by solving the bordered system
//   [ P - z   f0 ] [ E_plus ]   [ 0 ]
//   [ e0^H    0  ] [ E_mp   ] = [ 1 ],
// a genuine cross-check of |E_mp| = t0.
GrushinData effective_function(const Mat& P, cplx z);
GrushinData effective_function(const FourierOperator& op, cplx z);

// Effective function at z with a frozen probe pair (e0, f0) taken at some
// reference point.  With the probe held fixed the map z -> E_mp is a ratio
// of holomorphic functions of z whose zeros inside the probe's validity
// neighborhood are exactly the eigenvalues of P, which makes it suitable
// for argument-principle counting.
cplx effective_at(const Mat& P, cplx z, const Vec& e0_probe, const Vec& f0_probe,
                  double* block_residual = nullptr);

// Five-point d-bar stencil: dbar E_mp + f * E_mp should vanish for the
// smooth gauge-fixed family, with
//   f(z) = (e0 | d_z e0) + (dbar f0 | f0).
struct DbarSample {
    cplx z;
    double step;
    cplx f_estimate;
    cplx dEmp_dzbar;
    double identity_residual; // |dbar E_mp + f E_mp|
    double scale;             // max(|dbar E_mp|, |f E_mp|)
};

DbarSample dbar_residual(const Mat& P, cplx z, double step);

// Compares Re 4 d_z f against (2/h) (1/B_plus - 1/B_minus) with B_pm the
// Poisson bracket (1/i){p, conj p} at the two crossing points; the two agree
// up to an O(1) term.  The op must be a model operator hD + g.
struct SymplecticCheck {
    double lhs; // Re 4 d_z f by finite differences of f
    double rhs; // (2/h)(1/B_plus - 1/B_minus)
};

SymplecticCheck symplectic_density_check(const FourierOperator& op,
                                         const Symbol1D& symbol, cplx z,
                                         double step);

// CSV row "re,im,t0,t1,reEmp,imEmp".
void grushin_to_csv_row(const GrushinData& d, std::ostream& os);

} // namespace speclab
