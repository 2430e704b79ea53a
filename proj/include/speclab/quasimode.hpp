#pragma once

#include <ostream>

#include "speclab/fourier_operator.hpp"
#include "speclab/periodic_function.hpp"
#include "speclab/types.hpp"

namespace speclab {

// The two solutions of Im g(x) = Im z for a g whose imaginary part has one
// maximum and one minimum.  Conventions: Im g'(x_plus) < 0,
// Im g'(x_minus) > 0, xi_pm = Re z - Re g(x_pm), so p(x_pm, xi_pm) = z.
struct CrossingPair {
    cplx z;
    double x_plus, x_minus;
    double xi_plus, xi_minus;
    double bracket_plus; // (1/i){p, conj p} at (x_plus, xi_plus), positive
    double bracket_minus;
};

CrossingPair find_crossings(const PeriodicFunction& g, cplx z);

// Localized approximate null vector of P - z for P = hD + g:
//   e(x) = a * cut(x - x_plus) * exp(i*phase(x)/h),
//   phase(x) = integral from x_plus to x of (z - g),
// normalized in l^2 and stored as Fourier coefficients in the 2K+1 basis.
struct WkbQuasimode {
    cplx z;
    double h;
    double x_plus;
    double cutoff_radius;
    int K;
    Vec phase;  // phase samples on the operator grid (0 outside the cutoff)
    Vec vector; // unit Fourier coefficient vector
};

// cutoff_radius <= 0 selects the default (see implementation note).
WkbQuasimode build_quasimode(const PeriodicFunction& g, cplx z, double h, int K,
                             double cutoff_radius = 0.0);

// ||(P_K - z) vector||; errors out when op and qm disagree on h or K.
double residual(const FourierOperator& op, const WkbQuasimode& qm);

// CSV profile: "x,re,im,abs" on the operator grid.
void quasimode_to_csv(const WkbQuasimode& qm, std::ostream& os);

} // namespace speclab
