#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "speclab/region.hpp"
#include "speclab/types.hpp"

namespace speclab {

using HoloFn = std::function<cplx(cplx)>;
using FieldFn = std::function<double(cplx)>;

// Closed evaluation contour.  Nodes are ordered positively; the last node
// connects back to the first.  Segments are refined adaptively until the
// phase increment between neighbouring samples stays below pi/2 and the
// modulus stays above min_modulus_guard.
struct ContourSpec {
    std::vector<cplx> nodes;
    int refinement_limit = 16;
    double min_modulus_guard = 1e-280;

    static ContourSpec circle(cplx center, double radius, int n = 64);
    static ContourSpec from_region(const RegionSpec& region, int per_edge = 16);
};

struct ZeroCountReport {
    long count = 0;
    double winding_total = 0.0; // pre-rounding winding number
    int refinement_used = 0;
    bool has_weyl_compare = false;
    double mass = 0.0;      // (2 pi h)^{-1} * integral of Laplacian(phi)
    double bound = 0.0;     // C_cal * sqrt(eps) / h
    double deviation = 0.0; // |count - mass|
    std::string flags;
};

// Total argument variation of f along the contour by unwrapped phase
// tracking; count = round(winding).  Derivative-free.
ZeroCountReport argument_count(const HoloFn& f, const ContourSpec& contour);

// Jensen bound for the number of zeros in |z - z0| <= r given
// |f| <= M on |z - z0| = R:  (ln M - ln|f(z0)|) / ln(R/r).
// Pass M <= 0 to sample the maximum on the outer circle.
double jensen_bound(const HoloFn& f, cplx z0, double r, double R, double M = -1.0,
                    int samples = 256);

// Counts zeros in the region and compares with the mass of Laplacian(phi):
//   count from the argument principle on the boundary,
//   mass  from the outward-flux form of the Green identity,
// checking the exponential-envelope hypotheses on the way (violations are
// recorded in flags, not fatal).
ZeroCountReport hager_verify(const HoloFn& f, const FieldFn& phi,
                             const RegionSpec& region, double h, double eps,
                             const std::vector<cplx>& boundary_points,
                             double C_cal = 5.0);

// Interior five-point-Laplacian quadrature of integral(Laplacian(phi)) over
// the region; cross-check for the boundary-flux route above.
double delta_phi_mass(const FieldFn& phi, const RegionSpec& region, int resolution);

// Boundary-flux evaluation of integral(Laplacian(phi)) over the region,
// with centered normal differences at the given step.
double boundary_flux_mass(const FieldFn& phi, const RegionSpec& region, double step);

void report_to_csv(const ZeroCountReport& r, std::ostream& os, bool header = true);

} // namespace speclab
