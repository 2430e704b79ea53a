#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "speclab/region.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Desk-scale Schroedinger demo on the 2-torus: P = -h^2 Laplacian + V(x)
// in the Fourier basis e^{(k1,k2)} = (2 pi)^{-1} e^{i k.x}, |k|_inf <= K2,
// perturbed by a random multiplicative potential
//   q(x) = sum_{|k|_inf <= floor(L/h)} alpha_k (2 pi)^{-1} e^{i k.x}.
// The potential V is given by its Fourier coefficients and must be even
// (V(-k) = V(k)) so that the symbol satisfies p(x,-xi) = p(x,xi).
struct Torus2DConfig {
    int K2 = 10;
    double h = 0.15;
    double L = 1.0;
    double delta = 1e-2;
    int trials = 10;
    uint64_t seed = 1;
    RegionSpec region = RegionSpec::rectangle(0.5, 1.5, -0.5, 0.5);
    std::map<std::pair<int, int>, cplx> v_coeffs; // plain Fourier coefficients
    int volume_resolution = 400;
};

// V = i * amp * (cos x1 + cos x2)
std::map<std::pair<int, int>, cplx> torus_potential_icos(double amp = 1.0);

Mat torus_operator(const Torus2DConfig& config);

// Phase-space volume of p^{-1}(region) for p = |xi|^2 + V(x): the xi-part
// is radial, so the 4-D integral reduces to a 2-D quadrature in x with an
// exact annulus area per node.
double torus_volume4d(const Torus2DConfig& config);

struct Torus2DTrial {
    int trial = 0;
    long count = 0;
    long ring_count = 0;
    uint64_t seed = 0;
};

struct Torus2DResult {
    double h = 0.0, delta = 0.0;
    double prediction = 0.0; // volume / (2 pi h)^2
    long baseline_count = 0; // delta = 0
    std::vector<Torus2DTrial> trials;
    double mean_count = 0.0, median_count = 0.0;
};

Torus2DResult torus2d_demo(const Torus2DConfig& config, int workers = 1);

// CSV schema matches the 1-D experiment.
void torus_trials_to_csv(const Torus2DResult& r, const Torus2DConfig& c,
                         std::ostream& os);

} // namespace speclab
