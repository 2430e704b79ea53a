#include <doctest.h>

#include <cmath>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/rng.hpp"
#include "speclab/torus2d.hpp"

using namespace speclab;

TEST_CASE("torus operator assembles the fixture potential") {
    Torus2DConfig c;
    c.K2 = 3;
    c.v_coeffs = torus_potential_icos(1.0);
    Mat P = torus_operator(c);
    const int side = 7;
    CHECK(P.rows() == side * side);
    auto idx = [side](int k1, int k2) { return (k1 + 3) * side + (k2 + 3); };
    // diagonal: h^2 |k|^2
    CHECK(std::abs(P(idx(2, -1), idx(2, -1)) - cplx(c.h * c.h * 5.0, 0)) < 1e-14);
    // one-mode shifts carry i/2
    CHECK(std::abs(P(idx(1, 0), idx(0, 0)) - cplx(0, 0.5)) < 1e-14);
    CHECK(std::abs(P(idx(0, -1), idx(0, 0)) - cplx(0, 0.5)) < 1e-14);
    CHECK(std::abs(P(idx(1, 1), idx(0, 0))) == 0.0);
}

TEST_CASE("odd potentials violate the symbol symmetry") {
    Torus2DConfig c;
    c.v_coeffs[{1, 0}] = cplx(0, 0.5); // no (-1, 0) partner
    CHECK_THROWS_AS(torus_operator(c), HypothesisError);
}

TEST_CASE("reduced 4-D volume matches a semi-analytic oracle") {
    Torus2DConfig c;
    c.v_coeffs = torus_potential_icos(1.0);
    c.volume_resolution = 400;
    const double fast = torus_volume4d(c);

    // vol = pi * (b - a) * area{x : c < cos x1 + cos x2 < d}; the inner
    // x2-measure has a closed form via arccos
    auto clamp_acos = [](double v) { return std::acos(std::clamp(v, -1.0, 1.0)); };
    const double lo = -0.5, hi = 0.5;
    const int n1 = 20000;
    double area = 0.0;
    for (int i = 0; i < n1; ++i) {
        const double c1 = std::cos(kTwoPi * (i + 0.5) / n1);
        // measure{x2 in [0, 2pi): cos x2 in (lo - c1, hi - c1)}
        const double m = 2.0 * (clamp_acos(lo - c1) - clamp_acos(hi - c1));
        area += m * (kTwoPi / n1);
    }
    const double oracle = kPi * (1.5 - 0.5) * area;
    CHECK(fast == doctest::Approx(oracle).epsilon(0.01));
}

TEST_CASE("demo counts concentrate near the volume prediction") {
    Torus2DConfig c;
    c.v_coeffs = torus_potential_icos(1.0); // defaults: K2 = 10, h = 0.15
    c.trials = 2;
    c.seed = 5;
    Torus2DResult r = torus2d_demo(c, 1);
    CHECK(r.prediction > 0);
    for (const auto& t : r.trials)
        CHECK(std::abs(t.count - r.prediction) <= 0.35 * r.prediction);
    CHECK(r.baseline_count > 0);
}

TEST_CASE("standard error of the mean shrinks like 1/sqrt(trials)") {
    Torus2DConfig c;
    c.K2 = 6;
    c.v_coeffs = torus_potential_icos(1.0);
    c.seed = 11;
    auto stderr_of = [&](int trials) {
        Torus2DConfig cc = c;
        cc.trials = trials;
        Torus2DResult r = torus2d_demo(cc, 1);
        double mean = r.mean_count, var = 0;
        for (const auto& t : r.trials) var += (t.count - mean) * (t.count - mean);
        var /= (trials - 1);
        return std::sqrt(var / trials);
    };
    const double se12 = stderr_of(12);
    const double se48 = stderr_of(48);
    // quadrupling the trials should halve the standard error (within noise)
    CHECK(se48 / se12 > 0.3);
    CHECK(se48 / se12 < 0.75);
}
