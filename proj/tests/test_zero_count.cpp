#include <doctest.h>

#include <cmath>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/rng.hpp"
#include "speclab/zero_count.hpp"

using namespace speclab;

namespace {

// product over a square lattice of pitch sqrt(pi h) clipped to a margin
// around the region; zero density matches Laplacian(|z|^2/2) / (2 pi h)
struct LatticeFamily {
    std::vector<cplx> roots;
    LatticeFamily(double h, const RegionSpec& region, double margin) {
        const double pitch = std::sqrt(kPi * h);
        double a, b, c, d;
        region.bounding_box(a, b, c, d);
        for (long i = std::lround((a - margin) / pitch) - 1;; ++i) {
            const double x = i * pitch;
            if (x > b + margin) break;
            if (x < a - margin) continue;
            for (long j = std::lround((c - margin) / pitch) - 1;; ++j) {
                const double y = j * pitch;
                if (y > d + margin) break;
                if (y < c - margin) continue;
                roots.emplace_back(x, y);
            }
        }
    }
    cplx operator()(cplx z) const {
        cplx prod = 1.0;
        for (const auto& w : roots) prod *= (z - w);
        return prod;
    }
    long count_in(const RegionSpec& region) const {
        long n = 0;
        for (const auto& w : roots)
            if (region.contains(w)) ++n;
        return n;
    }
};

std::vector<cplx> boundary_cover(const RegionSpec& region, double spacing) {
    std::vector<cplx> pts;
    const auto& v = region.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        cplx a = v[i], b = v[(i + 1) % v.size()];
        const int m = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) / spacing)));
        for (int s = 0; s < m; ++s)
            pts.push_back(a + (b - a) * (static_cast<double>(s) / m));
    }
    return pts;
}

} // namespace

TEST_CASE("argument principle on closed forms") {
    ContourSpec circle = ContourSpec::circle(0.0, 1.0);
    CHECK(argument_count([](cplx z) { return z * z; }, circle).count == 2);
    CHECK(argument_count([](cplx) { return cplx(3.0, 0.0); }, circle).count == 0);
    auto f = [](cplx z) { return (z - cplx(0.3, 0)) * (z + cplx(0, 0.4)) * std::exp(z); };
    CHECK(argument_count(f, circle).count == 2);
}

TEST_CASE("count is invariant under refinement and zero-free factors") {
    auto f = [](cplx z) { return (z - cplx(0.2, 0.1)) * (z + cplx(0.5, -0.3)) *
                                 (z - cplx(-0.1, -0.6)); };
    long base = argument_count(f, ContourSpec::circle(0.0, 1.0, 32)).count;
    CHECK(base == 3);
    CHECK(argument_count(f, ContourSpec::circle(0.0, 1.0, 64)).count == base);
    CHECK(argument_count(f, ContourSpec::circle(0.0, 1.0, 128)).count == base);

    auto g = [&f](cplx z) {
        const cplx expo = cplx(0.7, -0.3) * z * z + cplx(0.0, 1.1) * z + cplx(0.2, 0.4);
        return f(z) * std::exp(expo);
    };
    CHECK(argument_count(g, ContourSpec::circle(0.0, 1.0, 64)).count == base);
}

TEST_CASE("zero on the contour is refused") {
    auto f = [](cplx z) { return z - cplx(1.0, 0.0); };
    CHECK_THROWS_AS(argument_count(f, ContourSpec::circle(0.0, 1.0, 64)),
                    NumericError);
}

TEST_CASE("jensen bound dominates counts") {
    // far-away zero: nonnegative bound, zero count
    auto far = [](cplx z) { return z - cplx(10.0, 0.0); };
    double bound = jensen_bound(far, 0.0, 0.5, 1.0);
    CHECK(bound >= 0.0);
    CHECK(argument_count(far, ContourSpec::circle(0.0, 0.5, 32)).count <= bound);

    // triple zero inside the inner disc
    const cplx z0(0.3, -0.2);
    const double r = 0.4;
    auto triple = [&](cplx z) { return std::pow(z - z0 - r / 2, 3.0); };
    CHECK(jensen_bound(triple, z0, r, 2 * r) >= 3.0);

    // five packed zeros
    auto packed = [&](cplx z) {
        cplx prod = 1.0;
        for (int k = 0; k < 5; ++k)
            prod *= (z - z0 - std::polar(0.3 * r, kTwoPi * k / 5.0));
        return prod;
    };
    CHECK(jensen_bound(packed, z0, r, 2 * r) >= 5.0);
    CHECK(jensen_bound(packed, z0, r, 2 * r) >=
          argument_count(packed, ContourSpec::circle(z0, r, 64)).count);

    CHECK_THROWS_AS(jensen_bound([](cplx z) { return z; }, 0.0, 0.5, 1.0),
                    NumericError);
}

TEST_CASE("laplacian mass: interior quadrature fixtures") {
    RegionSpec square = RegionSpec::rectangle(0, 1, 0, 1);
    auto quad = [](cplx z) { return 0.5 * std::norm(z); };
    CHECK(delta_phi_mass(quad, square, 64) == doctest::Approx(2.0).epsilon(0.02));

    auto harmonic = [](cplx z) { return (z * z * z).real(); };
    CHECK(std::abs(delta_phi_mass(harmonic, square, 64)) < 1e-6);

    // mollified point masses: integral ~ 2 pi h * #points
    const double h = 0.03, sigma = 0.01;
    std::vector<cplx> pts = {cplx(0.3, 0.4), cplx(0.62, 0.31), cplx(0.5, 0.77)};
    auto logs = [&](cplx z) {
        double acc = 0;
        for (const auto& w : pts) acc += 0.5 * std::log(std::norm(z - w) + sigma * sigma);
        return h * acc;
    };
    CHECK(delta_phi_mass(logs, square, 400) ==
          doctest::Approx(kTwoPi * h * pts.size()).epsilon(0.03));
}

TEST_CASE("boundary flux agrees with interior laplacian on smooth fields") {
    RegionSpec square = RegionSpec::rectangle(-0.5, 0.7, -0.4, 0.6);
    auto phi = [](cplx z) {
        return 0.5 * std::norm(z) + 0.3 * (z * z * z).real() + std::sin(z.real());
    };
    const double flux = boundary_flux_mass(phi, square, 1e-4);
    const double interior = delta_phi_mass(phi, square, 256);
    CHECK(flux == doctest::Approx(interior).epsilon(0.02));
}

TEST_CASE("hager verification: trivial and lattice families") {
    // u == 1, phi == 0
    RegionSpec square = RegionSpec::rectangle(0, 1, 0, 1);
    auto one = [](cplx) { return cplx(1.0, 0.0); };
    auto zero = [](cplx) { return 0.0; };
    ZeroCountReport r =
        hager_verify(one, zero, square, 0.1, 0.04, boundary_cover(square, 0.15));
    CHECK(r.count == 0);
    CHECK(std::abs(r.mass) < 1e-8);
    CHECK(r.deviation < 1e-8);

    // lattice family at the spec anchor h = 0.01
    const double h = 0.01;
    RegionSpec gamma = RegionSpec::rectangle(0.013, 1.013, 0.027, 1.027);
    LatticeFamily u(h, gamma, 0.35);
    auto phi = [](cplx z) { return 0.5 * std::norm(z); };
    const double eps = h;
    ZeroCountReport lat = hager_verify([&u](cplx z) { return u(z); }, phi, gamma, h,
                                       eps, boundary_cover(gamma, std::sqrt(eps) * 0.9),
                                       5.0);
    CHECK(lat.count == u.count_in(gamma));
    CHECK(lat.mass == doctest::Approx(1.0 / (kPi * h)).epsilon(0.02));
    CHECK(lat.deviation <= 5.0 * std::sqrt(h) / h);

    // boundary spacing precondition
    CHECK_THROWS_AS(hager_verify(one, zero, square, h, eps,
                                 boundary_cover(square, 10 * std::sqrt(eps))),
                    ConfigError);
}

TEST_CASE("lattice deviation stays inside the calibrated band across h") {
    auto phi = [](cplx z) { return 0.5 * std::norm(z); };
    for (double h : {0.04, 0.02, 0.01}) {
        RegionSpec gamma = RegionSpec::rectangle(0.013, 1.013, 0.027, 1.027);
        LatticeFamily u(h, gamma, 0.35);
        const double eps = h;
        ZeroCountReport r = hager_verify([&u](cplx z) { return u(z); }, phi, gamma,
                                         h, eps,
                                         boundary_cover(gamma, std::sqrt(eps) * 0.9),
                                         5.0);
        CHECK(r.deviation <= r.bound);
        CHECK(std::abs(r.winding_total - static_cast<double>(r.count)) <= 0.1);
    }
}
