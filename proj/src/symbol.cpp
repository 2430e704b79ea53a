#include "speclab/symbol.hpp"

#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

Symbol1D::Symbol1D(std::vector<PeriodicFunction> c, bool analytic)
    : coeffs(std::move(c)), analytic_hint(analytic) {
    if (coeffs.empty()) throw ConfigError("symbol needs at least c_0");
    const int g = coeffs.front().grid_size();
    for (const auto& f : coeffs)
        if (f.grid_size() != g)
            throw ConfigError("symbol coefficients must share one grid size");
    if (order() >= 1) {
        // classical ellipticity: leading coefficient nowhere zero on the grid
        const auto& lead = coeffs.back().values();
        for (Eigen::Index j = 0; j < lead.size(); ++j)
            if (std::abs(lead(j)) == 0.0)
                throw HypothesisError("leading symbol coefficient vanishes on the grid");
    }
}

int Symbol1D::bandwidth(double tol) const {
    int band = 0;
    for (const auto& f : coeffs) band = std::max(band, f.bandwidth(tol));
    return band;
}

double Symbol1D::coeff_sum_max() const {
    const int n = grid_size();
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (const auto& f : coeffs) s += std::abs(f.values()(j));
        best = std::max(best, s);
    }
    return best;
}

cplx eval_symbol(const Symbol1D& p, double x, double xi) {
    cplx acc = 0.0;
    double pw = 1.0;
    for (const auto& c : p.coeffs) {
        acc += c.eval(x) * pw;
        pw *= xi;
    }
    return acc;
}

double bracket(const Symbol1D& p, double x, double xi) {
    // p_xi analytically in xi, p_x by spectral differentiation.
    cplx p_xi = 0.0, p_x = 0.0;
    double pw = 1.0;
    for (int k = 0; k <= p.order(); ++k) {
        p_x += p.coeffs[k].derivative_at(x) * pw;
        if (k + 1 <= p.order())
            p_xi += static_cast<double>(k + 1) * p.coeffs[k + 1].eval(x) * pw;
        pw *= xi;
    }
    const cplx value = (p_xi * std::conj(p_x) - p_x * std::conj(p_xi)) / kI;
    const double scale = std::max(1.0, std::abs(value));
    if (std::abs(value.imag()) > 1e-12 * scale)
        throw NumericError("Poisson bracket has non-real residue");
    return value.real();
}

double xi_cut_default(const Symbol1D& p, const RegionSpec& region) {
    return 2.0 * (region.max_abs() + p.coeff_sum_max());
}

double weyl_volume(const Symbol1D& p, const RegionSpec& region, double xi_cut,
                   int resolution) {
    if (resolution < 2) throw ConfigError("weyl_volume resolution must be >= 2");
    if (!(xi_cut > 0)) throw ConfigError("xi_cut must be positive");

    const int nx = resolution, nxi = resolution;
    const double dx = kTwoPi / nx;
    const double dxi = 2.0 * xi_cut / nxi;
    const double cell = dx * dxi;

    double volume = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x0 = i * dx;
        for (int j = 0; j < nxi; ++j) {
            const double xi0 = -xi_cut + j * dxi;
            // corners + center decide full/empty/boundary
            int inside = 0;
            const double xs[2] = {x0, x0 + dx};
            const double xis[2] = {xi0, xi0 + dxi};
            for (double xc : xs)
                for (double xic : xis)
                    if (region.contains(eval_symbol(p, xc, xic))) ++inside;
            bool center_in = region.contains(eval_symbol(p, x0 + 0.5 * dx, xi0 + 0.5 * dxi));
            if (inside == 4 && center_in) {
                volume += cell;
            } else if (inside == 0 && !center_in) {
                // empty
            } else {
                if (j == 0 || j == nxi - 1)
                    throw NumericError(
                        "xi_cut insufficient: symbol meets the region at |xi| = xi_cut");
                int hits = 0;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) {
                        const double xs2 = x0 + (a + 0.5) * dx / 4.0;
                        const double xis2 = xi0 + (b + 0.5) * dxi / 4.0;
                        if (region.contains(eval_symbol(p, xs2, xis2))) ++hits;
                    }
                volume += cell * hits / 16.0;
            }
        }
    }
    // ellipticity guard: the top and bottom rows must be fully outside
    for (int i = 0; i < nx; ++i) {
        if (region.contains(eval_symbol(p, (i + 0.5) * dx, xi_cut)) ||
            region.contains(eval_symbol(p, (i + 0.5) * dx, -xi_cut)))
            throw NumericError("xi_cut insufficient: region reached at the xi boundary");
    }
    return volume;
}

Symbol1D make_exp_ix(cplx scale, int grid_size) {
    auto g = PeriodicFunction::from_callable(
        grid_size, [scale](double x) { return scale * std::polar(1.0, x); });
    auto one = PeriodicFunction::from_callable(grid_size, [](double) { return cplx(1.0); });
    return Symbol1D({std::move(g), std::move(one)}, true);
}

Symbol1D make_shifted_cos(cplx shift, double amp, int grid_size) {
    auto g = PeriodicFunction::from_callable(
        grid_size, [shift, amp](double x) { return shift + kI * amp * std::cos(x); });
    auto one = PeriodicFunction::from_callable(grid_size, [](double) { return cplx(1.0); });
    return Symbol1D({std::move(g), std::move(one)}, true);
}

Symbol1D make_schrodinger_iv(double amp, int grid_size) {
    auto v = PeriodicFunction::from_callable(
        grid_size, [amp](double x) { return kI * amp * std::cos(x); });
    auto zero = PeriodicFunction::from_callable(grid_size, [](double) { return cplx(0.0); });
    auto one = PeriodicFunction::from_callable(grid_size, [](double) { return cplx(1.0); });
    return Symbol1D({std::move(v), std::move(zero), std::move(one)}, true);
}

} // namespace speclab
