#include "speclab/quasimode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"

namespace speclab {

namespace {

double wrap_pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t > kPi) t -= kTwoPi;
    if (t <= -kPi) t += kTwoPi;
    return t;
}

double wrap_2pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

// C^infinity plateau cutoff: 1 for |s| <= plateau, 0 for |s| >= 1, glued by
// the exp(-1/u) transition profile.
double plateau_cutoff(double s, double plateau) {
    s = std::abs(s);
    if (s <= plateau) return 1.0;
    if (s >= 1.0) return 0.0;
    auto f = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
    double u = (1.0 - s) / (1.0 - plateau);
    return f(u) / (f(u) + f(1.0 - u));
}

constexpr double kPlateauFraction = 2.0 / 3.0;

double newton_refine(const PeriodicFunction& g, double target, double x) {
    for (int it = 0; it < 60; ++it) {
        double val = g.eval(x).imag() - target;
        double der = g.derivative_at(x).imag();
        if (der == 0.0) break;
        double step = val / der;
        x -= step;
        if (std::abs(step) < 1e-15) break;
    }
    return wrap_2pi(x);
}

} // namespace

CrossingPair find_crossings(const PeriodicFunction& g, cplx z) {
    const int fine = std::max(4096, 16 * g.grid_size());
    std::vector<double> im_g(fine), im_gp(fine);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int j = 0; j < fine; ++j) {
        double x = kTwoPi * j / fine;
        im_g[j] = g.eval(x).imag();
        im_gp[j] = g.derivative_at(x).imag();
        lo = std::min(lo, im_g[j]);
        hi = std::max(hi, im_g[j]);
    }
    if (!(z.imag() > lo && z.imag() < hi))
        throw HypothesisError("Im z outside the open range of Im g");

    int critical = 0;
    for (int j = 0; j < fine; ++j)
        if ((im_gp[j] > 0) != (im_gp[(j + 1) % fine] > 0)) ++critical;
    if (critical != 2)
        throw HypothesisError("Im g must have exactly one maximum and one minimum");

    std::vector<double> roots;
    for (int j = 0; j < fine; ++j) {
        double a = im_g[j] - z.imag();
        double b = im_g[(j + 1) % fine] - z.imag();
        if ((a > 0) != (b > 0)) {
            // bisection bracket, then Newton with the spectral derivative
            double xl = kTwoPi * j / fine, xr = kTwoPi * (j + 1) / fine;
            for (int it = 0; it < 40; ++it) {
                double xm = 0.5 * (xl + xr);
                double vm = g.eval(xm).imag() - z.imag();
                if ((vm > 0) == (a > 0)) xl = xm; else xr = xm;
            }
            roots.push_back(newton_refine(g, z.imag(), 0.5 * (xl + xr)));
        }
    }
    if (roots.size() != 2)
        throw HypothesisError("level set Im g = Im z has " +
                              std::to_string(roots.size()) + " crossings, expected 2");

    CrossingPair cp;
    cp.z = z;
    double d0 = g.derivative_at(roots[0]).imag();
    if (d0 < 0) {
        cp.x_plus = roots[0];
        cp.x_minus = roots[1];
    } else {
        cp.x_plus = roots[1];
        cp.x_minus = roots[0];
    }
    cp.xi_plus = z.real() - g.eval(cp.x_plus).real();
    cp.xi_minus = z.real() - g.eval(cp.x_minus).real();
    cp.bracket_plus = -2.0 * g.derivative_at(cp.x_plus).imag();
    cp.bracket_minus = -2.0 * g.derivative_at(cp.x_minus).imag();

    if (!(cp.bracket_plus > 0) || !(cp.bracket_minus < 0))
        throw HypothesisError("crossing classification failed (degenerate Im g')");
    if (std::abs(g.eval(cp.x_plus).imag() - z.imag()) > 1e-10 ||
        std::abs(g.eval(cp.x_minus).imag() - z.imag()) > 1e-10)
        throw NumericError("crossing refinement did not converge");
    return cp;
}

WkbQuasimode build_quasimode(const PeriodicFunction& g, cplx z, double h, int K,
                             double cutoff_radius) {
    if (!(h > 0)) throw ConfigError("build_quasimode: h must be positive");
    if (K < 1) throw ConfigError("build_quasimode: K must be >= 1");
    CrossingPair cp = find_crossings(g, z);

    const double arc1 = wrap_2pi(cp.x_minus - cp.x_plus);
    const double arc2 = kTwoPi - arc1;
    const double min_arc = std::min(arc1, arc2);
    if (cutoff_radius <= 0.0)
        cutoff_radius = 0.45 * min_arc;
    if (!(cutoff_radius < 0.5 * min_arc))
        throw ConfigError("cutoff_radius must stay below half the shorter arc to x_minus");

    const int n = 2 * K + 1;
    Vec phase(n), values(n);
    // antiderivative of z - g along the line through x_plus, anchored so the
    // phase vanishes at x_plus; single-valued on (-pi, pi] around x_plus
    const cplx g0 = g.coeff(0);
    const int gk = g.max_mode();
    auto phi = [&](double t) {
        cplx acc = (z - g0) * t;
        for (int m = -gk; m <= gk; ++m) {
            if (m == 0) continue;
            cplx c = g.coeff(m) / cplx(0.0, m);
            acc -= c * (std::polar(1.0, m * (cp.x_plus + t)) - std::polar(1.0, m * cp.x_plus));
        }
        return acc;
    };

    for (int j = 0; j < n; ++j) {
        const double x = kTwoPi * j / n;
        const double t = wrap_pi(x - cp.x_plus);
        const cplx ph = phi(t);
        phase(j) = ph;
        const double cut = plateau_cutoff(t / cutoff_radius, kPlateauFraction);
        if (cut > 0.0 && ph.imag() < -1e-10)
            throw NumericError("phase lost positivity on the cutoff support");
        values(j) = cut * std::exp(kI * ph / h);
    }
    double vn = values.norm();
    if (!(vn > 0)) throw NumericError("quasimode vanished after cutoff");
    values /= vn;

    // Fourier coefficients on the operator basis
    Vec coeffs = Vec::Zero(n);
    for (int m = -K; m <= K; ++m) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += values(j) * std::polar(1.0, -m * (kTwoPi * j / n));
        coeffs(m + K) = acc / static_cast<double>(n);
    }
    coeffs.normalize();

    WkbQuasimode qm;
    qm.z = z;
    qm.h = h;
    qm.x_plus = cp.x_plus;
    qm.cutoff_radius = cutoff_radius;
    qm.K = K;
    qm.phase = std::move(phase);
    qm.vector = std::move(coeffs);
    return qm;
}

double residual(const FourierOperator& op, const WkbQuasimode& qm) {
    if (op.K != qm.K)
        throw NumericError("residual: operator truncation differs from quasimode grid");
    if (std::abs(op.h - qm.h) > 1e-14 * std::max(1.0, qm.h))
        throw NumericError("residual: operator h differs from quasimode h");
    Vec r = op.matrix * qm.vector - qm.z * qm.vector;
    return r.norm();
}

void quasimode_to_csv(const WkbQuasimode& qm, std::ostream& os) {
    os << "x,re,im,abs\n";
    const int n = 2 * qm.K + 1;
    // back to grid samples for plotting
    Vec values = Vec::Zero(n);
    for (int j = 0; j < n; ++j) {
        const double x = kTwoPi * j / n;
        cplx acc = 0.0;
        for (int m = -qm.K; m <= qm.K; ++m)
            acc += qm.vector(m + qm.K) * std::polar(1.0, m * x);
        values(j) = acc;
    }
    for (int j = 0; j < n; ++j) {
        csv_cell(os, kTwoPi * j / n);
        csv_cell(os, values(j).real());
        csv_cell(os, values(j).imag());
        csv_cell(os, std::abs(values(j)), true);
    }
}

} // namespace speclab
