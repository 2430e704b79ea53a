#include "speclab/torus2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/parallel.hpp"
#include "speclab/rng.hpp"

namespace speclab {

std::map<std::pair<int, int>, cplx> torus_potential_icos(double amp) {
    std::map<std::pair<int, int>, cplx> v;
    const cplx half = kI * (0.5 * amp);
    v[{1, 0}] = half;
    v[{-1, 0}] = half;
    v[{0, 1}] = half;
    v[{0, -1}] = half;
    return v;
}

namespace {

cplx eval_potential(const std::map<std::pair<int, int>, cplx>& v, double x1,
                    double x2) {
    cplx acc = 0.0;
    for (const auto& [k, c] : v)
        acc += c * std::polar(1.0, k.first * x1 + k.second * x2);
    return acc;
}

void check_even(const std::map<std::pair<int, int>, cplx>& v) {
    for (const auto& [k, c] : v) {
        auto it = v.find({-k.first, -k.second});
        if (it == v.end() || std::abs(it->second - c) > 1e-12)
            throw HypothesisError(
                "torus potential must have even Fourier coefficients "
                "(symbol symmetry p(x,-xi) = p(x,xi))");
    }
}

} // namespace

Mat torus_operator(const Torus2DConfig& config) {
    if (config.K2 < 1 || config.K2 > 12)
        throw ConfigError("torus demo: per-axis truncation K2 must be in 1..12");
    check_even(config.v_coeffs);
    const int K2 = config.K2;
    const int side = 2 * K2 + 1;
    const int n = side * side;
    auto idx = [K2, side](int k1, int k2) {
        return (k1 + K2) * side + (k2 + K2);
    };
    Mat P = Mat::Zero(n, n);
    for (int k1 = -K2; k1 <= K2; ++k1)
        for (int k2 = -K2; k2 <= K2; ++k2) {
            const int col = idx(k1, k2);
            P(col, col) += config.h * config.h * (k1 * k1 + k2 * k2);
            for (const auto& [m, c] : config.v_coeffs) {
                const int j1 = k1 + m.first, j2 = k2 + m.second;
                if (std::abs(j1) <= K2 && std::abs(j2) <= K2)
                    P(idx(j1, j2), col) += c;
            }
        }
    return P;
}

double torus_volume4d(const Torus2DConfig& config) {
    const auto& region = config.region;
    if (!region.is_rectangle())
        throw ConfigError("torus demo expects a rectangular region");
    const double a = region.xmin(), b = region.xmax();
    const int res = config.volume_resolution;
    // p = |xi|^2 + V(x); for fixed x the xi-set is the annulus
    // a - Re V <= |xi|^2 <= b - Re V, of area pi * (length of the t-interval),
    // provided Im V lies in the vertical slab.
    double vol = 0.0;
    const double dx = kTwoPi / res;
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
            const cplx v =
                eval_potential(config.v_coeffs, (i + 0.5) * dx, (j + 0.5) * dx);
            if (!(v.imag() > region.ymin() && v.imag() < region.ymax())) continue;
            const double t_lo = std::max(0.0, a - v.real());
            const double t_hi = b - v.real();
            if (t_hi > t_lo) vol += kPi * (t_hi - t_lo) * dx * dx;
        }
    return vol;
}

Torus2DResult torus2d_demo(const Torus2DConfig& config, int workers) {
    if (config.trials < 1) throw ConfigError("torus demo needs trials >= 1");
    const int K2 = config.K2;
    const int N_c = static_cast<int>(std::floor(config.L / config.h));
    if (N_c < 1) throw ConfigError("torus demo: floor(L/h) must be >= 1");
    if (N_c > 2 * K2)
        throw ConfigError("torus demo: perturbation modes exceed operator bandwidth");

    const Mat P = torus_operator(config);
    const int side = 2 * K2 + 1;
    const int n = side * side;

    Torus2DResult result;
    result.h = config.h;
    result.delta = config.delta;
    result.prediction =
        torus_volume4d(config) / std::pow(kTwoPi * config.h, 2.0);
    result.baseline_count = 0;
    {
        SpectrumResult spec = eig(P);
        for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
            if (config.region.contains(spec.eigenvalues(i)))
                ++result.baseline_count;
    }

    const int pert_side = 2 * N_c + 1;
    result.trials.resize(config.trials);
    parallel_for(config.trials, workers, [&](int t) {
        const uint64_t trial_seed = Philox::fnv1a64("torus2d.trial") +
                                    static_cast<uint64_t>(t) * 0x9E3779B97F4A7C15ULL +
                                    config.seed;
        Philox rng(trial_seed, Philox::fnv1a64("torus2d.alpha"));
        // Fourier coefficients of the random potential, |k|_inf <= N_c
        Mat alpha(pert_side, pert_side);
        for (int i = 0; i < pert_side; ++i)
            for (int j = 0; j < pert_side; ++j)
                alpha(i, j) = rng.gaussian_complex();

        Mat Pd = P;
        auto idx = [K2, side](int k1, int k2) {
            return (k1 + K2) * side + (k2 + K2);
        };
        const double norm2pi = 1.0 / kTwoPi;
        for (int k1 = -K2; k1 <= K2; ++k1)
            for (int k2 = -K2; k2 <= K2; ++k2) {
                const int col = idx(k1, k2);
                for (int m1 = -N_c; m1 <= N_c; ++m1)
                    for (int m2 = -N_c; m2 <= N_c; ++m2) {
                        const int j1 = k1 + m1, j2 = k2 + m2;
                        if (std::abs(j1) > K2 || std::abs(j2) > K2) continue;
                        Pd(idx(j1, j2), col) += config.delta * norm2pi *
                                                alpha(m1 + N_c, m2 + N_c);
                    }
            }
        SpectrumResult spec = eig(Pd);
        Torus2DTrial row;
        row.trial = t;
        row.seed = trial_seed;
        const double ring = 0.05 * config.region.min_side();
        for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
            if (config.region.contains(spec.eigenvalues(i))) ++row.count;
            if (config.region.boundary_distance(spec.eigenvalues(i)) <= ring)
                ++row.ring_count;
        }
        result.trials[t] = row;
    });
    (void)n;

    std::vector<double> counts;
    for (const auto& tr : result.trials) counts.push_back(static_cast<double>(tr.count));
    result.mean_count =
        std::accumulate(counts.begin(), counts.end(), 0.0) / counts.size();
    std::sort(counts.begin(), counts.end());
    const size_t m = counts.size();
    result.median_count =
        m % 2 == 1 ? counts[m / 2] : 0.5 * (counts[m / 2 - 1] + counts[m / 2]);
    return result;
}

void torus_trials_to_csv(const Torus2DResult& r, const Torus2DConfig& c,
                         std::ostream& os) {
    os << "h,delta,trial,count,ring_count,prediction,epsilon,bound_scale,seed\n";
    const double eps = c.delta > 0 ? c.h * std::log(1.0 / c.delta) : 0.0;
    const double bound_scale = eps > 0 ? std::sqrt(eps) / c.h : 0.0;
    for (const auto& t : r.trials) {
        csv_cell(os, r.h);
        csv_cell(os, r.delta);
        os << t.trial << "," << t.count << "," << t.ring_count << ",";
        csv_cell(os, r.prediction);
        csv_cell(os, eps);
        csv_cell(os, bound_scale);
        os << t.seed << "\n";
    }
}

} // namespace speclab
