#include "speclab/grushin.hpp"

#include <array>
#include <cmath>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/quasimode.hpp"

namespace speclab {

namespace {

void apply_gauge(Vec& v) {
    int imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v(i));
        if (a > best) { best = a; imax = static_cast<int>(i); }
    }
    if (best <= 0.0) return;
    v *= std::conj(v(imax)) / std::abs(v(imax));
}

Mat shifted(const Mat& P, cplx z) {
    Mat A = P;
    A.diagonal().array() -= z;
    return A;
}

} // namespace

GrushinData singular_pair(const Mat& P, cplx z) {
    const Mat A = shifted(P, z);
    const Mat Q = A.adjoint() * A;
    HermitianSmallestTwo two = hermitian_smallest_two(Q);

    GrushinData d;
    d.z = z;
    d.e0 = two.v0;
    apply_gauge(d.e0);
    Vec r = A * d.e0;
    d.t0 = r.norm();
    d.t1 = std::sqrt(std::max(two.lambda1, 0.0));
    if (d.t0 > 1e-13 * P.norm()) {
        d.f0 = r / d.t0;
    } else {
        // kernel direction of the adjoint problem
        const Mat Qt = A * A.adjoint();
        HermitianSmallestTwo two_t = hermitian_smallest_two(Qt);
        d.f0 = two_t.v0;
        apply_gauge(d.f0);
    }
    if (d.t0 > d.t1 + 1e-10 * std::max(1.0, d.t1))
        throw NumericError("singular pair ordering violated (t0 > t1)");
    return d;
}

GrushinData singular_pair(const FourierOperator& op, cplx z) {
    return singular_pair(op.matrix, z);
}

namespace {

// Bordered solve shared by effective_function and effective_at.
cplx bordered_solve(const Mat& P, cplx z, const Vec& e0, const Vec& f0,
                    double* block_residual, Vec* e_plus) {
    const int n = static_cast<int>(P.rows());
    Mat B(n + 1, n + 1);
    B.topLeftCorner(n, n) = shifted(P, z);
    B.block(0, n, n, 1) = f0;
    B.block(n, 0, 1, n) = e0.adjoint();
    B(n, n) = 0.0;
    Vec rhs = Vec::Zero(n + 1);
    rhs(n) = 1.0;
    Vec x = solve(B, rhs);
    double resid = (B * x - rhs).norm();
    if (resid > 1e-9)
        throw NumericError("Grushin block solve residual above contract");
    if (block_residual) *block_residual = resid;
    if (e_plus) *e_plus = x.head(n);
    return x(n);
}

} // namespace

GrushinData effective_function(const Mat& P, cplx z) {
    GrushinData d = singular_pair(P, z);
    if (!(d.t1 > 0))
        throw NumericError("Grushin system singular: t1 = 0");
    d.E_mp = bordered_solve(P, z, d.e0, d.f0, &d.block_residual, nullptr);
    d.has_effective = true;
    const double scale = P.norm();
    if (d.t0 > 1e-8 * scale) {
        double rel = std::abs(std::abs(d.E_mp) - d.t0) / d.t0;
        if (rel > 1e-6)
            throw NumericError("|E_mp| deviates from t0 beyond tolerance");
    }
    return d;
}

GrushinData effective_function(const FourierOperator& op, cplx z) {
    return effective_function(op.matrix, z);
}

cplx effective_at(const Mat& P, cplx z, const Vec& e0_probe, const Vec& f0_probe,
                  double* block_residual) {
    return bordered_solve(P, z, e0_probe, f0_probe, block_residual, nullptr);
}

DbarSample dbar_residual(const Mat& P, cplx z, double step) {
    if (!(step > 0)) throw ConfigError("dbar_residual: step must be positive");
    // stencil order: center, +step, -step, +i step, -i step
    const std::array<cplx, 5> zs = {z, z + step, z - step, z + kI * step,
                                    z - kI * step};
    const double scale = P.norm();
    std::array<GrushinData, 5> d;
    for (int i = 0; i < 5; ++i) {
        d[i] = effective_function(P, zs[i]);
        if (!(d[i].t1 > 0) || d[i].t0 > 0.8 * d[i].t1)
            throw HypothesisError(
                "dbar stencil: t0/t1 gap too small for a smooth singular family");
        if (d[i].t0 < 1e-12 * scale)
            throw HypothesisError(
                "dbar stencil: z too close to an eigenvalue for a smooth family");
    }
    for (int i = 1; i < 5; ++i) {
        if (std::abs(d[0].e0.dot(d[i].e0)) < 0.9 ||
            std::abs(d[0].f0.dot(d[i].f0)) < 0.9)
            throw NumericError(
                "gauge discontinuity across the dbar stencil (overlap < 0.9)");
    }
    // Re-gauge every stencil point against one reference entry of the center
    // vector.  The per-point max-entry gauge may switch its reference index
    // between neighbouring z, which would put an O(1) phase kink into the
    // finite differences; a common reference keeps the family smooth.  E_mp
    // is invariant because f0 carries the same phase as e0.
    {
        int ref = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < d[0].e0.size(); ++r)
            if (std::abs(d[0].e0(r)) > best) {
                best = std::abs(d[0].e0(r));
                ref = static_cast<int>(r);
            }
        for (int i = 0; i < 5; ++i) {
            cplx a = d[i].e0(ref);
            if (std::abs(a) < 0.25 * best)
                throw NumericError(
                    "gauge discontinuity across the dbar stencil (reference entry collapsed)");
            cplx phase = std::conj(a) / std::abs(a);
            d[i].e0 *= phase;
            d[i].f0 *= phase;
        }
    }

    const double inv2s = 1.0 / (2.0 * step);
    auto dz = [&](auto field) {
        return 0.5 * ((field(1) - field(2)) * inv2s -
                      kI * (field(3) - field(4)) * inv2s);
    };
    auto dzbar = [&](auto field) {
        return 0.5 * ((field(1) - field(2)) * inv2s +
                      kI * (field(3) - field(4)) * inv2s);
    };

    DbarSample s;
    s.z = z;
    s.step = step;
    s.dEmp_dzbar = dzbar([&](int i) { return d[i].E_mp; });

    const Eigen::Index n = P.rows();
    Vec dz_e0(n), dzbar_f0(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        dz_e0(r) = dz([&](int i) { return d[i].e0(r); });
        dzbar_f0(r) = dzbar([&](int i) { return d[i].f0(r); });
    }
    // (u|v) = sum u_k conj(v_k)
    const cplx f_plus = dz_e0.dot(d[0].e0);      // (e0 | d_z e0)
    const cplx f_minus = d[0].f0.dot(dzbar_f0);  // (dbar f0 | f0)
    s.f_estimate = f_plus + f_minus;

    const cplx lhs = s.dEmp_dzbar + s.f_estimate * d[0].E_mp;
    s.identity_residual = std::abs(lhs);
    s.scale = std::max(std::abs(s.dEmp_dzbar),
                       std::abs(s.f_estimate * d[0].E_mp));
    return s;
}

SymplecticCheck symplectic_density_check(const FourierOperator& op,
                                         const Symbol1D& symbol, cplx z,
                                         double step) {
    if (symbol.order() != 1)
        throw HypothesisError("symplectic check needs the model symbol xi + g(x)");
    const PeriodicFunction& g = symbol.coeffs[0];

    // outer stencil for d_z f; f itself uses the caller's step
    const double S = 10.0 * step;
    const std::array<cplx, 4> zs = {z + S, z - S, z + kI * S, z - kI * S};
    std::array<cplx, 4> f;
    for (int i = 0; i < 4; ++i)
        f[i] = dbar_residual(op.matrix, zs[i], step).f_estimate;
    const double inv2S = 1.0 / (2.0 * S);
    const cplx dz_f =
        0.5 * ((f[0] - f[1]) * inv2S - kI * (f[2] - f[3]) * inv2S);

    CrossingPair cp = find_crossings(g, z);
    SymplecticCheck out;
    out.lhs = (4.0 * dz_f).real();
    out.rhs = (2.0 / op.h) * (1.0 / cp.bracket_plus - 1.0 / cp.bracket_minus);
    return out;
}

void grushin_to_csv_row(const GrushinData& d, std::ostream& os) {
    csv_cell(os, d.z.real());
    csv_cell(os, d.z.imag());
    csv_cell(os, d.t0);
    csv_cell(os, d.t1);
    csv_cell(os, d.E_mp.real());
    csv_cell(os, d.E_mp.imag(), true);
}

} // namespace speclab
