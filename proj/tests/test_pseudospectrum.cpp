#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/pseudospectrum.hpp"
#include "speclab/quasimode.hpp"
#include "speclab/rng.hpp"
#include "speclab/symbol.hpp"

using namespace speclab;

namespace {

Mat diag_model(double h, int K) {
    Mat P = Mat::Zero(2 * K + 1, 2 * K + 1);
    for (int k = -K; k <= K; ++k) P(k + K, k + K) = h * k;
    return P;
}

double dist_to_diag_spectrum(cplx z, double h, int K) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = -K; k <= K; ++k) best = std::min(best, std::abs(z - cplx(h * k, 0)));
    return best;
}

Mat random_matrix(int n, uint64_t seed) {
    Philox rng(seed, 0);
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.gaussian_complex();
    return A;
}

} // namespace

TEST_CASE("scan of a normal operator equals distance to spectrum") {
    const double h = 0.25;
    const int K = 6;
    Mat P = diag_model(h, K);
    PseudospecField f = scan_matrix(P, -1.2, 1.2, -0.7, 0.7, 9, 7);
    CHECK(f.failed.empty());
    for (int iy = 0; iy < f.ny; ++iy)
        for (int ix = 0; ix < f.nx; ++ix) {
            const double expect = dist_to_diag_spectrum(f.node(ix, iy), h, K);
            CHECK(f.values(iy, ix) == doctest::Approx(expect).epsilon(1e-10));
        }
}

TEST_CASE("scan picks up the Jordan-block value") {
    Mat J = Mat::Zero(2, 2);
    J(0, 1) = 1;
    PseudospecField f = scan_matrix(J, 1.0, 1.5, 0.0, 0.5, 2, 2);
    CHECK(f.values(0, 0) == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-12));
}

TEST_CASE("deep pseudospectrum inside the symbol range, certified by a quasimode") {
    Symbol1D p = make_exp_ix();
    const double h = 0.05;
    const int K = 80;
    FourierOperator op = assemble(p, h, K);
    Mat shifted = op.matrix;
    const cplx z(0, 0.5);
    shifted.diagonal().array() -= z;
    const double smin = smallest_singular(shifted).s_min;
    CHECK(smin < 1e-6);
    PeriodicFunction g = PeriodicFunction::from_callable(
        33, [](double x) { return std::polar(1.0, x); });
    WkbQuasimode qm = build_quasimode(g, z, h, K);
    CHECK(smin <= residual(op, qm));
}

TEST_CASE("rank-one witness lands z in the spectrum") {
    Mat P = Mat::Zero(2, 2);
    P(1, 1) = 2;
    Witness w = instability_witness(P, cplx(1, 0));
    CHECK(w.norm == doctest::Approx(1.0).epsilon(1e-12));
    Vec ev = eig(P + w.Q).eigenvalues;
    double best = std::min(std::abs(ev(0) - cplx(1, 0)), std::abs(ev(1) - cplx(1, 0)));
    CHECK(best < 1e-10);

    // z already in the spectrum: zero perturbation
    Witness w0 = instability_witness(P, cplx(2, 0));
    CHECK(w0.norm == 0.0);
    CHECK(w0.Q.cwiseAbs().maxCoeff() == 0.0);

    Mat J = Mat::Zero(2, 2);
    J(0, 1) = 1;
    Witness wj = instability_witness(J, cplx(1, 0));
    CHECK(wj.norm == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-12));
    Vec evj = eig(J + wj.Q).eigenvalues;
    best = std::min(std::abs(evj(0) - cplx(1, 0)), std::abs(evj(1) - cplx(1, 0)));
    CHECK(best < 1e-10);
}

TEST_CASE("witness on random instances: exactness and optimality") {
    Philox rng(77, 0);
    for (int inst = 0; inst < 50; ++inst) {
        const int n = 12;
        Mat P = random_matrix(n, 1000 + inst);
        const cplx z(rng.gaussian(), rng.gaussian());
        Mat shifted = P;
        shifted.diagonal().array() -= z;
        const double smin = smallest_singular(shifted).s_min;
        Witness w = instability_witness(P, z);
        CHECK(w.norm == doctest::Approx(smin).epsilon(1e-10));

        Mat Pq = P + w.Q;
        Pq.diagonal().array() -= z;
        CHECK(smallest_singular(Pq).s_min <= 1e-10 * P.norm());

        // no strictly smaller rank-one perturbation reaches z
        for (int attempt = 0; attempt < 20; ++attempt) {
            Vec a(n), b(n);
            for (int i = 0; i < n; ++i) {
                a(i) = rng.gaussian_complex();
                b(i) = rng.gaussian_complex();
            }
            a.normalize();
            b.normalize();
            Mat Qp = (0.999 * smin) * a * b.adjoint();
            Mat Ppq = P + Qp;
            Ppq.diagonal().array() -= z;
            CHECK(smallest_singular(Ppq).s_min >= 1e-4 * smin);
        }
    }
}

TEST_CASE("bounded sublevel components contain eigenvalues") {
    const double h = 0.4;
    const int K = 2;
    Mat P = diag_model(h, K);
    PseudospecField f = scan_matrix(P, -1.0, 1.0, -0.3, 0.3, 41, 13);
    const double eps = 0.12;

    // flood fill the strict sublevel set on the grid
    Eigen::MatrixXi comp = Eigen::MatrixXi::Constant(f.ny, f.nx, -1);
    int ncomp = 0;
    for (int iy = 0; iy < f.ny; ++iy)
        for (int ix = 0; ix < f.nx; ++ix) {
            if (f.values(iy, ix) >= eps || comp(iy, ix) >= 0) continue;
            std::vector<std::pair<int, int>> stack{{ix, iy}};
            comp(iy, ix) = ncomp;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    int nx2 = cx + dx[d], ny2 = cy + dy[d];
                    if (nx2 < 0 || nx2 >= f.nx || ny2 < 0 || ny2 >= f.ny) continue;
                    if (f.values(ny2, nx2) < eps && comp(ny2, nx2) < 0) {
                        comp(ny2, nx2) = ncomp;
                        stack.push_back({nx2, ny2});
                    }
                }
            }
            ++ncomp;
        }
    CHECK(ncomp == 2 * K + 1);

    Vec ev = eig(P).eigenvalues;
    const double cell = std::max((f.xmax - f.xmin) / (f.nx - 1),
                                 (f.ymax - f.ymin) / (f.ny - 1));
    for (int c = 0; c < ncomp; ++c) {
        bool found = false;
        for (int iy = 0; iy < f.ny && !found; ++iy)
            for (int ix = 0; ix < f.nx && !found; ++ix) {
                if (comp(iy, ix) != c) continue;
                for (Eigen::Index e = 0; e < ev.size(); ++e)
                    if (std::abs(ev(e) - f.node(ix, iy)) <= cell * 1.5) {
                        found = true;
                        break;
                    }
            }
        CHECK(found);
    }
}

TEST_CASE("contours: empty cases and near-circles around eigenvalues") {
    const double h = 0.4;
    const int K = 2;
    Mat P = diag_model(h, K);
    PseudospecField f = scan_matrix(P, -1.0, 1.0, -0.25, 0.25, 81, 21);

    // threshold above the field maximum -> no contours
    auto high = level_contours(f, {100.0});
    CHECK(high[0].polylines.empty());

    // constant field -> no crossings at any threshold
    PseudospecField flat;
    flat.xmin = 0; flat.xmax = 1; flat.ymin = 0; flat.ymax = 1;
    flat.nx = 6; flat.ny = 6;
    flat.values.setConstant(6, 6, 1.0);
    auto none = level_contours(flat, {0.5});
    CHECK(none[0].polylines.empty());

    const double eps = 0.08;
    auto cs = level_contours(f, {eps});
    REQUIRE(cs[0].polylines.size() == 5);
    Vec ev = eig(P).eigenvalues;
    const double cell = (f.xmax - f.xmin) / (f.nx - 1);
    std::set<int> matched;
    for (const auto& line : cs[0].polylines) {
        REQUIRE(line.size() >= 4);
        cplx center = 0;
        for (const auto& p : line) center += p;
        center /= static_cast<double>(line.size());
        // radius should be close to eps for a normal operator
        for (const auto& p : line)
            CHECK(std::abs(std::abs(p - center) - eps) < 0.35 * eps);
        int best = -1;
        double bd = 1e9;
        for (Eigen::Index e = 0; e < ev.size(); ++e)
            if (std::abs(ev(e) - center) < bd) {
                bd = std::abs(ev(e) - center);
                best = static_cast<int>(e);
            }
        CHECK(bd <= cell);
        matched.insert(best);
    }
    CHECK(matched.size() == 5);

    // monotone nesting of sublevel sets across thresholds (data integrity)
    for (int iy = 0; iy < f.ny; ++iy)
        for (int ix = 0; ix < f.nx; ++ix)
            if (f.values(iy, ix) < 0.04) CHECK(f.values(iy, ix) < eps);
}

TEST_CASE("contours skip NaN nodes") {
    PseudospecField f;
    f.xmin = 0; f.xmax = 1; f.ymin = 0; f.ymax = 1;
    f.nx = 5; f.ny = 5;
    f.values.setConstant(5, 5, 1.0);
    f.values(2, 2) = std::numeric_limits<double>::quiet_NaN();
    f.failed.push_back({2, 2});
    auto cs = level_contours(f, {0.5});
    CHECK(cs[0].polylines.empty());
}
