#include "speclab/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/parallel.hpp"

namespace speclab {

HermiteOperator build_rotated_oscillator(int n) {
    if (n < 4) throw ConfigError("rotated oscillator needs n >= 4");
    HermiteOperator op;
    op.n = n;
    op.matY2 = Mat::Zero(n, n);
    op.matD2 = Mat::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        op.matY2(m, m) = m + 0.5;
        op.matD2(m, m) = -(m + 0.5);
        if (m + 2 < n) {
            const double c = 0.5 * std::sqrt(static_cast<double>(m + 1) * (m + 2));
            op.matY2(m, m + 2) = c;
            op.matY2(m + 2, m) = c;
            op.matD2(m, m + 2) = c;
            op.matD2(m + 2, m) = c;
        }
    }
    op.matQ = -op.matD2 + kI * op.matY2;
    return op;
}

namespace {

double resolvent_norm(const Mat& Q, cplx E) {
    Mat shifted = Q;
    shifted.diagonal().array() -= E;
    const double smin = smallest_singular(shifted).s_min;
    return smin > 0 ? 1.0 / smin : std::numeric_limits<double>::infinity();
}

} // namespace

std::vector<ResolventCell> resolvent_scan(const HermiteOperator& Q,
                                          const std::vector<double>& lambdas,
                                          const std::vector<double>& mus,
                                          double guard, int workers) {
    double max_lambda = 0.0;
    for (double l : lambdas) max_lambda = std::max(max_lambda, std::abs(l));
    if (Q.n < guard * max_lambda)
        throw ConfigError("resolvent_scan: truncation n below guard * max(lambda)");

    const int ncells = static_cast<int>(lambdas.size() * mus.size());
    std::vector<ResolventCell> cells(ncells);
    parallel_for(ncells, workers, [&](int t) {
        const double lambda = lambdas[t / mus.size()];
        const double mu = mus[t % mus.size()];
        ResolventCell cell;
        cell.lambda = lambda;
        cell.mu = mu;
        cell.norm = resolvent_norm(Q.matQ, cplx(mu, lambda));
        cells[t] = cell;
    });

    // truncation sensitivity on a deterministic subsample
    const int sample_stride = std::max(1, ncells / 8);
    HermiteOperator bigger = build_rotated_oscillator((3 * Q.n) / 2);
    for (int t = 0; t < ncells; t += sample_stride) {
        const double check =
            resolvent_norm(bigger.matQ, cplx(cells[t].mu, cells[t].lambda));
        if (std::abs(check - cells[t].norm) > 0.05 * std::abs(cells[t].norm))
            cells[t].flagged = true;
    }
    return cells;
}

RescaleCheck rescaling_check(double lambda, double mu, int K) {
    if (!(lambda > 0)) throw ConfigError("rescaling_check: lambda must be positive");
    // the unit-basis discretization of the scaled operator resolves its
    // smallest singular value only from ~8*lambda modes on
    if (K < 8 * lambda)
        throw ConfigError("rescaling_check: truncation K below 8 * lambda");
    HermiteOperator unit = build_rotated_oscillator(K);

    RescaleCheck out;
    {
        Mat shifted = unit.matQ;
        shifted.diagonal().array() -= cplx(mu, lambda);
        out.lhs = smallest_singular(shifted).s_min;
    }
    {
        const double h = 1.0 / lambda;
        Mat P = h * h * (-unit.matD2) + kI * unit.matY2;
        P.diagonal().array() -= cplx(mu / lambda, 1.0);
        out.rhs = lambda * smallest_singular(P).s_min;
    }
    out.relative_gap =
        std::abs(out.lhs - out.rhs) / std::max(std::abs(out.lhs), 1e-300);
    return out;
}

void scan_to_csv(const std::vector<ResolventCell>& cells, std::ostream& os) {
    os << "lambda,mu,norm,flag\n";
    for (const auto& c : cells) {
        csv_cell(os, c.lambda);
        csv_cell(os, c.mu);
        csv_cell(os, c.norm);
        os << (c.flagged ? 1 : 0) << "\n";
    }
}

} // namespace speclab
