#pragma once

#include <ostream>
#include <vector>

#include "speclab/types.hpp"

namespace speclab {

// Hermite-basis truncation of Q = -d^2/dy^2 + i y^2 built from the ladder
// algebra: y = (a + a^H)/sqrt(2), d/dy = (a - a^H)/sqrt(2), so both y^2 and
// -d^2/dy^2 are pentadiagonal and positive semidefinite on the truncation.
struct HermiteOperator {
    int n = 0;
    Mat matY2; // y^2
    Mat matD2; // d^2/dy^2 (note: -matD2 is PSD)
    Mat matQ;  // -matD2 + i matY2
};

HermiteOperator build_rotated_oscillator(int n);

struct ResolventCell {
    double lambda = 0.0, mu = 0.0;
    double norm = 0.0; // ||(Q - (i lambda + mu))^{-1}||
    bool flagged = false;
};

// Resolvent-norm table over E = i*lambda + mu.  Cells whose norm moves by
// more than 5% when the truncation grows to 1.5 n (checked on a
// deterministic subsample) are flagged.
std::vector<ResolventCell> resolvent_scan(const HermiteOperator& Q,
                                          const std::vector<double>& lambdas,
                                          const std::vector<double>& mus,
                                          double guard = 3.0, int workers = 1);

// Semiclassical rescaling: s_min(Q - (i lambda + mu)) against
// lambda * s_min(P_h - (i + mu/lambda)) for P_h = -h^2 d^2/dx^2 + i x^2 at
// h = 1/lambda, both in Hermite truncations of size K.
struct RescaleCheck {
    double lhs = 0.0, rhs = 0.0;
    double relative_gap = 0.0;
};
RescaleCheck rescaling_check(double lambda, double mu, int K);

void scan_to_csv(const std::vector<ResolventCell>& cells, std::ostream& os);

} // namespace speclab
