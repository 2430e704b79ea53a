#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "speclab/fourier_operator.hpp"
#include "speclab/types.hpp"

namespace speclab {

// s_min(z - P) sampled on a rectangular z-grid.  The resolvent norm at a
// node is 1/value by the kernel contract; failed nodes carry NaN and are
// listed in `failed`.
struct PseudospecField {
    double xmin, xmax, ymin, ymax;
    int nx, ny;
    Eigen::MatrixXd values; // (ny, nx), value(iy, ix)
    double h = 0.0;
    int K = 0;
    std::vector<std::pair<int, int>> failed; // (ix, iy)

    cplx node(int ix, int iy) const {
        return {xmin + (nx > 1 ? ix * (xmax - xmin) / (nx - 1) : 0.0),
                ymin + (ny > 1 ? iy * (ymax - ymin) / (ny - 1) : 0.0)};
    }
};

PseudospecField scan_matrix(const Mat& P, double xmin, double xmax, double ymin,
                            double ymax, int nx, int ny, int workers = 1);

PseudospecField scan(const FourierOperator& op, double xmin, double xmax,
                     double ymin, double ymax, int nx, int ny, int workers = 1);

// Rank-one spectral-instability witness: Q = -v u^H with u the minimal right
// singular vector of P - z and v = (P - z) u, so ||Q|| = s_min(P - z) and z
// is an eigenvalue of P + Q.  Returns the zero perturbation when z already
// is an eigenvalue to within 1e-12 * ||P||_F.
struct Witness {
    Mat Q;
    double norm;
};
Witness instability_witness(const Mat& P, cplx z);

struct ContourSet {
    double eps;
    std::vector<std::vector<cplx>> polylines;
};

// Marching-squares level extraction; NaN cells are skipped.
std::vector<ContourSet> level_contours(const PseudospecField& field,
                                       const std::vector<double>& eps_list);

// CSV: header "re,im,smin", nodes row-major with x fastest.
void field_to_csv(const PseudospecField& field, std::ostream& os);

} // namespace speclab
