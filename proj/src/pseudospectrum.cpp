#include "speclab/pseudospectrum.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/parallel.hpp"

namespace speclab {

PseudospecField scan_matrix(const Mat& P, double xmin, double xmax, double ymin,
                            double ymax, int nx, int ny, int workers) {
    if (nx < 2 || ny < 2) throw ConfigError("scan: nx, ny must be >= 2");
    PseudospecField field;
    field.xmin = xmin; field.xmax = xmax; field.ymin = ymin; field.ymax = ymax;
    field.nx = nx; field.ny = ny;
    field.values.setConstant(ny, nx, std::numeric_limits<double>::quiet_NaN());

    const int n = static_cast<int>(P.rows());
    std::vector<char> failed(static_cast<size_t>(nx) * ny, 0);
    parallel_for(nx * ny, workers, [&](int t) {
        const int ix = t % nx, iy = t / nx;
        Mat shifted = -P;
        shifted.diagonal().array() += field.node(ix, iy);
        try {
            field.values(iy, ix) = smallest_singular(shifted).s_min;
        } catch (const Error&) {
            failed[t] = 1;
        }
        (void)n;
    });
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            if (failed[static_cast<size_t>(iy) * nx + ix])
                field.failed.emplace_back(ix, iy);
    return field;
}

PseudospecField scan(const FourierOperator& op, double xmin, double xmax,
                     double ymin, double ymax, int nx, int ny, int workers) {
    PseudospecField f = scan_matrix(op.matrix, xmin, xmax, ymin, ymax, nx, ny, workers);
    f.h = op.h;
    f.K = op.K;
    return f;
}

Witness instability_witness(const Mat& P, cplx z) {
    const int n = static_cast<int>(P.rows());
    Mat shifted = P;
    shifted.diagonal().array() -= z;
    SingularTriplet t = smallest_singular(shifted);
    Witness w;
    if (t.s_min <= 1e-12 * P.norm()) {
        w.Q = Mat::Zero(n, n);
        w.norm = 0.0;
        return w;
    }
    Vec v = shifted * t.right; // = s_min * left up to the kernel tolerance
    w.Q = -v * t.right.adjoint();
    w.norm = v.norm();
    return w;
}

namespace {

// Linear interpolation of the crossing point on a cell edge.
cplx edge_point(cplx a, cplx b, double va, double vb, double eps) {
    double t = (eps - va) / (vb - va);
    return a + t * (b - a);
}

struct SegmentKey {
    // Grid edge id: horizontal edges even, vertical odd.
    long id;
    bool operator<(const SegmentKey& o) const { return id < o.id; }
};

} // namespace

std::vector<ContourSet> level_contours(const PseudospecField& field,
                                       const std::vector<double>& eps_list) {
    std::vector<ContourSet> out;
    const int nx = field.nx, ny = field.ny;
    auto edge_id_h = [nx](int ix, int iy) { return 2L * (static_cast<long>(iy) * nx + ix); };
    auto edge_id_v = [nx](int ix, int iy) { return 2L * (static_cast<long>(iy) * nx + ix) + 1; };

    for (double eps : eps_list) {
        ContourSet cs;
        cs.eps = eps;
        // segment endpoints keyed by the two grid edges they connect
        std::multimap<long, std::pair<long, cplx>> adjacency;
        std::vector<std::array<long, 2>> seg_edges;
        std::vector<std::array<cplx, 2>> seg_pts;

        for (int iy = 0; iy + 1 < ny; ++iy) {
            for (int ix = 0; ix + 1 < nx; ++ix) {
                double v00 = field.values(iy, ix), v10 = field.values(iy, ix + 1);
                double v01 = field.values(iy + 1, ix), v11 = field.values(iy + 1, ix + 1);
                if (std::isnan(v00) || std::isnan(v10) || std::isnan(v01) || std::isnan(v11))
                    continue;
                cplx p00 = field.node(ix, iy), p10 = field.node(ix + 1, iy);
                cplx p01 = field.node(ix, iy + 1), p11 = field.node(ix + 1, iy + 1);
                int mask = (v00 < eps) | ((v10 < eps) << 1) | ((v11 < eps) << 2) |
                           ((v01 < eps) << 3);
                if (mask == 0 || mask == 15) continue;

                // crossing points on the four edges (bottom, right, top, left)
                struct Crossing { long edge; cplx pt; };
                std::vector<Crossing> cross;
                if ((v00 < eps) != (v10 < eps))
                    cross.push_back({edge_id_h(ix, iy), edge_point(p00, p10, v00, v10, eps)});
                if ((v10 < eps) != (v11 < eps))
                    cross.push_back({edge_id_v(ix + 1, iy), edge_point(p10, p11, v10, v11, eps)});
                if ((v01 < eps) != (v11 < eps))
                    cross.push_back({edge_id_h(ix, iy + 1), edge_point(p01, p11, v01, v11, eps)});
                if ((v00 < eps) != (v01 < eps))
                    cross.push_back({edge_id_v(ix, iy), edge_point(p00, p01, v00, v01, eps)});

                if (cross.size() == 2) {
                    seg_edges.push_back({cross[0].edge, cross[1].edge});
                    seg_pts.push_back({cross[0].pt, cross[1].pt});
                } else if (cross.size() == 4) {
                    // saddle: resolve by the cell-center average
                    double vc = 0.25 * (v00 + v10 + v01 + v11);
                    bool center_in = vc < eps;
                    bool corner_in = v00 < eps;
                    // pair (bottom,left)/(right,top) or (bottom,right)/(top,left)
                    if (center_in == corner_in) {
                        seg_edges.push_back({cross[0].edge, cross[1].edge});
                        seg_pts.push_back({cross[0].pt, cross[1].pt});
                        seg_edges.push_back({cross[2].edge, cross[3].edge});
                        seg_pts.push_back({cross[2].pt, cross[3].pt});
                    } else {
                        seg_edges.push_back({cross[0].edge, cross[3].edge});
                        seg_pts.push_back({cross[0].pt, cross[3].pt});
                        seg_edges.push_back({cross[1].edge, cross[2].edge});
                        seg_pts.push_back({cross[1].pt, cross[2].pt});
                    }
                }
            }
        }

        // chain segments into polylines
        const size_t nseg = seg_edges.size();
        std::multimap<long, size_t> by_edge;
        for (size_t s = 0; s < nseg; ++s) {
            by_edge.insert({seg_edges[s][0], s});
            by_edge.insert({seg_edges[s][1], s});
        }
        std::vector<char> used(nseg, 0);
        for (size_t start = 0; start < nseg; ++start) {
            if (used[start]) continue;
            std::vector<cplx> line;
            used[start] = 1;
            line.push_back(seg_pts[start][0]);
            line.push_back(seg_pts[start][1]);
            long head_edge = seg_edges[start][1];
            long tail_edge = seg_edges[start][0];
            // extend forward then backward
            for (int dir = 0; dir < 2; ++dir) {
                long cur = dir == 0 ? head_edge : tail_edge;
                for (;;) {
                    auto range = by_edge.equal_range(cur);
                    size_t next = nseg;
                    for (auto it = range.first; it != range.second; ++it)
                        if (!used[it->second]) { next = it->second; break; }
                    if (next == nseg) break;
                    used[next] = 1;
                    long other = seg_edges[next][0] == cur ? seg_edges[next][1]
                                                           : seg_edges[next][0];
                    cplx pt = seg_edges[next][0] == cur ? seg_pts[next][1]
                                                        : seg_pts[next][0];
                    if (dir == 0) line.push_back(pt);
                    else line.insert(line.begin(), pt);
                    cur = other;
                }
            }
            cs.polylines.push_back(std::move(line));
        }
        out.push_back(std::move(cs));
    }
    return out;
}

void field_to_csv(const PseudospecField& field, std::ostream& os) {
    os << "re,im,smin\n";
    for (int iy = 0; iy < field.ny; ++iy)
        for (int ix = 0; ix < field.nx; ++ix) {
            cplx z = field.node(ix, iy);
            csv_cell(os, z.real());
            csv_cell(os, z.imag());
            csv_cell(os, field.values(iy, ix), true);
        }
}

} // namespace speclab
