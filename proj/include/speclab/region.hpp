#pragma once

#include <vector>

#include "speclab/types.hpp"

namespace speclab {

// A bounded plane region: an axis-aligned rectangle [a,b] + i[c,d] or a
// positively oriented simple polygon.  Membership is strict-interior; the
// boundary_tolerance field is carried along for callers that count a band
// around the boundary separately.
class RegionSpec {
public:
    static RegionSpec rectangle(double a, double b, double c, double d,
                                double boundary_tolerance = 0.0);
    static RegionSpec polygon(std::vector<cplx> vertices,
                              double boundary_tolerance = 0.0);

    bool is_rectangle() const { return is_rectangle_; }
    // Rectangle bounds; only valid when is_rectangle().
    double xmin() const { return xmin_; }
    double xmax() const { return xmax_; }
    double ymin() const { return ymin_; }
    double ymax() const { return ymax_; }

    const std::vector<cplx>& vertices() const { return vertices_; }
    double boundary_tolerance() const { return boundary_tolerance_; }

    bool contains(cplx z) const;
    double boundary_distance(cplx z) const;
    double area() const;
    double max_abs() const;  // max |z| over the boundary
    double min_side() const; // rectangle: min(b-a, d-c); polygon: bbox min side
    cplx centroid() const;

    // Bounding box (equals the rectangle itself for rectangles).
    void bounding_box(double& a, double& b, double& c, double& d) const;

private:
    RegionSpec() = default;
    void validate();

    bool is_rectangle_ = false;
    double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
    std::vector<cplx> vertices_; // closed implicitly (last connects to first)
    double boundary_tolerance_ = 0.0;
};

} // namespace speclab
