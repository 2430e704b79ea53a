#include "speclab/region.hpp"

#include <algorithm>
#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

RegionSpec RegionSpec::rectangle(double a, double b, double c, double d,
                                 double boundary_tolerance) {
    if (!(a < b) || !(c < d))
        throw ConfigError("rectangle region requires a < b and c < d");
    RegionSpec r;
    r.is_rectangle_ = true;
    r.xmin_ = a; r.xmax_ = b; r.ymin_ = c; r.ymax_ = d;
    r.vertices_ = {cplx(a, c), cplx(b, c), cplx(b, d), cplx(a, d)};
    r.boundary_tolerance_ = boundary_tolerance;
    r.validate();
    return r;
}

RegionSpec RegionSpec::polygon(std::vector<cplx> vertices, double boundary_tolerance) {
    RegionSpec r;
    if (vertices.size() >= 2 && std::abs(vertices.front() - vertices.back()) == 0.0)
        vertices.pop_back();  // accept explicitly closed vertex lists
    r.vertices_ = std::move(vertices);
    r.boundary_tolerance_ = boundary_tolerance;
    r.validate();
    return r;
}

namespace {
double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
    double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
    double d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}
} // namespace

void RegionSpec::validate() {
    const auto n = vertices_.size();
    if (n < 3) throw ConfigError("region polygon needs at least 3 vertices");
    if (boundary_tolerance_ < 0)
        throw ConfigError("boundary_tolerance must be >= 0");
    double twice_area = 0.0;
    for (size_t i = 0; i < n; ++i) {
        cplx a = vertices_[i], b = vertices_[(i + 1) % n];
        twice_area += a.real() * b.imag() - b.real() * a.imag();
        if (std::abs(b - a) == 0.0)
            throw ConfigError("region polygon has a zero-length edge");
    }
    if (twice_area <= 0.0)
        throw ConfigError("region polygon must be positively oriented with nonempty interior");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n],
                                   vertices_[j], vertices_[(j + 1) % n]))
                throw ConfigError("region polygon is self-intersecting");
        }
}

bool RegionSpec::contains(cplx z) const {
    if (is_rectangle_)
        return z.real() > xmin_ && z.real() < xmax_ &&
               z.imag() > ymin_ && z.imag() < ymax_;
    // Winding number by edge crossings of the upward ray.
    const auto n = vertices_.size();
    int winding = 0;
    for (size_t i = 0; i < n; ++i) {
        cplx a = vertices_[i], b = vertices_[(i + 1) % n];
        if (a.imag() <= z.imag()) {
            if (b.imag() > z.imag() && cross(a, b, z) > 0) ++winding;
        } else {
            if (b.imag() <= z.imag() && cross(a, b, z) < 0) --winding;
        }
    }
    return winding != 0;
}

double RegionSpec::boundary_distance(cplx z) const {
    const auto n = vertices_.size();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        cplx a = vertices_[i], b = vertices_[(i + 1) % n];
        cplx ab = b - a;
        double len2 = std::norm(ab);
        double t = std::clamp(((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2,
                              0.0, 1.0);
        best = std::min(best, std::abs(z - (a + t * ab)));
    }
    return best;
}

double RegionSpec::area() const {
    const auto n = vertices_.size();
    double twice_area = 0.0;
    for (size_t i = 0; i < n; ++i) {
        cplx a = vertices_[i], b = vertices_[(i + 1) % n];
        twice_area += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * twice_area;
}

double RegionSpec::max_abs() const {
    double m = 0.0;
    for (const auto& v : vertices_) m = std::max(m, std::abs(v));
    return m;
}

double RegionSpec::min_side() const {
    double a, b, c, d;
    bounding_box(a, b, c, d);
    return std::min(b - a, d - c);
}

cplx RegionSpec::centroid() const {
    cplx s = 0.0;
    for (const auto& v : vertices_) s += v;
    return s / static_cast<double>(vertices_.size());
}

void RegionSpec::bounding_box(double& a, double& b, double& c, double& d) const {
    a = c = std::numeric_limits<double>::infinity();
    b = d = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) {
        a = std::min(a, v.real()); b = std::max(b, v.real());
        c = std::min(c, v.imag()); d = std::max(d, v.imag());
    }
}

} // namespace speclab
