#include "speclab/zero_count.hpp"

#include <cmath>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"

namespace speclab {

ContourSpec ContourSpec::circle(cplx center, double radius, int n) {
    ContourSpec c;
    c.nodes.reserve(n);
    for (int j = 0; j < n; ++j)
        c.nodes.push_back(center + std::polar(radius, kTwoPi * j / n));
    return c;
}

ContourSpec ContourSpec::from_region(const RegionSpec& region, int per_edge) {
    ContourSpec c;
    const auto& v = region.vertices();
    const auto n = v.size();
    for (size_t i = 0; i < n; ++i) {
        cplx a = v[i], b = v[(i + 1) % n];
        for (int j = 0; j < per_edge; ++j)
            c.nodes.push_back(a + (b - a) * (static_cast<double>(j) / per_edge));
    }
    return c;
}

namespace {

// Phase increment between consecutive samples, recursively bisected until
// each step is < pi/2.  A large modulus swing also triggers refinement and a
// couple of levels are always forced: a segment whose endpoint phases agree
// can still hide a full wrap when a zero sits close to the contour, and the
// modulus dip is the reliable witness of that.
double unwrap_segment(const HoloFn& f, cplx za, cplx zb, cplx fa, cplx fb,
                      double guard, int depth, int limit, int& max_depth) {
    if (std::abs(fa) < guard || std::abs(fb) < guard)
        throw NumericError("argument_count: |f| fell below the modulus guard "
                           "(zero on or near the contour?)");
    const double jump = std::arg(fb / fa);
    const double mod_swing = std::abs(std::log(std::abs(fb) / std::abs(fa)));
    constexpr int kMinDepth = 2;
    if (depth >= kMinDepth && std::abs(jump) < kPi / 2 && mod_swing < 0.7) {
        max_depth = std::max(max_depth, depth);
        return jump;
    }
    if (depth >= limit) {
        if (std::abs(jump) < kPi / 2) {
            max_depth = std::max(max_depth, depth);
            return jump;
        }
        throw NumericError("argument_count: refinement limit hit on an "
                           "unresolvable phase jump");
    }
    const cplx zm = 0.5 * (za + zb);
    const cplx fm = f(zm);
    return unwrap_segment(f, za, zm, fa, fm, guard, depth + 1, limit, max_depth) +
           unwrap_segment(f, zm, zb, fm, fb, guard, depth + 1, limit, max_depth);
}

} // namespace

ZeroCountReport argument_count(const HoloFn& f, const ContourSpec& contour) {
    const auto n = contour.nodes.size();
    if (n < 3) throw ConfigError("argument_count: contour needs >= 3 nodes");
    std::vector<cplx> fv(n);
    for (size_t i = 0; i < n; ++i) fv[i] = f(contour.nodes[i]);

    double total = 0.0;
    int max_depth = 0;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        total += unwrap_segment(f, contour.nodes[i], contour.nodes[j], fv[i], fv[j],
                                contour.min_modulus_guard, 0,
                                contour.refinement_limit, max_depth);
    }
    ZeroCountReport r;
    r.winding_total = total / kTwoPi;
    r.count = std::lround(r.winding_total);
    r.refinement_used = max_depth;
    if (std::abs(r.winding_total - static_cast<double>(r.count)) > 0.1)
        throw NumericError("argument_count: winding did not settle near an integer");
    if (r.count < 0)
        throw NumericError("argument_count: negative winding (poles are out of scope)");
    return r;
}

double jensen_bound(const HoloFn& f, cplx z0, double r, double R, double M,
                    int samples) {
    if (!(0 < r && r < R)) throw ConfigError("jensen_bound: need 0 < r < R");
    const double f0 = std::abs(f(z0));
    if (!(f0 > 0)) throw NumericError("jensen_bound: f(z0) = 0, bound undefined");
    if (M <= 0) {
        M = 0.0;
        for (int j = 0; j < samples; ++j)
            M = std::max(M, std::abs(f(z0 + std::polar(R, kTwoPi * j / samples))));
    }
    return (std::log(M) - std::log(f0)) / std::log(R / r);
}

double boundary_flux_mass(const FieldFn& phi, const RegionSpec& region, double step) {
    if (!(step > 0)) throw ConfigError("boundary_flux_mass: step must be positive");
    const auto& v = region.vertices();
    const auto nv = v.size();
    double flux = 0.0;
    for (size_t i = 0; i < nv; ++i) {
        cplx a = v[i], b = v[(i + 1) % nv];
        const double len = std::abs(b - a);
        const int m = std::max(4, static_cast<int>(std::ceil(len / step)));
        const cplx tangent = (b - a) / len;
        const cplx outward = cplx(tangent.imag(), -tangent.real()); // right of travel
        const double ds = len / m;
        for (int j = 0; j < m; ++j) {
            const cplx p = a + tangent * ((j + 0.5) * ds);
            const double dn =
                (phi(p + outward * step) - phi(p - outward * step)) / (2.0 * step);
            flux += dn * ds;
        }
    }
    return flux;
}

double delta_phi_mass(const FieldFn& phi, const RegionSpec& region, int resolution) {
    if (resolution < 4) throw ConfigError("delta_phi_mass: resolution too small");
    double a, b, c, d;
    region.bounding_box(a, b, c, d);
    const double sx = (b - a) / resolution;
    const double sy = (d - c) / resolution;
    const double s = std::min(sx, sy);
    double total = 0.0;
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            const cplx p(a + (i + 0.5) * sx, c + (j + 0.5) * sy);
            if (!region.contains(p)) continue;
            const double lap = (phi(p + s) + phi(p - s) + phi(p + kI * s) +
                                phi(p - kI * s) - 4.0 * phi(p)) /
                               (s * s);
            total += lap * sx * sy;
        }
    return total;
}

ZeroCountReport hager_verify(const HoloFn& f, const FieldFn& phi,
                             const RegionSpec& region, double h, double eps,
                             const std::vector<cplx>& boundary_points,
                             double C_cal) {
    if (!(h > 0) || !(eps > 0))
        throw ConfigError("hager_verify: h and eps must be positive");
    const double sqrt_eps = std::sqrt(eps);
    std::string flags;

    // boundary points must cover the boundary at spacing <= sqrt(eps)
    if (boundary_points.size() < 2)
        throw ConfigError("hager_verify: need boundary points");
    for (size_t i = 0; i < boundary_points.size(); ++i) {
        cplx a = boundary_points[i];
        cplx b = boundary_points[(i + 1) % boundary_points.size()];
        if (std::abs(b - a) > sqrt_eps * (1.0 + 1e-9))
            throw ConfigError("hager_verify: boundary points spaced wider than sqrt(eps)");
    }

    // envelope hypotheses, sampled; violations flagged but not fatal
    int upper_violations = 0, lower_violations = 0;
    for (const auto& zk : boundary_points) {
        const double lu = h * std::log(std::abs(f(zk)));
        if (lu > phi(zk) + eps) ++upper_violations;
        if (lu < phi(zk) - eps) ++lower_violations;
    }
    if (upper_violations)
        flags += "upper_envelope_violated(" + std::to_string(upper_violations) + ");";
    if (lower_violations)
        flags += "lower_bound_violated(" + std::to_string(lower_violations) + ");";

    ContourSpec contour;
    contour.nodes = boundary_points;
    ZeroCountReport r = argument_count(f, contour);
    r.has_weyl_compare = true;
    r.mass = boundary_flux_mass(phi, region, sqrt_eps / 4.0) / (kTwoPi * h);
    r.bound = C_cal * sqrt_eps / h;
    r.deviation = std::abs(static_cast<double>(r.count) - r.mass);
    r.flags = flags;
    return r;
}

void report_to_csv(const ZeroCountReport& r, std::ostream& os, bool header) {
    if (header) os << "count,winding,mass,bound,deviation,flags\n";
    os << r.count << ",";
    csv_cell(os, r.winding_total);
    csv_cell(os, r.mass);
    csv_cell(os, r.bound);
    csv_cell(os, r.deviation);
    os << (r.flags.empty() ? "ok" : r.flags) << "\n";
}

} // namespace speclab
