#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "speclab/types.hpp"

namespace speclab {

// Minimal SVG writer for z-plane figures.  Coordinate mapping: x = re,
// y axis points up (im), i.e. svg_y = (ymax - im) * scale.
class SvgCanvas {
public:
    SvgCanvas(double xmin, double xmax, double ymin, double ymax,
              int width_px = 640);

    void polyline(const std::vector<cplx>& pts, const std::string& stroke,
                  double stroke_width = 1.0);
    void circle(cplx center, double radius_px, const std::string& fill);
    void text(cplx pos, const std::string& label);

    void write(std::ostream& os) const;

private:
    double to_x(double re) const;
    double to_y(double im) const;

    double xmin_, xmax_, ymin_, ymax_;
    int width_px_, height_px_;
    double scale_;
    std::vector<std::string> elements_;
};

} // namespace speclab
