#include "speclab/svg.hpp"

#include <cstdio>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"

namespace speclab {

SvgCanvas::SvgCanvas(double xmin, double xmax, double ymin, double ymax, int width_px)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), width_px_(width_px) {
    if (!(xmax > xmin) || !(ymax > ymin))
        throw ConfigError("svg canvas needs a nonempty plane window");
    scale_ = width_px_ / (xmax_ - xmin_);
    height_px_ = static_cast<int>((ymax_ - ymin_) * scale_) + 1;
}

double SvgCanvas::to_x(double re) const { return (re - xmin_) * scale_; }
double SvgCanvas::to_y(double im) const { return (ymax_ - im) * scale_; }

void SvgCanvas::polyline(const std::vector<cplx>& pts, const std::string& stroke,
                         double stroke_width) {
    if (pts.size() < 2) return;
    std::string d = "<polyline fill=\"none\" stroke=\"" + stroke +
                    "\" stroke-width=\"" + fmt_double(stroke_width) + "\" points=\"";
    char buf[64];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof(buf), "%.3f,%.3f ", to_x(p.real()), to_y(p.imag()));
        d += buf;
    }
    d += "\"/>";
    elements_.push_back(std::move(d));
}

void SvgCanvas::circle(cplx center, double radius_px, const std::string& fill) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"%s\"/>",
                  to_x(center.real()), to_y(center.imag()), radius_px, fill.c_str());
    elements_.push_back(buf);
}

void SvgCanvas::text(cplx pos, const std::string& label) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "<text x=\"%.3f\" y=\"%.3f\" font-size=\"10\">",
                  to_x(pos.real()), to_y(pos.imag()));
    elements_.push_back(std::string(buf) + label + "</text>");
}

void SvgCanvas::write(std::ostream& os) const {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px_
       << "\" height=\"" << height_px_ << "\" viewBox=\"0 0 " << width_px_ << " "
       << height_px_ << "\">\n";
    for (const auto& e : elements_) os << e << "\n";
    os << "</svg>\n";
}

} // namespace speclab
