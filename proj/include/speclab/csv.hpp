#pragma once

#include <cstdio>
#include <ostream>
#include <string>

namespace speclab {

// All numeric CSV output goes through one formatter so identical doubles
// always serialize to identical bytes.
inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void csv_cell(std::ostream& os, double x, bool last = false) {
    os << fmt_double(x) << (last ? "\n" : ",");
}

inline void csv_cell(std::ostream& os, long x, bool last = false) {
    os << x << (last ? "\n" : ",");
}

} // namespace speclab
