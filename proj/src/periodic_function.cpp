#include "speclab/periodic_function.hpp"

#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

namespace {
void require_odd(Eigen::Index n) {
    if (n < 1 || n % 2 == 0)
        throw ConfigError("periodic grid size must be odd and positive, got " +
                          std::to_string(n));
}
} // namespace

PeriodicFunction::PeriodicFunction(Vec values) {
    require_odd(values.size());
    values_ = std::move(values);
    values_to_fourier();
}

PeriodicFunction PeriodicFunction::from_fourier(Vec coeffs) {
    require_odd(coeffs.size());
    PeriodicFunction f;
    f.fourier_ = std::move(coeffs);
    f.fourier_to_values();
    return f;
}

PeriodicFunction PeriodicFunction::from_callable(int grid_size,
                                                 const std::function<cplx(double)>& f) {
    require_odd(grid_size);
    Vec v(grid_size);
    for (int j = 0; j < grid_size; ++j)
        v(j) = f(kTwoPi * j / grid_size);
    return PeriodicFunction(std::move(v));
}

double PeriodicFunction::grid_node(int j) const {
    return kTwoPi * j / grid_size();
}

void PeriodicFunction::values_to_fourier() {
    const int n = grid_size();
    const int half = max_mode();
    fourier_.resize(n);
    for (int m = -half; m <= half; ++m) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += values_(j) * std::polar(1.0, -m * grid_node(j));
        fourier_(m + half) = acc / static_cast<double>(n);
    }
}

void PeriodicFunction::fourier_to_values() {
    const int n = static_cast<int>(fourier_.size());
    const int half = (n - 1) / 2;
    values_.resize(n);
    for (int j = 0; j < n; ++j) {
        const double x = kTwoPi * j / n;
        cplx acc = 0.0;
        for (int m = -half; m <= half; ++m)
            acc += fourier_(m + half) * std::polar(1.0, m * x);
        values_(j) = acc;
    }
}

cplx PeriodicFunction::coeff(int n) const {
    const int half = max_mode();
    if (n < -half || n > half) return 0.0;
    return fourier_(n + half);
}

cplx PeriodicFunction::eval(double x) const {
    const int half = max_mode();
    cplx acc = 0.0;
    for (int m = -half; m <= half; ++m)
        acc += fourier_(m + half) * std::polar(1.0, m * x);
    return acc;
}

cplx PeriodicFunction::derivative_at(double x) const {
    const int half = max_mode();
    cplx acc = 0.0;
    for (int m = -half; m <= half; ++m)
        acc += cplx(0.0, m) * fourier_(m + half) * std::polar(1.0, m * x);
    return acc;
}

PeriodicFunction PeriodicFunction::derivative() const {
    const int half = max_mode();
    Vec d(fourier_.size());
    for (int m = -half; m <= half; ++m)
        d(m + half) = cplx(0.0, m) * fourier_(m + half);
    return from_fourier(std::move(d));
}

int PeriodicFunction::bandwidth(double tol) const {
    const int half = max_mode();
    const double scale = fourier_.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0;
    int band = 0;
    for (int m = -half; m <= half; ++m)
        if (std::abs(fourier_(m + half)) > tol * scale)
            band = std::max(band, std::abs(m));
    return band;
}

PeriodicFunction PeriodicFunction::resampled(int new_grid_size) const {
    require_odd(new_grid_size);
    const int new_half = (new_grid_size - 1) / 2;
    Vec c = Vec::Zero(new_grid_size);
    const int keep = std::min(new_half, max_mode());
    for (int m = -keep; m <= keep; ++m)
        c(m + new_half) = coeff(m);
    return from_fourier(std::move(c));
}

bool PeriodicFunction::same_function(const PeriodicFunction& other, double tol) const {
    const int half = std::max(max_mode(), other.max_mode());
    double scale = std::max(fourier_.cwiseAbs().maxCoeff(),
                            other.fourier_.cwiseAbs().maxCoeff());
    if (scale == 0.0) return true;
    for (int m = -half; m <= half; ++m)
        if (std::abs(coeff(m) - other.coeff(m)) > tol * scale) return false;
    return true;
}

} // namespace speclab
