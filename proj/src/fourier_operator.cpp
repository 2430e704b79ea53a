#include "speclab/fourier_operator.hpp"

#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

FourierOperator assemble(const Symbol1D& symbol, double h, int K) {
    if (!(h > 0)) throw ConfigError("assemble: h must be positive");
    if (K < 1) throw ConfigError("assemble: K must be >= 1");
    const int band = symbol.bandwidth();
    if (K < band)
        throw NumericError("assemble: truncation K = " + std::to_string(K) +
                           " below coefficient bandwidth " + std::to_string(band));

    const int n = 2 * K + 1;
    FourierOperator op{h, K, Mat::Zero(n, n), symbol};
    for (int r = 0; r <= symbol.order(); ++r) {
        const auto& c = symbol.coeffs[r];
        for (int k = -K; k <= K; ++k) {
            const double hk_pow = std::pow(h * k, r);
            if (hk_pow == 0.0 && !(r == 0)) continue;
            const int jlo = std::max(-K, k - band);
            const int jhi = std::min(K, k + band);
            for (int j = jlo; j <= jhi; ++j)
                op.matrix(j + K, k + K) += c.coeff(j - k) * hk_pow;
        }
    }
    return op;
}

} // namespace speclab
