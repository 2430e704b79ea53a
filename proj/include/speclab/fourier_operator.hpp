#pragma once

#include "speclab/symbol.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Matrix of P = sum_k c_k(x) (hD)^k in the truncated Fourier basis
// e^k(x) = (2*pi)^{-1/2} e^{ikx}, k = -K..K.  Entry (j, k) is
// sum_r chat_r(j - k) * (h k)^r, offset by +K in storage.
struct FourierOperator {
    double h = 0.0;
    int K = 0;
    Mat matrix;      // (2K+1) x (2K+1)
    Symbol1D symbol; // generating symbol (kept for provenance checks)

    int dim() const { return 2 * K + 1; }
    // Storage index of mode k in -K..K.
    int mode_index(int k) const { return k + K; }
};

FourierOperator assemble(const Symbol1D& symbol, double h, int K);

} // namespace speclab
