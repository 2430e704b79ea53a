#pragma once

#include <ostream>

#include "speclab/types.hpp"

namespace speclab {

struct SpectrumResult {
    Vec eigenvalues;      // all n, with multiplicity, sorted by (re, im)
    double max_residual;  // certified backward-error proxy (see eig)
};

struct SingularTriplet {
    double s_min;
    Vec left;   // unit, A * right ~= s_min * left
    Vec right;  // unit
};

struct HermitianSmallestTwo {
    double lambda0, lambda1; // two smallest eigenvalues, lambda0 <= lambda1
    Vec v0, v1;              // orthonormal eigenvectors
};

// Eigenvalues of a general dense complex matrix (Hessenberg + implicitly
// shifted QR via LAPACK).  The backward error of a deterministic sample of
// the reported eigenvalues is certified by inverse iteration and the worst
// value returned as max_residual (an upper bound on s_min(A - lambda I) for
// each sampled lambda).
SpectrumResult eig(const Mat& A);

// Smallest singular value with unit left/right vectors.  Full
// bidiagonalization up to svd_full_max_n, shifted inverse iteration on the
// normal equations above that, with a full-SVD fallback on stagnation.
SingularTriplet smallest_singular(const Mat& A);

// Two smallest eigenpairs of a Hermitian matrix.  The input is checked
// against the skew tolerance and symmetrized before factorization.
HermitianSmallestTwo hermitian_smallest_two(const Mat& A);

// LU solve with a condition estimate; refuses when cond exceeds
// kernel_tolerances().condition_max.
Vec solve(const Mat& A, const Vec& b);

// Multiple right-hand sides, same contract as solve().
Mat solve_many(const Mat& A, const Mat& B);

// Debug dump, one entry per line: "row,col,re,im".
void dump_matrix_csv(const Mat& A, std::ostream& os);

} // namespace speclab
