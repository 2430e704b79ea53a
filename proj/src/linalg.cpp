#include "speclab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "speclab/csv.hpp"
#include "speclab/errors.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace speclab {

namespace {

void require_finite(const Mat& A, const char* who) {
    if (!A.allFinite())
        throw NumericError(std::string(who) + ": matrix has non-finite entries");
}

int checked_dim(const Mat& A, const char* who) {
    if (A.rows() != A.cols() || A.rows() < 1)
        throw ConfigError(std::string(who) + ": square matrix required");
    if (A.rows() > kernel_tolerances().eig_max_n)
        throw ConfigError(std::string(who) + ": dimension exceeds advertised maximum");
    require_finite(A, who);
    return static_cast<int>(A.rows());
}

// LU wrapper reused by solve(), the certification loop and inverse iteration.
class LuFactors {
public:
    explicit LuFactors(Mat A) : lu_(std::move(A)), piv_(lu_.rows()) {
        info_ = LAPACKE_zgetrf(LAPACK_COL_MAJOR, static_cast<int>(lu_.rows()),
                               static_cast<int>(lu_.cols()), lu_.data(),
                               static_cast<int>(lu_.rows()), piv_.data());
    }
    bool singular() const { return info_ > 0; }
    int info() const { return info_; }

    double rcond(double anorm_1) const {
        double rc = 0.0;
        LAPACKE_zgecon(LAPACK_COL_MAJOR, '1', static_cast<int>(lu_.rows()),
                       lu_.data(), static_cast<int>(lu_.rows()), anorm_1, &rc);
        return rc;
    }

    // op: 'N' solves A x = b, 'C' solves A^H x = b.
    Vec apply_inverse(const Vec& b, char op = 'N') const {
        Vec x = b;
        LAPACKE_zgetrs(LAPACK_COL_MAJOR, op, static_cast<int>(lu_.rows()), 1,
                       lu_.data(), static_cast<int>(lu_.rows()), piv_.data(),
                       x.data(), static_cast<int>(lu_.rows()));
        return x;
    }

    Mat apply_inverse(const Mat& B) const {
        Mat X = B;
        LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', static_cast<int>(lu_.rows()),
                       static_cast<int>(B.cols()), lu_.data(),
                       static_cast<int>(lu_.rows()), piv_.data(), X.data(),
                       static_cast<int>(lu_.rows()));
        return X;
    }

private:
    Mat lu_;
    std::vector<int> piv_;
    int info_;
};

// Best-effort certificate for one reported eigenvalue: a few inverse-power
// steps on the normal equations of (A - lambda I); the returned value
// min_k ||(A - lambda) x_k|| upper-bounds the distance of lambda to
// exactness (s_min of the shifted matrix).
double certify_eigenvalue(const Mat& A, cplx lambda) {
    const int n = static_cast<int>(A.rows());
    Mat shifted = A;
    shifted.diagonal().array() -= lambda;
    LuFactors lu(shifted);
    if (lu.singular()) return 0.0; // exact zero pivot: lambda is exact
    Vec x(n);
    for (int j = 0; j < n; ++j)
        x(j) = std::polar(1.0, 0.7 * j);
    x.normalize();
    double best = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        x = lu.apply_inverse(x, 'C');
        x = lu.apply_inverse(x, 'N');
        double nx = x.norm();
        if (!(nx > 0) || !x.allFinite()) break;
        x /= nx;
        double r = (shifted * x).norm();
        best = std::min(best, r);
        if (r < 1e-15 * A.norm()) break;
    }
    return best;
}

SingularTriplet svd_smallest_full(const Mat& A) {
    const int n = static_cast<int>(A.rows());
    Mat work = A;
    Mat U(n, n), VT(n, n);
    Eigen::VectorXd s(n);
    Eigen::VectorXd superb(std::max(1, n - 1));
    int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', n, n, work.data(), n,
                              s.data(), U.data(), n, VT.data(), n, superb.data());
    if (info != 0)
        throw NumericError("zgesvd failed to converge", info);
    SingularTriplet t;
    t.s_min = s(n - 1);
    t.left = U.col(n - 1);
    t.right = VT.row(n - 1).conjugate().transpose();
    return t;
}

// Inverse iteration on (A^H A)^{-1} through two triangular solves per step.
// Returns false when progress stagnates without meeting the residual
// contract, in which case the caller falls back to the full SVD.
bool svd_smallest_invit(const Mat& A, SingularTriplet& out) {
    const auto& tol = kernel_tolerances();
    const int n = static_cast<int>(A.rows());
    LuFactors lu(A);
    if (lu.singular()) return false;
    const double anorm_f = A.norm();
    Vec v(n);
    for (int j = 0; j < n; ++j)
        v(j) = std::polar(1.0, 0.7 * j);
    v.normalize();
    double sigma_prev = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 0; it < tol.invit_max_steps; ++it) {
        Vec w = lu.apply_inverse(v, 'C');
        w = lu.apply_inverse(w, 'N');
        double nw = w.norm();
        if (!(nw > 0) || !w.allFinite()) return false;
        v = w / nw;
        Vec av = A * v;
        double sigma = av.norm();
        // converged when the left residual meets the contract
        Vec u = sigma > 0 ? Vec(av / sigma) : Vec(Vec::Unit(n, 0));
        double resid = (A.adjoint() * u - sigma * v).norm();
        if (resid <= tol.svd_residual * anorm_f) {
            out.s_min = sigma;
            out.left = u;
            out.right = v;
            return true;
        }
        if (sigma >= sigma_prev * (1.0 - 1e-12)) {
            if (++stagnant >= 5) return false;
        } else {
            stagnant = 0;
        }
        sigma_prev = sigma;
    }
    return false;
}

} // namespace

SpectrumResult eig(const Mat& A) {
    const int n = checked_dim(A, "eig");
    Mat work = A;
    Vec w(n);
    int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n,
                             w.data(), nullptr, 1, nullptr, 1);
    if (info < 0) throw NumericError("zgeev: bad argument", info);
    if (info > 0)
        throw NumericError("eig: QR iteration failed to converge at index " +
                               std::to_string(info),
                           info);
    std::sort(w.data(), w.data() + n, [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    SpectrumResult res;
    res.eigenvalues = std::move(w);

    // Certify a deterministic sample; full certification would double the
    // cost for large n without changing the contract.
    const int samples = n <= 8 ? n : (n > 1200 ? 2 : (n > 600 ? 3 : 6));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        int idx = samples == 1 ? 0
                               : static_cast<int>((static_cast<long>(s) * (n - 1)) /
                                                  (samples - 1));
        worst = std::max(worst, certify_eigenvalue(A, res.eigenvalues(idx)));
    }
    res.max_residual = worst;
    return res;
}

SingularTriplet smallest_singular(const Mat& A) {
    const int n = checked_dim(A, "smallest_singular");
    const auto& tol = kernel_tolerances();
    SingularTriplet t;
    if (n > tol.svd_full_max_n && svd_smallest_invit(A, t)) {
        // fall through to the shared checks below
    } else {
        t = svd_smallest_full(A);
    }
    const double anorm_f = A.norm();
    if (std::abs(t.left.norm() - 1.0) > tol.vector_norm ||
        std::abs(t.right.norm() - 1.0) > tol.vector_norm)
        throw NumericError("smallest_singular: vectors drifted from unit norm");
    if ((A * t.right - t.s_min * t.left).norm() > tol.svd_residual * std::max(anorm_f, 1e-300))
        throw NumericError("smallest_singular: triplet residual above contract");
    return t;
}

HermitianSmallestTwo hermitian_smallest_two(const Mat& A) {
    const int n = checked_dim(A, "hermitian_smallest_two");
    if (n < 2)
        throw ConfigError("hermitian_smallest_two: dimension must be >= 2");
    const auto& tol = kernel_tolerances();
    const double anorm_f = A.norm();
    if ((A - A.adjoint()).norm() > tol.hermitian_skew * std::max(anorm_f, 1e-300))
        throw NumericError("hermitian_smallest_two: matrix is not Hermitian");
    Mat H = 0.5 * (A + A.adjoint());

    Eigen::VectorXd lambda(n);
    Mat Z(n, 2);
    std::vector<int> isuppz(2 * 2);
    int m = 0;
    int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, H.data(), n,
                              0.0, 0.0, 1, 2, 0.0, &m, lambda.data(), Z.data(),
                              n, isuppz.data());
    if (info != 0 || m < 2)
        throw NumericError("zheevr failed", info);

    HermitianSmallestTwo out;
    out.lambda0 = lambda(0);
    out.lambda1 = lambda(1);
    out.v0 = Z.col(0);
    out.v1 = Z.col(1);
    Mat Hs = 0.5 * (A + A.adjoint());
    if ((Hs * out.v0 - out.lambda0 * out.v0).norm() >
            tol.hermitian_residual * std::max(anorm_f, 1e-300) ||
        (Hs * out.v1 - out.lambda1 * out.v1).norm() >
            tol.hermitian_residual * std::max(anorm_f, 1e-300))
        throw NumericError("hermitian_smallest_two: eigenpair residual above contract");
    return out;
}

Mat solve_many(const Mat& A, const Mat& B) {
    const int n = checked_dim(A, "solve");
    if (B.rows() != n) throw ConfigError("solve: dimension mismatch");
    const auto& tol = kernel_tolerances();
    double anorm_1 = 0.0;
    for (int j = 0; j < n; ++j)
        anorm_1 = std::max(anorm_1, A.col(j).cwiseAbs().sum());
    LuFactors lu(A);
    if (lu.singular())
        throw NumericError("solve: matrix is exactly singular");
    double rc = lu.rcond(anorm_1);
    if (!(rc > 1.0 / tol.condition_max))
        throw NumericError("solve: condition estimate " +
                           std::to_string(rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity()) +
                           " exceeds limit");
    Mat X = lu.apply_inverse(B);
    // one step of iterative refinement keeps the residual near eps * ||A|| ||x||
    Mat R = B - A * X;
    X += lu.apply_inverse(R);
    return X;
}

Vec solve(const Mat& A, const Vec& b) {
    return solve_many(A, b);
}

void dump_matrix_csv(const Mat& A, std::ostream& os) {
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            os << i << "," << j << ",";
            csv_cell(os, A(i, j).real());
            csv_cell(os, A(i, j).imag(), true);
        }
}

} // namespace speclab
