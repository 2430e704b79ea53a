#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "speclab/errors.hpp"
#include "speclab/linalg.hpp"
#include "speclab/rng.hpp"

using namespace speclab;

namespace {

Mat random_matrix(int n, uint64_t seed) {
    Philox rng(seed, 0);
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.gaussian_complex();
    return A;
}

Mat random_unitary(int n, uint64_t seed) {
    Eigen::HouseholderQR<Mat> qr(random_matrix(n, seed));
    return qr.householderQ();
}

// multiset match within tol: greedy nearest pairing
bool multiset_close(Vec a, Vec b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<cplx> bb(b.data(), b.data() + b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        auto best = std::min_element(bb.begin(), bb.end(), [&](cplx x, cplx y) {
            return std::abs(x - a(i)) < std::abs(y - a(i));
        });
        if (std::abs(*best - a(i)) > tol) return false;
        bb.erase(best);
    }
    return true;
}

} // namespace

TEST_CASE("eig on small fixtures") {
    Mat D = Mat::Zero(3, 3);
    D(0, 0) = 1; D(1, 1) = 2; D(2, 2) = 3;
    SpectrumResult r = eig(D);
    CHECK(r.eigenvalues(0) == cplx(1, 0));
    CHECK(r.eigenvalues(1) == cplx(2, 0));
    CHECK(r.eigenvalues(2) == cplx(3, 0));
    CHECK(r.max_residual <= 1e-9 * D.norm());

    // companion matrix of z^2 - 1
    Mat C = Mat::Zero(2, 2);
    C(0, 1) = 1; C(1, 0) = 1;
    r = eig(C);
    CHECK(std::abs(r.eigenvalues(0) + 1.0) < 1e-14);
    CHECK(std::abs(r.eigenvalues(1) - 1.0) < 1e-14);

    // nilpotent Jordan block: double eigenvalue 0 up to sqrt(eps)
    Mat J = Mat::Zero(2, 2);
    J(0, 1) = 1;
    r = eig(J);
    CHECK(std::abs(r.eigenvalues(0)) < 1e-7);
    CHECK(std::abs(r.eigenvalues(1)) < 1e-7);
}

TEST_CASE("eig respects similarity and trace") {
    const int n = 60;
    Mat A = random_matrix(n, 11);
    Mat U = random_unitary(n, 12);
    Mat B = U * A * U.adjoint();
    Vec wa = eig(A).eigenvalues;
    Vec wb = eig(B).eigenvalues;
    CHECK(multiset_close(wa, wb, 1e-8 * A.norm()));
    CHECK(std::abs(wa.sum() - A.trace()) <= 1e-9 * A.norm());
}

TEST_CASE("eig rejects oversized input") {
    CHECK_THROWS_AS(eig(Mat::Zero(2, 3)), ConfigError);
}

TEST_CASE("smallest singular value fixtures") {
    Mat I = Mat::Identity(5, 5);
    CHECK(smallest_singular(I).s_min == doctest::Approx(1.0).epsilon(1e-12));

    Mat D = Mat::Zero(2, 2);
    D(0, 0) = 3; D(1, 1) = 1e-8;
    CHECK(smallest_singular(D).s_min == doctest::Approx(1e-8).epsilon(1e-10));

    Mat T = Mat::Zero(2, 2);
    T(0, 0) = -1; T(0, 1) = 1; T(1, 1) = -1;
    const double expect = (std::sqrt(5.0) - 1.0) / 2.0;
    SingularTriplet t = smallest_singular(T);
    CHECK(t.s_min == doctest::Approx(expect).epsilon(1e-12));
    CHECK((T * t.right - t.s_min * t.left).norm() <= 1e-10 * T.norm());
    CHECK(std::abs(t.right.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(t.left.norm() - 1.0) <= 1e-12);
}

TEST_CASE("smallest singular value against an independent SVD") {
    const int n = 80;
    Mat A = random_matrix(n, 21);
    double ours = smallest_singular(A).s_min;
    Eigen::JacobiSVD<Mat> svd(A);
    double oracle = svd.singularValues()(n - 1);
    CHECK(ours == doctest::Approx(oracle).epsilon(1e-10));

    Philox rng(22, 0);
    for (int trial = 0; trial < 100; ++trial) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = rng.gaussian_complex();
        x.normalize();
        CHECK(ours <= (A * x).norm() + 1e-12);
    }
}

TEST_CASE("smallest singular value large-n inverse-iteration path") {
    // known smallest singular value: unitary conjugation of a diagonal
    const int n = 600;
    Eigen::VectorXd d(n);
    Philox rng(31, 0);
    for (int i = 0; i < n; ++i) d(i) = 0.5 + rng.uniform01();
    d(77) = 1e-5;
    Mat U = random_unitary(n, 32), V = random_unitary(n, 33);
    Mat A = U * d.asDiagonal() * V.adjoint();
    SingularTriplet t = smallest_singular(A);
    CHECK(t.s_min == doctest::Approx(1e-5).epsilon(1e-8));
    CHECK((A * t.right - t.s_min * t.left).norm() <= 1e-10 * A.norm());
}

TEST_CASE("hermitian smallest two") {
    Mat D = Mat::Zero(3, 3);
    D(0, 0) = 5; D(1, 1) = 1; D(2, 2) = 3;
    HermitianSmallestTwo r = hermitian_smallest_two(D);
    CHECK(r.lambda0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.lambda1 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(r.v0.dot(r.v1)) < 1e-12);

    // rank one: two zero eigenvalues below the top
    Vec v = Vec::Zero(3);
    v(0) = 0.6; v(1) = 0.8;
    Mat R = v * v.adjoint();
    r = hermitian_smallest_two(R);
    CHECK(std::abs(r.lambda0) < 1e-12);
    CHECK(std::abs(r.lambda1) < 1e-12);

    // diagonal (P - z)^H (P - z) with P = diag(h k), z = 0.05
    const double h = 0.1;
    const int K = 5;
    Mat P = Mat::Zero(2 * K + 1, 2 * K + 1);
    for (int k = -K; k <= K; ++k) P(k + K, k + K) = h * k;
    Mat S = P;
    S.diagonal().array() -= cplx(0.05, 0.0);
    r = hermitian_smallest_two(S.adjoint() * S);
    CHECK(r.lambda0 == doctest::Approx(0.0025).epsilon(1e-10));

    Mat NH = Mat::Zero(2, 2);
    NH(0, 1) = 1;
    CHECK_THROWS_AS(hermitian_smallest_two(NH), NumericError);
}

TEST_CASE("solve fixtures and condition refusal") {
    Mat I = Mat::Identity(4, 4);
    Vec b(4);
    b << 1, 2, 3, 4;
    CHECK((solve(I, b) - b).norm() < 1e-14);

    Mat D = Mat::Zero(2, 2);
    D(0, 0) = 2; D(1, 1) = 4;
    Vec b2(2);
    b2 << 2, 4;
    Vec x = solve(D, b2);
    CHECK(std::abs(x(0) - 1.0) < 1e-14);
    CHECK(std::abs(x(1) - 1.0) < 1e-14);

    const int n = 50;
    Mat A = random_matrix(n, 41) + 10.0 * Mat::Identity(n, n);
    Vec xk(n);
    Philox rng(42, 0);
    for (int i = 0; i < n; ++i) xk(i) = rng.gaussian_complex();
    Vec rhs = A * xk;
    CHECK((solve(A, rhs) - xk).norm() <= 1e-10 * xk.norm());

    Mat S = Mat::Zero(2, 2);
    S(0, 0) = 1; S(1, 1) = 1e-20;
    CHECK_THROWS_AS(solve(S, b2), NumericError);
}
