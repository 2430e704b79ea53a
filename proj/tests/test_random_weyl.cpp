#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/grushin.hpp"
#include "speclab/linalg.hpp"
#include "speclab/random_weyl.hpp"
#include "speclab/rng.hpp"
#include "speclab/symbol.hpp"

using namespace speclab;

TEST_CASE("perturbation sampling is deterministic in the seed") {
    GaussianPerturbation a = sample_perturbation(0.1, 2.0, 7);
    GaussianPerturbation b = sample_perturbation(0.1, 2.0, 7);
    GaussianPerturbation c = sample_perturbation(0.1, 2.0, 8);
    CHECK(a.N_c == 20);
    CHECK((a.alpha - b.alpha).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.alpha - c.alpha).cwiseAbs().maxCoeff() > 0.0);
    CHECK(a.hs_norm == b.hs_norm);

    CHECK_THROWS_AS(embed(a, 10), ConfigError); // N_c = 20 > K = 10
    Mat M = embed(a, 25);
    CHECK(M.rows() == 51);
    CHECK(std::abs(M(25 + 22, 25)) == 0.0); // outside the block
}

TEST_CASE("Hilbert-Schmidt mass matches the block size") {
    const double h = 0.05, C1 = 2.0;
    const int m = 2 * 40 + 1;
    double acc = 0.0;
    int within = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        GaussianPerturbation q = sample_perturbation(h, C1, 100 + s);
        acc += q.hs_norm * q.hs_norm;
        if (q.hs_norm <= 1.2 * m) ++within;
    }
    acc /= samples;
    CHECK(std::abs(acc - double(m) * m) <= 0.05 * m * m);
    CHECK(within == samples); // concentration event at 500-sample level below
    int within500 = 0;
    for (int s = 0; s < 500; ++s)
        if (sample_perturbation(h, C1, 9000 + s).hs_norm <= 1.2 * m) ++within500;
    CHECK(within500 >= 495);
}

TEST_CASE("chi-square tail bound") {
    CHECK(tail_bound({1.0, 2.0}, 0.0) == 1.0);
    const double b = tail_bound({1.0}, 10.0);
    CHECK(b == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
    CHECK(std::exp(-10.0) <= b);

    // Monte-Carlo exceedance never beats the bound
    Philox rng(4, 9);
    const int N = 100000;
    int exceed = 0;
    for (int s = 0; s < N; ++s) {
        double sum = 0;
        for (int j = 0; j < 5; ++j) sum += std::norm(rng.gaussian_complex());
        if (sum >= 20.0) ++exceed;
    }
    CHECK(static_cast<double>(exceed) / N <= tail_bound({1, 1, 1, 1, 1}, 20.0));
}

TEST_CASE("effective variance: saturation and monotonicity in the cutoff") {
    Symbol1D p = make_exp_ix();
    FourierOperator op = assemble(p, 0.05, 80);
    const double s2 = effective_variance(op, cplx(0, 0.5), 2.0);
    CHECK(s2 >= 0.99);
    CHECK(s2 <= 1.0);
    CHECK(effective_variance(op, cplx(0, 0.5), 1.0) < s2);
}

TEST_CASE("the coupling scalar is Gaussian with the predicted variance") {
    Symbol1D p = make_exp_ix();
    FourierOperator op = assemble(p, 0.05, 80);
    GrushinData pair = singular_pair(op, cplx(0, 0.5));
    const double s2 = effective_variance(pair, 80, 0.05, 2.0);
    double acc = 0.0;
    const int N = 2000;
    for (int t = 0; t < N; ++t) {
        GaussianPerturbation q = sample_perturbation(0.05, 2.0, 5000 + t);
        acc += std::norm(pair.f0.dot(embed(q, 80) * pair.e0));
    }
    acc /= N;
    CHECK(std::abs(acc - s2) <= 0.05 * s2);
}

TEST_CASE("perturbed effective function stays above the small-probability floor") {
    // frozen calibration: 5th percentile of |E^delta| >= delta exp(-C eps/h), C = 0.25
    const double h = 0.1, delta = 1e-4;
    Symbol1D p = make_exp_ix();
    FourierOperator op = assemble(p, h, 40);
    GrushinData pr = singular_pair(op, cplx(0, 0.5));
    std::vector<double> vals;
    for (int t = 0; t < 500; ++t) {
        GaussianPerturbation q = sample_perturbation(h, 2.0, 777 + t);
        Mat Pd = op.matrix + delta * embed(q, 40);
        vals.push_back(std::abs(effective_at(Pd, cplx(0, 0.5), pr.e0, pr.f0)));
    }
    std::sort(vals.begin(), vals.end());
    const double eps = h * std::log(1.0 / delta);
    CHECK(vals[25] >= delta * std::exp(-0.25 * eps / h));
}

TEST_CASE("weyl experiment at desk scale") {
    ExperimentConfig cfg{make_exp_ix(), {0.05}, 4.0, 2.0, 2.0,
                         RegionSpec::rectangle(-1, 1, -0.5, 0.5), 6, 42};
    cfg.volume_resolution = 800;
    WeylResult r = run_weyl_experiment(cfg, 1);
    REQUIRE(r.summaries.size() == 1);
    const auto& s = r.summaries[0];
    CHECK(s.prediction == doctest::Approx((4 * kPi / 3) / (kTwoPi * 0.05)).epsilon(0.01));
    // counts redistribute towards the two-dimensional density
    CHECK(s.median_rel_deviation <= 0.5);
    // delta = 0 baseline: truncation spectrum on the mean line
    CHECK(s.baseline_count >= 39);
    CHECK(s.baseline_count <= 41);
    // trace sanity on one perturbed matrix
    const int K = 80;
    GaussianPerturbation q = sample_perturbation(0.05, 2.0, r.trials[0].seed);
    Mat Pd = assemble(cfg.symbol, 0.05, K).matrix + r.trials[0].delta * embed(q, K);
    Vec ev = eig(Pd).eigenvalues;
    CHECK(std::abs(ev.sum() - Pd.trace()) <= 1e-9 * Pd.norm());
}

TEST_CASE("weyl experiment rejects a shallow delta exponent") {
    ExperimentConfig cfg{make_exp_ix(), {0.05}, 2.0, 2.0, 2.0,
                         RegionSpec::rectangle(-1, 1, -0.5, 0.5), 2, 1};
    CHECK_THROWS_AS(run_weyl_experiment(cfg, 1), ConfigError);
}

TEST_CASE("trivial region below the range sees no eigenvalues") {
    ExperimentConfig cfg{make_exp_ix(), {0.1}, 4.0, 2.0, 2.0,
                         RegionSpec::rectangle(-1, 1, -9, -8), 3, 7};
    cfg.volume_resolution = 200;
    WeylResult r = run_weyl_experiment(cfg, 1);
    for (const auto& t : r.trials) CHECK(t.count == 0);
}

TEST_CASE("csv export is bit-stable and scheduling independent") {
    ExperimentConfig cfg{make_exp_ix(), {0.1}, 4.0, 2.0, 2.0,
                         RegionSpec::rectangle(-1, 1, -0.5, 0.5), 4, 99};
    cfg.volume_resolution = 400;
    std::ostringstream a, b, c;
    weyl_trials_to_csv(run_weyl_experiment(cfg, 1), a);
    weyl_trials_to_csv(run_weyl_experiment(cfg, 1), b);
    weyl_trials_to_csv(run_weyl_experiment(cfg, 3), c);
    CHECK(a.str() == b.str());
    CHECK(a.str() == c.str());
    CHECK(a.str().rfind("h,delta,trial,count,ring_count,prediction,epsilon,"
                        "bound_scale,seed\n", 0) == 0);
}
