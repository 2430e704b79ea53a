#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "speclab/fourier_operator.hpp"
#include "speclab/grushin.hpp"
#include "speclab/region.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Random coupling block alpha_{j,k}, |j|,|k| <= N_c = floor(C1/h), iid
// standard complex Gaussians drawn from a counter-based stream, so a given
// seed always reproduces the same block.
struct GaussianPerturbation {
    double h = 0.0;
    double C1 = 0.0;
    int N_c = 0;
    uint64_t seed = 0;
    Mat alpha;          // (2 N_c + 1)^2
    double hs_norm = 0; // Frobenius norm, summed in storage order
};

GaussianPerturbation sample_perturbation(double h, double C1, uint64_t seed);

// Embeds the block into the (2K+1)-dimensional operator basis (zero outside
// the cutoff block).  Errors when N_c > K.
Mat embed(const GaussianPerturbation& q, int K);

// exp(C0/(2 s1) * sum sigma_j^2 - x/(2 s1)) with s1 = max sigma_j^2 and
// C0 = 2, clamped to <= 1.  Upper bound for P(sum |X_j|^2 >= x) when
// X_j ~ N_C(0, sigma_j^2) independent.
double tail_bound(const std::vector<double>& sigmas, double x);

// sigma^2 = (sum_{|j|<=N_c} |e0_j|^2) * (sum_{|k|<=N_c} |f0_k|^2): variance
// of the Gaussian scalar (Q_omega e0 | f0) restricted to the cutoff block.
double effective_variance(const GrushinData& pair, int K, double h, double C1);
double effective_variance(const FourierOperator& op, cplx z, double C1);

struct ExperimentConfig {
    Symbol1D symbol;
    std::vector<double> h_list;
    double kappa_prime = 4.0; // delta = h^kappa_prime
    double C1 = 2.0;
    double K_factor = 2.0; // K = ceil(K_factor * C1 / h)
    RegionSpec region;
    int trials = 20;
    uint64_t seed = 1;
    double ring_width = -1.0; // <0: sqrt(eps) capped at 0.45 * min side
    double C_cal = 1.0;       // deviation-band constant recorded in summaries
    int volume_resolution = 1500;
};

struct WeylTrial {
    double h = 0.0, delta = 0.0;
    int trial = 0;
    long count = 0;      // eigenvalues strictly inside the region
    long ring_count = 0; // eigenvalues within ring_width of the boundary
    double prediction = 0.0, epsilon = 0.0, bound_scale = 0.0;
    uint64_t seed = 0; // derived stream id
};

struct WeylSummary {
    double h = 0.0, delta = 0.0, prediction = 0.0;
    double epsilon = 0.0, bound_scale = 0.0, ring_width = 0.0;
    long baseline_count = 0; // delta = 0 spectrum of the truncation
    double median_deviation = 0.0, mean_deviation = 0.0;
    double median_rel_deviation = 0.0;
    double frac_within_band = 0.0; // |count - prediction| <= C_cal * bound_scale
    double C_cal = 1.0;
};

struct WeylResult {
    std::vector<WeylTrial> trials;
    std::vector<WeylSummary> summaries; // one per h
};

WeylResult run_weyl_experiment(const ExperimentConfig& config, int workers = 1);

// CSV schema: "h,delta,trial,count,ring_count,prediction,epsilon,bound_scale,seed"
void weyl_trials_to_csv(const WeylResult& r, std::ostream& os);
void weyl_summary_to_csv(const WeylResult& r, std::ostream& os);

} // namespace speclab
