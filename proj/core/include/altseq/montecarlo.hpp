#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "altseq/permstat.hpp"
#include "altseq/permutation.hpp"
#include "altseq/rational.hpp"

namespace altseq {

// (seed, streamId) fully determine every draw, bit for bit, on any platform.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// PCG-XSH-RR 64/32. The stream id selects the LCG increment, giving 2^63
// independent sequences per seed.
class Pcg32 {
public:
    explicit Pcg32(RngSeed s);
    std::uint32_t next();
    // Unbiased draw from [0, bound) (Lemire's multiply-shift with the exact
    // rejection threshold).
    std::uint32_t bounded(std::uint32_t bound);

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

// Exactly uniform over S_n: Fisher-Yates driven by unbiased bounded draws.
Permutation random_permutation(int n, Pcg32& rng);

struct SampleStats {
    int n = 0;
    std::int64_t count = 0;
    // Exact accumulators; the derived doubles below are recomputed on merge.
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    std::map<int, std::int64_t> histogram;

    double mean = 0.0;
    double variance = 0.0; // unbiased
    double se_mean = 0.0;
    // Empirical CDF on the standardized grid t = (value - 2n/3)/sqrt(n).
    std::vector<std::pair<double, double>> cdf_grid;

    void finalize(); // recompute mean/variance/se/cdf from the accumulators
};

// Empirical distribution of as_n over `count` uniform samples.
SampleStats sample_as_stats(int n, std::int64_t count, RngSeed seed);

// Associative, deterministic merge: counts and exact sums add, histograms
// add, derived statistics are recomputed.
SampleStats merge(const SampleStats& a, const SampleStats& b);

double normal_cdf(double z);
// K(t) = Phi(t / sqrt(8/45)), the limiting law of (as_n - 2n/3)/sqrt(n).
double gaussian_limit_cdf(double t);

// Kolmogorov-Smirnov sup distance of the sample's standardized empirical CDF
// from K(t).
double ks_distance_to_gaussian(const SampleStats& stats);
double gaussian_limit_distance(int n, std::int64_t count, RngSeed seed);

struct EstimateResult {
    double mean = 0.0;
    double se = 0.0;
    std::int64_t count = 0;
};

inline constexpr std::int64_t kDefaultSampleBudget = 200'000'000; // n * count

// Monte Carlo estimate of E_sigma(n) = mean of len_sigma over S_n.
// Throws BudgetExceeded when n * count overruns the budget.
EstimateResult estimate_E_sigma(int n, const DescentWord& sigma, std::int64_t count, RngSeed seed,
                                std::int64_t budget = kDefaultSampleBudget);

struct ExhaustiveMoments {
    BigRat nu1;
    BigRat nu2; // second factorial moment
    BigInt even_count;
    BigInt odd_count;
};

// Exhaustive replacement for sampling at n <= 8: exact nu_1, nu_2 and the
// even/odd split of as over all of S_n.
ExhaustiveMoments exhaustive_as_moments(int n);

} // namespace altseq
