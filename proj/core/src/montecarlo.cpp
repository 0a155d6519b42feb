#include "altseq/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "altseq/errors.hpp"

namespace altseq {

namespace {
constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;
}

Pcg32::Pcg32(RngSeed s) : state_(0), inc_((s.stream << 1u) | 1u) {
    next();
    state_ += s.seed;
    next();
}

std::uint32_t Pcg32::next() {
    std::uint64_t old = state_;
    state_ = old * kPcgMult + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(next()) * bound;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < bound) {
        std::uint32_t threshold = (0u - bound) % bound;
        while (lo < threshold) {
            m = static_cast<std::uint64_t>(next()) * bound;
            lo = static_cast<std::uint32_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 32u);
}

Permutation random_permutation(int n, Pcg32& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(v[i], v[rng.bounded(static_cast<std::uint32_t>(i) + 1)]);
    return Permutation::unchecked(std::move(v));
}

void SampleStats::finalize() {
    if (count <= 0) return;
    double c = static_cast<double>(count);
    mean = static_cast<double>(sum) / c;
    if (count >= 2) {
        // unbiased: (sum_sq - sum^2/c) / (c - 1), exact numerator first
        double num = static_cast<double>(sum_sq) - static_cast<double>(sum) / c * static_cast<double>(sum);
        variance = num / (c - 1.0);
        if (variance < 0) variance = 0; // rounding guard for constant samples
    } else {
        variance = 0.0;
    }
    se_mean = std::sqrt(variance / c);

    cdf_grid.clear();
    cdf_grid.reserve(histogram.size());
    double center = 2.0 * n / 3.0;
    double scale = std::sqrt(static_cast<double>(n));
    std::int64_t cum = 0;
    for (const auto& [value, cnt] : histogram) {
        cum += cnt;
        cdf_grid.emplace_back((value - center) / scale, static_cast<double>(cum) / c);
    }
}

SampleStats sample_as_stats(int n, std::int64_t count, RngSeed seed) {
    if (n < 0 || count < 1) throw OutOfRange("sample_as_stats needs n >= 0, count >= 1");
    Pcg32 rng(seed);
    SampleStats s;
    s.n = n;
    s.count = count;
    for (std::int64_t i = 0; i < count; ++i) {
        int v = as_len(random_permutation(n, rng));
        s.sum += v;
        s.sum_sq += static_cast<std::int64_t>(v) * v;
        ++s.histogram[v];
    }
    s.finalize();
    return s;
}

SampleStats merge(const SampleStats& a, const SampleStats& b) {
    if (a.n != b.n) throw OutOfRange("cannot merge statistics for different n");
    SampleStats m;
    m.n = a.n;
    m.count = a.count + b.count;
    m.sum = a.sum + b.sum;
    m.sum_sq = a.sum_sq + b.sum_sq;
    m.histogram = a.histogram;
    for (const auto& [value, cnt] : b.histogram) m.histogram[value] += cnt;
    m.finalize();
    return m;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double gaussian_limit_cdf(double t) { return normal_cdf(t / std::sqrt(8.0 / 45.0)); }

double ks_distance_to_gaussian(const SampleStats& stats) {
    // Sup over the jump points of the empirical CDF: compare K(t) against
    // the CDF value from both sides of each jump.
    double dist = 0.0;
    double prev = 0.0;
    for (const auto& [t, cdf] : stats.cdf_grid) {
        double k = gaussian_limit_cdf(t);
        dist = std::max(dist, std::max(std::abs(cdf - k), std::abs(prev - k)));
        prev = cdf;
    }
    return dist;
}

double gaussian_limit_distance(int n, std::int64_t count, RngSeed seed) {
    if (n < 1 || count < 1) throw OutOfRange("gaussian_limit_distance needs n, count >= 1");
    return ks_distance_to_gaussian(sample_as_stats(n, count, seed));
}

EstimateResult estimate_E_sigma(int n, const DescentWord& sigma, std::int64_t count, RngSeed seed,
                                std::int64_t budget) {
    if (sigma.empty()) throw EmptySigma("estimate_E_sigma requires a nonempty word");
    if (n < 0 || count < 1) throw OutOfRange("estimate_E_sigma needs n >= 0, count >= 1");
    if (static_cast<std::int64_t>(n) * count > budget)
        throw BudgetExceeded("n * count = " + std::to_string(static_cast<std::int64_t>(n) * count) +
                             " exceeds budget " + std::to_string(budget));
    Pcg32 rng(seed);
    std::int64_t sum = 0, sum_sq = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        int v = len_sigma(random_permutation(n, rng), sigma);
        sum += v;
        sum_sq += static_cast<std::int64_t>(v) * v;
    }
    double c = static_cast<double>(count);
    EstimateResult r;
    r.count = count;
    r.mean = static_cast<double>(sum) / c;
    double var = 0.0;
    if (count >= 2) {
        var = (static_cast<double>(sum_sq) - static_cast<double>(sum) / c * static_cast<double>(sum)) /
              (c - 1.0);
        if (var < 0) var = 0;
    }
    r.se = std::sqrt(var / c);
    return r;
}

ExhaustiveMoments exhaustive_as_moments(int n) {
    if (n > 8) throw SizeLimitExceeded("exhaustive moments limited to n <= 8");
    BigInt s1(0), s2(0), even(0), odd(0), total(0);
    for_each_permutation(n, [&](const Permutation& w) {
        int v = as_len(w);
        s1 += v;
        s2 += static_cast<long>(v) * (v - 1); // second factorial moment
        if (v % 2 == 0) ++even;
        else ++odd;
        ++total;
    });
    ExhaustiveMoments m;
    m.nu1 = BigRat(s1, total);
    m.nu1.canonicalize();
    m.nu2 = BigRat(s2, total);
    m.nu2.canonicalize();
    m.even_count = even;
    m.odd_count = odd;
    return m;
}

} // namespace altseq
