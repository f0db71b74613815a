#include "hibs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hibs {

CdfSeries make_cdf(std::span<const double> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("make_cdf: no samples");
    }
    CdfSeries cdf;
    cdf.values.assign(samples.begin(), samples.end());
    if (!std::all_of(cdf.values.begin(), cdf.values.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument("make_cdf: non-finite sample");
    }
    std::sort(cdf.values.begin(), cdf.values.end());
    const auto n = static_cast<double>(cdf.values.size());
    cdf.probabilities.resize(cdf.values.size());
    for (std::size_t i = 0; i < cdf.values.size(); ++i) {
        cdf.probabilities[i] = static_cast<double>(i + 1) / (n + 1.0);
    }
    return cdf;
}

double quantile(const CdfSeries &cdf, double p) {
    if (cdf.values.empty()) {
        throw std::invalid_argument("quantile: empty CDF");
    }
    const auto n = static_cast<double>(cdf.values.size());
    // Fractional rank in 1..N for plotting position p = rank / (N + 1).
    const double rank = std::clamp(p * (n + 1.0), 1.0, n);
    const auto lo = static_cast<std::size_t>(std::floor(rank)) - 1;
    const std::size_t hi = std::min(lo + 1, cdf.values.size() - 1);
    const double frac = rank - std::floor(rank);
    return cdf.values[lo] + frac * (cdf.values[hi] - cdf.values[lo]);
}

double median(std::span<const double> samples) {
    return quantile(make_cdf(samples), 0.5);
}

double mean(std::span<const double> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("mean: no samples");
    }
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

} // namespace hibs
