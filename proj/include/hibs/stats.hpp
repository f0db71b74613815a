// Empirical CDFs and summary statistics.
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace hibs {

struct CdfSeries {
    std::vector<double> values;        // sorted ascending
    std::vector<double> probabilities; // i / (N + 1), i = 1..N
    std::map<std::string, std::string> metadata;

    std::size_t size() const { return values.size(); }
};

/// Empirical CDF with plotting positions i/(N+1). Throws
/// std::invalid_argument for empty input or non-finite samples.
CdfSeries make_cdf(std::span<const double> samples);

/// Value at cumulative probability @p p, linear between plotting positions
/// and clamped to the extreme samples outside them.
double quantile(const CdfSeries &cdf, double p);

/// quantile(make_cdf(samples), 0.5); the usual sample median.
double median(std::span<const double> samples);

double mean(std::span<const double> samples);

} // namespace hibs
