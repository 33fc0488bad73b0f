#pragma once

#include <functional>
#include <string>
#include <vector>

namespace shapedyn {

// One-sample Kolmogorov-Smirnov statistic against a CDF; samples need not be
// pre-sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Two-sample KS statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic p-value of the one-sample statistic (Stephens' small-sample
// correction applied to the Kolmogorov distribution).
double ks_pvalue(double d, std::size_t n);
double ks_pvalue_two_sample(double d, std::size_t n, std::size_t m);

// Standard normal CDF.
double normal_cdf(double x, double mean = 0.0, double sd = 1.0);

// Mean / variance / standard error of a sample.
struct SampleSummary {
    double mean = 0.0;
    double variance = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};
SampleSummary summarize(const std::vector<double>& xs);

// Integrated autocorrelation time of a scalar chain trace (windowed sum,
// window grown until the estimate stabilizes).
double integrated_autocorrelation(const std::vector<double>& trace);

// Piecewise-linear CDF built from a density table on a uniform grid.
class TabulatedCdf {
public:
    TabulatedCdf() = default;
    // density[i] is the density on cell [lo + i w, lo + (i+1) w).
    TabulatedCdf(double lo, double hi, std::vector<double> density);
    double operator()(double x) const;
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double lo_ = 0.0, hi_ = 1.0;
    std::vector<double> cum_;  // cum_[i] = mass below cell edge i
};

}  // namespace shapedyn
