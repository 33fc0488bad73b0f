#include "shapedyn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shapedyn {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - double(i) / n));
        d = std::max(d, std::abs(double(i + 1) / n - f));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks two-sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

namespace {

// Complementary CDF of the Kolmogorov distribution.
double kolmogorov_q(double lambda) {
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? 1.0 : -1.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_pvalue(double d, std::size_t n) {
    double sn = std::sqrt(double(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

double ks_pvalue_two_sample(double d, std::size_t n, std::size_t m) {
    double ne = double(n) * double(m) / double(n + m);
    double sn = std::sqrt(ne);
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

double normal_cdf(double x, double mean, double sd) {
    return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0)));
}

SampleSummary summarize(const std::vector<double>& xs) {
    SampleSummary s;
    s.count = xs.size();
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - s.mean) * (x - s.mean);
    s.variance = xs.size() > 1 ? var / (xs.size() - 1) : 0.0;
    s.std_error = std::sqrt(s.variance / xs.size());
    return s;
}

double integrated_autocorrelation(const std::vector<double>& trace) {
    const std::size_t n = trace.size();
    if (n < 8) return 1.0;
    double mean = 0.0;
    for (double x : trace) mean += x;
    mean /= n;
    double c0 = 0.0;
    for (double x : trace) c0 += (x - mean) * (x - mean);
    c0 /= n;
    if (c0 <= 0.0) return 1.0;
    double tau = 1.0;
    // Self-consistent window: stop once lag exceeds 5 * running tau.
    for (std::size_t lag = 1; lag < n / 2; ++lag) {
        double c = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) c += (trace[i] - mean) * (trace[i + lag] - mean);
        c /= (n - lag);
        tau += 2.0 * c / c0;
        if (double(lag) > 5.0 * tau) break;
    }
    return std::max(1.0, tau);
}

TabulatedCdf::TabulatedCdf(double lo, double hi, std::vector<double> density) : lo_(lo), hi_(hi) {
    if (!(hi > lo) || density.empty()) throw std::invalid_argument("TabulatedCdf: bad table");
    cum_.assign(density.size() + 1, 0.0);
    for (std::size_t i = 0; i < density.size(); ++i)
        cum_[i + 1] = cum_[i] + std::max(0.0, density[i]);
    double total = cum_.back();
    if (total <= 0.0) throw std::invalid_argument("TabulatedCdf: zero mass");
    for (double& c : cum_) c /= total;
}

double TabulatedCdf::operator()(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return 1.0;
    double w = (hi_ - lo_) / double(cum_.size() - 1);
    double pos = (x - lo_) / w;
    std::size_t i = std::min<std::size_t>(std::size_t(pos), cum_.size() - 2);
    double t = pos - double(i);
    return cum_[i] + t * (cum_[i + 1] - cum_[i]);
}

}  // namespace shapedyn
