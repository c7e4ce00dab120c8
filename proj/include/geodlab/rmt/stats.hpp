#pragma once

#include <functional>
#include <span>
#include <vector>

namespace geodlab::rmt {

/// sup_x |F_n(x) - F(x)| for a sample against a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| for two samples.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Median (average of the two central values for even sizes).
double median(std::vector<double> values);

}  // namespace geodlab::rmt
