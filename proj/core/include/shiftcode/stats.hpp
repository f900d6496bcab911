#ifndef SHIFTCODE_STATS_HPP
#define SHIFTCODE_STATS_HPP

#include <cstdint>
#include <vector>

namespace shiftcode {

/// Upper-tail p-value of a chi-square statistic.
double chi_square_pvalue(double statistic, int dof);

/// Goodness-of-fit p-value of observed counts against cell probabilities.
double chi_square_gof(const std::vector<std::int64_t>& counts,
                      const std::vector<double>& probs);

/// Homogeneity p-value of two observed count vectors over the same cells.
double chi_square_homogeneity(const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b);

/// Linearly interpolated quantile, q in [0,1]. Sorts a copy.
double quantile(std::vector<double> sample, double q);

double median(std::vector<double> sample);

/// Interquartile range.
double iqr(const std::vector<double>& sample);

/// Spearman rank correlation (average-rank ties).
double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace shiftcode

#endif  // SHIFTCODE_STATS_HPP
