#include "shiftcode/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace shiftcode {

double chi_square_pvalue(double statistic, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof < 1");
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double chi_square_gof(const std::vector<std::int64_t>& counts,
                      const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.size() < 2)
    throw std::invalid_argument("chi_square_gof: bad cell vectors");
  const double total =
      static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    if (expected <= 0.0)
      throw std::invalid_argument("chi_square_gof: zero expected cell");
    const double d = static_cast<double>(counts[i]) - expected;
    stat += d * d / expected;
  }
  return chi_square_pvalue(stat, static_cast<int>(counts.size()) - 1);
}

double chi_square_homogeneity(const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("chi_square_homogeneity: bad cell vectors");
  const double na =
      static_cast<double>(std::accumulate(a.begin(), a.end(), std::int64_t{0}));
  const double nb =
      static_cast<double>(std::accumulate(b.begin(), b.end(), std::int64_t{0}));
  double stat = 0.0;
  int dof = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0.0) continue;  // empty cell contributes nothing
    const double ea = col * na / (na + nb);
    const double eb = col * nb / (na + nb);
    const double da = static_cast<double>(a[i]) - ea;
    const double db = static_cast<double>(b[i]) - eb;
    stat += da * da / ea + db * db / eb;
    ++dof;
  }
  return chi_square_pvalue(stat, dof - 1);
}

double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) throw std::invalid_argument("quantile of empty sample");
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sample[lo] * (1.0 - frac) + sample[hi] * frac;
}

double median(std::vector<double> sample) { return quantile(std::move(sample), 0.5); }

double iqr(const std::vector<double>& sample) {
  return quantile(sample, 0.75) - quantile(sample, 0.25);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
    i = j + 1;
  }
  return rank;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("spearman_rho: bad samples");
  return pearson(average_ranks(a), average_ranks(b));
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ls_slope: bad samples");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace shiftcode
