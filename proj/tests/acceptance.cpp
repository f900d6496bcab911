// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "shiftcode/graphtransfer.hpp"
#include "shiftcode/permtree.hpp"
#include "shiftcode/rankcode.hpp"
#include "shiftcode/sampling.hpp"
#include "shiftcode/stats.hpp"
#include "shiftcode/tableaux.hpp"

using namespace shiftcode;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : "  -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

RealPrefix word_to_prefix(const std::vector<int>& w) {
  RealPrefix x(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    x[i] = (static_cast<double>(w[i]) + 1.0) / (static_cast<double>(w.size()) + 1.0);
  return x;
}

template <class Fn>
void parallel_trials(std::int64_t trials, Fn&& per_trial) {
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::future<void>> futs;
  const std::int64_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(trials, lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::int64_t t = lo; t < hi; ++t) per_trial(t);
    }));
  }
  for (auto& f : futs) f.get();
}

// 1. encode is a bijection order types -> valid codes for n <= 8
void criterion_1() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::set<RankCode> codes;
    long long count = 0;
    do {
      const RankCode t = encode(word_to_prefix(w));
      validate_code(t);
      codes.insert(t);
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    ok = count == fact && static_cast<long long>(codes.size()) == fact;
  }
  report(1, "finite distinguishability: encode bijective on order types, n <= 8", ok);
}

// 2. transfer equivariance on 1e5 random prefixes of length 1000
void criterion_2() {
  const std::int64_t trials = 100000;
  const std::size_t len = 1000;
  std::atomic<std::int64_t> mismatches{0};
  std::atomic<std::int64_t> identity_failures{0};
  parallel_trials(trials, [&](std::int64_t trial) {
    const RealPrefix x = sample_prefix(Law::uniform, len, trial_seed(1001, trial));
    const RankCode t = encode(x);
    const RankCode tp = transfer(t);
    const RealPrefix sx(x.begin() + 1, x.end());
    if (tp != encode(sx)) ++mismatches;
    const SpecialProfile prof = special_profile(t);
    for (std::size_t i = 0; i + 1 < len; ++i)
      if (t[i + 1] - tp[i] != 1 - static_cast<int>(prof.d[i + 1] - prof.d[i])) {
        ++identity_failures;
        break;
      }
  });
  const bool ok = mismatches == 0 && identity_failures == 0;
  char detail[96];
  std::snprintf(detail, sizeof detail, "mismatches=%lld identity_failures=%lld",
                static_cast<long long>(mismatches),
                static_cast<long long>(identity_failures));
  report(2, "transfer equivariance: transfer(encode(x)) == encode(Sx), 1e5 x len 1000",
         ok, detail);
}

// 3. translation formula, exhaustive n <= 8 plus random prefixes
void criterion_3() {
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
      const RealPrefix x = word_to_prefix(w);
      const RealPrefix sx(x.begin() + 1, x.end());
      if (translation(simplex_word(x)) != simplex_word(sx)) {
        ok = false;
        break;
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
  std::atomic<std::int64_t> bad{0};
  parallel_trials(10000, [&](std::int64_t trial) {
    const std::size_t n = 2 + trial % 199;
    const RealPrefix x = sample_prefix(Law::uniform, n, trial_seed(3001, trial));
    const RealPrefix sx(x.begin() + 1, x.end());
    if (translation(simplex_word(x)) != simplex_word(sx)) ++bad;
  });
  report(3, "translation formula: word(Sx) == translation(word(x)), exhaustive + random",
         ok && bad == 0);
}

// 4. reconstruction accuracy and n^{-1/2} scaling
void criterion_4() {
  const std::vector<std::size_t> sizes{10000, 100000, 1000000};
  const int trials = 200;
  std::vector<double> log_n, log_err;
  double median_at_1e6 = 1.0;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<double> errs(trials);
    parallel_trials(trials, [&](std::int64_t trial) {
      const RealPrefix x =
          sample_prefix(Law::uniform, sizes[si], trial_seed(4001 + si, trial));
      errs[trial] = std::abs(reconstruct_first(encode(x)) - x[0]);
    });
    const double med = median(errs);
    if (sizes[si] == 1000000) median_at_1e6 = med;
    log_n.push_back(std::log10(static_cast<double>(sizes[si])));
    log_err.push_back(std::log10(med));
  }
  const double slope = ls_slope(log_n, log_err);
  const bool ok = median_at_1e6 <= 2e-3 && slope > -0.65 && slope < -0.35;
  char detail[96];
  std::snprintf(detail, sizeof detail, "median@1e6=%.2e slope=%.3f", median_at_1e6,
                slope);
  report(4, "reconstruction: median |d_n/n - x1| <= 2e-3 at n=1e6, slope -0.5 +/- 0.15",
         ok, detail);
}

// 5. RSK roundtrip on S_7; sum of (f^lambda)^2 = n! for n <= 10
void criterion_5() {
  bool ok = true;
  std::vector<int> w{1, 2, 3, 4, 5, 6, 7};
  do {
    if (rsk_inverse(rsk(w)) != w) {
      ok = false;
      break;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  long long fact = 1;
  for (int n = 1; n <= 10 && ok; ++n) {
    fact *= n;
    long long sum_sq = 0;
    for (const auto& d : partitions_of(n)) {
      const long long f = static_cast<long long>(tableaux_count(d));
      sum_sq += f * f;
    }
    ok = sum_sq == fact;
  }
  report(5, "RSK bijection: roundtrip exact on S_7; sum (f^l)^2 == n!, n <= 10", ok);
}

// 6. exact Knuth-class incidence for n <= 7
void criterion_6() {
  bool ok = true;
  for (int n = 1; n <= 7 && ok; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>>
        pairs;
    long long count = 0;
    do {
      const RskPair pq = rsk(w);
      if (!pairs.insert({pq.p.rows, pq.q.rows}).second) ok = false;  // a cell hit twice
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    long long sum_sq = 0;
    for (const auto& d : partitions_of(n)) {
      const long long f = static_cast<long long>(tableaux_count(d));
      sum_sq += f * f;
    }
    // injective + every same-shape (P,Q) cell reached exactly once
    ok = ok && count == sum_sq && static_cast<long long>(pairs.size()) == count;
  }
  report(6, "Knuth classes: (t_P, t_Q) incidence is the all-ones matrix, n <= 7", ok);
}

// 7. theta monotonicity over 1e4 prefixes, n <= 100
void criterion_7() {
  std::atomic<std::int64_t> violations{0};
  parallel_trials(10000, [&](std::int64_t trial) {
    const RealPrefix x = sample_prefix(Law::uniform, 101, trial_seed(7001, trial));
    StandardTableau prev = theta_label(RealPrefix(x.begin(), x.begin() + 1));
    for (int n = 1; n < 101; ++n) {
      StandardTableau next = theta_label(RealPrefix(x.begin(), x.begin() + n + 1));
      StandardTableau restricted = next;
      for (auto it = restricted.rows.begin(); it != restricted.rows.end(); ++it)
        if (!it->empty() && it->back() == n + 1) {
          it->pop_back();
          if (it->empty()) restricted.rows.erase(it);
          break;
        }
      if (restricted != prev) {
        ++violations;
        break;
      }
      prev = std::move(next);
    }
  });
  report(7, "theta monotonicity: Q_n == restriction of Q_{n+1}, 1e4 prefixes, n <= 100",
         violations == 0);
}

// 8. Plancherel chi-square at n in {4,5,6}
void criterion_8() {
  bool ok = true;
  char detail[96];
  std::string details;
  for (int n : {4, 5, 6}) {
    const auto shapes = partitions_of(n);
    std::vector<double> probs;
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& d : shapes) {
      const double f = static_cast<double>(tableaux_count(d));
      probs.push_back(f * f / fact);
    }
    std::vector<std::int64_t> counts(shapes.size(), 0);
    std::vector<int> hits(100000);
    parallel_trials(100000, [&](std::int64_t t) {
      const YoungDiagram d = plancherel_sample(n, trial_seed(8000 + n, t));
      for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i] == d) {
          hits[t] = static_cast<int>(i);
          break;
        }
    });
    for (int h : hits) ++counts[h];
    const double p = chi_square_gof(counts, probs);
    std::snprintf(detail, sizeof detail, "p(n=%d)=%.4f ", n, p);
    details += detail;
    ok = ok && p > 1e-3;
  }
  report(8, "Plancherel: chi-square of sampled shapes, 1e5 samples, p > 1e-3", ok,
         details);
}

// 9. Markov transfer == jeu de taquin (<= 8 cells) and == factorial-tree transfer
void criterion_9() {
  const YoungGraph yg;
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      const auto promoted = transfer_path(yg, tableau_as_path(t));
      if (paths_as_tableau(promoted) != jdt_promotion(t)) {
        ok = false;
        break;
      }
    }
  const FactorialTree ft;
  for (int n = 2; n <= 8 && ok; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
      const RealPrefix x = word_to_prefix(w);
      std::vector<SimplexWord> path{{}};
      for (int len = 1; len <= n; ++len)
        path.push_back(simplex_word(RealPrefix(x.begin(), x.begin() + len)));
      const auto out = transfer_path(ft, path);
      if (out.back() != order_permutation(transfer(encode(x)))) {
        ok = false;
        break;
      }
      const RealPrefix sx(x.begin() + 1, x.end());
      std::vector<SimplexWord> expect{{}};
      for (std::size_t len = 1; len < x.size(); ++len)
        expect.push_back(simplex_word(RealPrefix(sx.begin(), sx.begin() + len)));
      if (out != expect) {
        ok = false;
        break;
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
  report(9, "Markov transfer == jeu de taquin (<= 8 cells) and tree transfer",
         ok);
}

// 10. distinguishability experiment: IQR ~ 0.5 at n=1, smaller at n=10,
//     negative Spearman over n = 1..10, >= 50 accepted per n.
void criterion_10() {
  std::vector<int> ns(10);
  std::iota(ns.begin(), ns.end(), 1);
  std::vector<DistinguishRow> report_rows(10);
  parallel_trials(10, [&](std::int64_t i) {
    const auto rows = distinguishability_experiment(
        {ns[i]}, /*trials=*/2000000, /*min_accepted=*/50, /*seed=*/424242);
    report_rows[i] = rows[0];
  });
  bool ok = true;
  std::vector<double> xs, ys;
  for (const auto& row : report_rows) {
    if (!row.has_data || row.accepted < 50) ok = false;
    xs.push_back(row.n);
    ys.push_back(row.iqr_x1);
  }
  double rho = 0.0;
  if (ok) {
    rho = spearman_rho(xs, ys);
    ok = std::abs(ys.front() - 0.5) < 0.05 && ys.back() < ys.front() && rho < 0.0;
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "iqr(1)=%.3f iqr(10)=%.3f spearman=%.3f; note: the conditional "
                "spread converges very slowly in n",
                ys.empty() ? -1.0 : ys.front(), ys.empty() ? -1.0 : ys.back(), rho);
  report(10, "distinguishability proxy: IQR ~0.5 at n=1, smaller at n=10, rho < 0", ok,
         detail);
}

// 11. law invariance of the joint code law, first 5 coordinates
void criterion_11() {
  const std::int64_t samples = 100000;
  auto cells = [&](Law law, std::uint64_t seed) {
    std::vector<int> idxs(samples);
    parallel_trials(samples, [&](std::int64_t s) {
      const RankCode t = encode(sample_prefix(law, 5, trial_seed(seed, s)));
      int idx = 0, base = 1;
      for (int i = 1; i < 5; ++i) {
        idx += (t[i] - 1) * base;
        base *= i + 1;
      }
      idxs[s] = idx;
    });
    std::vector<std::int64_t> counts(120, 0);
    for (int idx : idxs) ++counts[idx];
    return counts;
  };
  const double p =
      chi_square_homogeneity(cells(Law::uniform, 111), cells(Law::gaussian, 222));
  char detail[48];
  std::snprintf(detail, sizeof detail, "p=%.4f", p);
  report(11, "law invariance: joint law of t_1..t_5 uniform vs gaussian, p > 1e-3",
         p > 1e-3, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0)
    std::printf("all 11 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
