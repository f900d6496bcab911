#ifndef SHIFTCODE_TABLEAUX_HPP
#define SHIFTCODE_TABLEAUX_HPP

#include <cstdint>
#include <vector>

#include "shiftcode/types.hpp"

namespace shiftcode {

/// Weakly decreasing positive row lengths.
using YoungDiagram = std::vector<int>;

/// Filling of a Young diagram by 1..n, strictly increasing along rows and
/// down columns.
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const StandardTableau&) const = default;
};

/// Row-insertion tableau with real entries (a.s. distinct), strictly
/// increasing along rows and down columns.
struct RealTableau {
  std::vector<std::vector<double>> rows;

  bool operator==(const RealTableau&) const = default;
};

/// RSK image of a permutation word: insertion tableau P, recording
/// tableau Q, equal shapes.
struct RskPair {
  StandardTableau p;
  StandardTableau q;
};

/// RSK image of a real prefix: P keeps the raw reals.
struct RealRskPair {
  RealTableau p;
  StandardTableau q;
};

YoungDiagram shape(const StandardTableau& t);
YoungDiagram shape(const RealTableau& t);
bool is_standard(const StandardTableau& t);
void validate_diagram(const YoungDiagram& d);

/// Row-insertion RSK of a word of pairwise distinct integers.
RskPair rsk(const std::vector<int>& word);

/// Row-insertion RSK of a real prefix.
RealRskPair rsk(const RealPrefix& x);

/// Reverse bumping: the unique word with rsk(word) == pair. Requires both
/// tableaux standard with equal shapes.
std::vector<int> rsk_inverse(const RskPair& pair);

/// Q-tableau of the prefix; labels the cylinder-partition element the
/// prefix belongs to. A function of the order type only.
StandardTableau theta_label(const RealPrefix& x);

/// P-tableau of the order type of x plus the normalized representative
/// (g(1)/n, ..., g(n)/n) built from the 1-based rank word g.
struct ThetaPerpLabel {
  StandardTableau p;
  std::vector<double> representative;
};
ThetaPerpLabel theta_perp_label(const RealPrefix& x);

enum class KnuthKind { direct, dual };

/// Partition of all n! order types (1-based words) by equal P (direct) or
/// equal Q (dual). Guarded at n <= 8.
std::vector<std::vector<std::vector<int>>> knuth_classes(int n, KnuthKind kind);

/// Number of standard tableaux of the given shape (hook length formula).
std::uint64_t tableaux_count(const YoungDiagram& d);

/// All partitions of n, reverse-lex ordered, largest first row first.
std::vector<YoungDiagram> partitions_of(int n);

/// All standard tableaux with n cells.
std::vector<StandardTableau> all_standard_tableaux(int n);

/// Shape of the RSK image of a uniform sample; Plancherel-distributed.
YoungDiagram plancherel_sample(int n, std::uint64_t seed);

/// One row of the distinguishability experiment report.
struct DistinguishRow {
  int n = 0;
  std::int64_t trials = 0;
  std::int64_t accepted = 0;
  double acceptance_rate = 0.0;
  double iqr_x1 = 0.0;  // NaN when the row has no data
  bool has_data = false;
};

/// For each n: fix a reference prefix, rejection-sample candidates with the
/// same Q-tableau, and report the empirical IQR of the accepted first
/// coordinates. Rows with fewer than min_accepted acceptances are reported
/// as missing data, not failures. Convergence of the spread is very slow
/// in n.
std::vector<DistinguishRow> distinguishability_experiment(
    const std::vector<int>& n_values, std::int64_t trials,
    std::int64_t min_accepted, std::uint64_t seed);

}  // namespace shiftcode

#endif  // SHIFTCODE_TABLEAUX_HPP
