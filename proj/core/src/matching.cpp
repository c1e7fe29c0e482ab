#include "gersh/matching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gersh/error.hpp"

namespace gersh {
namespace {

// Bipartite graph on an n x n threshold mask; Kuhn's augmenting paths.
class ThresholdMatcher {
 public:
  explicit ThresholdMatcher(std::size_t n) : n_(n), allowed_(n * n, 0) {}

  void set_threshold(std::span<const double> dist, double threshold) {
    for (std::size_t k = 0; k < dist.size(); ++k) allowed_[k] = dist[k] <= threshold;
  }
  void forbid(std::size_t row, std::size_t col) { allowed_[row * n_ + col] = 0; }

  // Perfect matching of rows [first_row, n) into columns not in `taken`.
  bool perfect(std::size_t first_row, const std::vector<char>& taken) {
    match_of_col_.assign(n_, npos);
    for (std::size_t row = first_row; row < n_; ++row) {
      visited_.assign(n_, 0);
      if (!augment(row, taken)) return false;
    }
    return true;
  }

  bool allowed(std::size_t row, std::size_t col) const { return allowed_[row * n_ + col]; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool augment(std::size_t row, const std::vector<char>& taken) {
    for (std::size_t col = 0; col < n_; ++col) {
      if (!allowed_[row * n_ + col] || taken[col] || visited_[col]) continue;
      visited_[col] = 1;
      if (match_of_col_[col] == npos || augment(match_of_col_[col], taken)) {
        match_of_col_[col] = row;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> allowed_;
  std::vector<char> visited_;
  std::vector<std::size_t> match_of_col_;
};

}  // namespace

MatchResult match_values(std::span<const Complex> first, std::span<const Complex> second) {
  if (first.size() != second.size()) throw InputError("incomparable multisets");
  const std::size_t n = first.size();
  if (n == 0) return {};

  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(first[i] - second[j]);
  }
  std::vector<double> levels = dist;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  ThresholdMatcher matcher(n);
  const std::vector<char> none(n, 0);
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;  // the largest level is always feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    matcher.set_threshold(dist, levels[mid]);
    if (matcher.perfect(0, none)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double best = levels[lo];

  // Lexicographically smallest optimal permutation: fix rows in order, each
  // to the smallest column that still admits a perfect completion.
  matcher.set_threshold(dist, best);
  std::vector<char> taken(n, 0);
  MatchResult result{best, std::vector<std::size_t>(n)};
  for (std::size_t row = 0; row < n; ++row) {
    bool placed = false;
    for (std::size_t col = 0; col < n && !placed; ++col) {
      if (taken[col] || !matcher.allowed(row, col)) continue;
      taken[col] = 1;
      if (matcher.perfect(row + 1, taken)) {
        result.assignment[row] = col;
        placed = true;
      } else {
        taken[col] = 0;
      }
    }
    if (!placed) throw NumericalError("bottleneck matching inconsistency");
  }
  return result;
}

MatchResult matching_distance(const SpectrumMultiset& first, const SpectrumMultiset& second) {
  return match_values(first.values(), second.values());
}

std::vector<std::vector<Complex>> continuity_probe_directions(std::size_t n,
                                                              const ContinuityProbeOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> turn(0.0, 2.0 * std::numbers::pi);
  std::vector<std::vector<Complex>> directions;
  for (int trial = 0; trial < options.trials; ++trial) {
    std::vector<Complex> e(n * n);
    for (auto& v : e) v = std::polar(1.0, turn(rng));
    directions.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    for (const double sign : {1.0, -1.0}) {
      std::vector<Complex> e(n * n);
      e[k] = sign;
      directions.push_back(std::move(e));
    }
  }
  return directions;
}

double pointwise_continuity_probe(const ComplexMatrix& a, double epsilon,
                                  const ContinuityProbeOptions& options) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (options.trials < 1) throw InputError("trials must be at least 1");

  const std::size_t n = a.size();
  const SpectrumMultiset base = eigenvalues_oracle(a);
  const auto directions = continuity_probe_directions(n, options);

  auto stable_at = [&](double delta) {
    for (const auto& dir : directions) {
      std::vector<Complex> entries(a.entries().begin(), a.entries().end());
      for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += delta * dir[k];
      const SpectrumMultiset perturbed = eigenvalues_oracle(ComplexMatrix(n, std::move(entries)));
      if (!(matching_distance(base, perturbed).distance < epsilon)) return false;
    }
    return true;
  };

  const double upper = std::max(1.0, a.max_abs());
  if (stable_at(upper)) return upper;
  double lo = 0.0;
  double hi = upper;
  for (int step = 0; step < options.bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (stable_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace gersh
