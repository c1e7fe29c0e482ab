#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

/// Optimal bottleneck pairing of two equal-size multisets.
struct MatchResult {
  /// max_j |first[j] - second[assignment[j]]|, minimal over all permutations.
  double distance = 0.0;
  /// assignment[j] is the index in the second multiset paired with first[j].
  /// Among all optimal permutations this is the lexicographically smallest.
  std::vector<std::size_t> assignment;
};

/// Bottleneck matching distance between two sequences of complex values,
/// treated as multisets. Binary search over the sorted pairwise distances with
/// bipartite-matching feasibility. Throws InputError("incomparable
/// multisets") on a length mismatch.
MatchResult match_values(std::span<const Complex> first, std::span<const Complex> second);

MatchResult matching_distance(const SpectrumMultiset& first, const SpectrumMultiset& second);

struct ContinuityProbeOptions {
  int trials = 16;
  std::uint64_t seed = 0x5eed;
  int bisection_steps = 40;
};

/// Unit perturbation directions (n*n entries, max modulus 1) tried at each
/// candidate delta: `trials` random directions with unit-modulus entries of
/// random phase, then the 2 n^2 single-entry directions +-e_ij.
std::vector<std::vector<Complex>> continuity_probe_directions(std::size_t n,
                                                              const ContinuityProbeOptions& options);

/// Empirical largest delta such that every tested perturbation E with
/// ||E||_max = delta keeps d(sigma(A), sigma(A + E)) < epsilon, over
/// E = delta * D for D in continuity_probe_directions. The search range is (0, max(1, ||A||_max)].
/// This is a probe, not a certificate.
double pointwise_continuity_probe(const ComplexMatrix& a, double epsilon,
                                  const ContinuityProbeOptions& options = {});

}  // namespace gersh
