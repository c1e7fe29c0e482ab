#include "gersh/polynomial_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <utility>

#include "gersh/error.hpp"

namespace gersh {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// Radius of the inclusion disk around z_k: n (|p(z_k)| + rounding) / |prod (z_k - z_j)|.
// Overlapping inclusion disks mark approximations of one multiple root.
double inclusion_radius(const MonicPolynomial& p, std::span<const Complex> z, std::size_t k) {
  const double residual = std::abs(p(z[k])) + p.horner_error_bound(z[k]);
  double denom = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j != k) denom *= std::abs(z[k] - z[j]);
  }
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(z.size()) * residual / denom;
}

// Coefficients (leading first, leading term included) of the k-th derivative.
std::vector<Complex> derivative_coefficients(const MonicPolynomial& p, std::size_t k) {
  std::vector<Complex> c{1.0};
  c.insert(c.end(), p.coefficients().begin(), p.coefficients().end());
  for (std::size_t d = 0; d < k; ++d) {
    const std::size_t deg = c.size() - 1;
    std::vector<Complex> next(deg);
    for (std::size_t i = 0; i < deg; ++i) next[i] = c[i] * static_cast<double>(deg - i);
    c = std::move(next);
  }
  return c;
}

std::pair<Complex, Complex> horner(std::span<const Complex> c, Complex z) {
  Complex v = 0.0;
  Complex d = 0.0;
  for (const auto& a : c) {
    d = d * z + v;
    v = v * z + a;
  }
  return {v, d};
}

// An m-fold root of p is a simple root of p^(m-1); Newton there recovers it
// to working accuracy from the cluster mean.
Complex refine_multiple_root(const MonicPolynomial& p, Complex start, std::size_t multiplicity) {
  const auto q = derivative_coefficients(p, multiplicity - 1);
  Complex z = start;
  for (int iter = 0; iter < 50; ++iter) {
    const auto [v, d] = horner(q, z);
    if (d == Complex{}) break;
    const Complex step = v / d;
    if (!is_finite(step)) break;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return std::abs(p(z)) <= std::abs(p(start)) ? z : start;
}

}  // namespace

std::vector<Complex> polynomial_roots(const MonicPolynomial& p, const RootFinderOptions& options) {
  const std::size_t n = p.degree();
  // Fujiwara bound 2 max |a_k|^(1/k): like 1 + max |a_k| it encloses every
  // root, but it scales with the roots instead of the coefficients.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(p.coefficients()[k - 1]), 1.0 / static_cast<double>(k)));
  }
  radius = 1.0 + 2.0 * radius;

  std::vector<Complex> z(n);
  // Angular offset keeps the start off any symmetry axis of real polynomials.
  constexpr double kOffset = 0.4;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z[k] = std::polar(radius, theta + kOffset);
  }

  const double step_tol = options.step_tolerance * (1.0 + radius);
  std::vector<bool> done(n, false);
  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto [v, d] = p.value_and_derivative(z[k]);
      if (std::abs(v) <= p.horner_error_bound(z[k])) {
        done[k] = true;
        continue;
      }
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) s += 1.0 / (z[k] - z[j]);
      }
      Complex denom = d - v * s;
      if (denom == Complex{}) denom = Complex{step_tol, step_tol};
      const Complex w = v / denom;
      z[k] -= w;
      if (!is_finite(z[k])) throw NumericalError("oracle did not converge");
      if (std::abs(w) < step_tol) {
        done[k] = true;
      } else {
        converged = false;
      }
    }
  }
  if (!converged) throw NumericalError("oracle did not converge");

  for (int step = 0; step < options.polish_steps; ++step) {
    for (auto& root : z) {
      const auto [v, d] = p.value_and_derivative(root);
      if (d == Complex{}) continue;
      const Complex candidate = root - v / d;
      if (is_finite(candidate) && std::abs(p(candidate)) < std::abs(v)) root = candidate;
    }
  }

  // Approximations of one multiple root scatter over a disk of radius about
  // (u |p|)^(1/m); cluster them and replace each cluster by one refined value.
  DisjointSets sets(n);
  std::vector<double> rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    rho[k] = std::min(inclusion_radius(p, z, k), 1e-3 * (1.0 + std::abs(z[k])));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(z[i] - z[j]);
      const double near = options.cluster_tolerance *
                          (1.0 + std::max(std::abs(z[i]), std::abs(z[j])));
      if (dist < near || dist <= rho[i] + rho[j]) sets.unite(i, j);
    }
  }
  std::vector<Complex> sum(n);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = sets.find(k);
    sum[r] += z[k];
    ++count[r];
  }
  std::vector<Complex> center(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (count[r] == 0) continue;
    center[r] = sum[r] / static_cast<double>(count[r]);
    if (count[r] > 1) center[r] = refine_multiple_root(p, center[r], count[r]);
  }
  for (std::size_t k = 0; k < n; ++k) z[k] = center[sets.find(k)];

  const double residual_cap = 1e-8 * std::max(1.0, p.max_abs_coefficient());
  for (const auto& root : z) {
    // Past the rounding level of Horner's rule |p| carries no information.
    const double cap = std::max(residual_cap, p.horner_error_bound(root));
    if (!(std::abs(p(root)) <= cap)) throw NumericalError("oracle did not converge");
  }

  std::sort(z.begin(), z.end(), lex_less);
  return z;
}

}  // namespace gersh
