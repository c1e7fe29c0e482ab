#include "gersh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "gersh/error.hpp"
#include "gersh/polynomial_roots.hpp"

namespace gersh {

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw InputError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw InputError("matrix dimension must be positive");
  if (entries_.size() != n * n) {
    throw InputError("expected " + std::to_string(n * n) + " entries");
  }
  validate();
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  if (n_ == 0) throw InputError("matrix dimension must be positive");
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InputError("matrix literal is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  validate();
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  m.validate();
  return m;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

ComplexMatrix ComplexMatrix::diagonal_part() const {
  ComplexMatrix d(n_);
  for (std::size_t i = 0; i < n_; ++i) d(i, i) = (*this)(i, i);
  return d;
}

void ComplexMatrix::validate() const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!is_finite(entries_[k])) {
      throw InputError("non-finite matrix entry at (" + std::to_string(k / n_ + 1) +
                       "," + std::to_string(k % n_ + 1) + ")");
    }
  }
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& e : c.entries_) e *= s;
  return c;
}

// --- MonicPolynomial ------------------------------------------------------

MonicPolynomial::MonicPolynomial(std::vector<Complex> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InputError("polynomial degree must be positive");
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw NumericalError("coefficient overflow");
  }
}

double MonicPolynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex MonicPolynomial::operator()(Complex z) const noexcept {
  Complex v = 1.0;
  for (const auto& c : coeffs_) v = v * z + c;
  return v;
}

Complex MonicPolynomial::derivative(Complex z) const noexcept {
  return value_and_derivative(z).second;
}

std::pair<Complex, Complex> MonicPolynomial::value_and_derivative(Complex z) const noexcept {
  Complex v = 1.0;
  Complex d = 0.0;
  for (const auto& c : coeffs_) {
    d = d * z + v;
    v = v * z + c;
  }
  return {v, d};
}

double MonicPolynomial::horner_error_bound(Complex z) const noexcept {
  // gamma_{2n} * sum_k |a_k| |z|^{n-k}, a_0 = 1.
  constexpr double kUnitRoundoff = 1.1102230246251565e-16;
  const double r = std::abs(z);
  double s = 1.0;
  for (const auto& c : coeffs_) s = s * r + std::abs(c);
  return 4.0 * static_cast<double>(coeffs_.size()) * kUnitRoundoff * s;
}

// --- SpectrumMultiset -----------------------------------------------------

bool lex_less(Complex a, Complex b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

SpectrumMultiset::SpectrumMultiset(std::vector<Complex> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), lex_less);
}

Complex SpectrumMultiset::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Complex{});
}

Complex SpectrumMultiset::product() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Complex{1.0},
                         std::multiplies<>{});
}

// --- LU -------------------------------------------------------------------

LuFactorization::LuFactorization(ComplexMatrix m, double pivot_floor)
    : lu_(std::move(m)), perm_(lu_.size()) {
  const std::size_t n = lu_.size();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= pivot_floor || best == 0.0) {
      throw NumericalError("z too close to spectrum");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
      sign_ = -sign_;
    }
    const Complex pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu_(i, k) / pivot;
      lu_(i, k) = f;
      if (f == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

void LuFactorization::solve(std::span<Complex> b) const {
  const std::size_t n = lu_.size();
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  std::copy(x.begin(), x.end(), b.begin());
}

Complex LuFactorization::inverse_trace() const {
  const std::size_t n = lu_.size();
  Complex tr = 0.0;
  std::vector<Complex> col(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(col.begin(), col.end(), Complex{});
    col[k] = 1.0;
    solve(col);
    tr += col[k];
  }
  return tr;
}

Complex LuFactorization::determinant_phase() const noexcept {
  Complex u = static_cast<double>(sign_);
  for (std::size_t i = 0; i < lu_.size(); ++i) {
    const Complex d = lu_(i, i);
    u *= d / std::abs(d);
  }
  return u / std::abs(u);
}

double LuFactorization::log_abs_determinant() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < lu_.size(); ++i) s += std::log(std::abs(lu_(i, i)));
  return s;
}

// --- operations -----------------------------------------------------------

double spectrum_pivot_floor(const ComplexMatrix& a) noexcept {
  return 1e-12 * a.max_abs() * static_cast<double>(a.size());
}

MonicPolynomial characteristic_polynomial(const ComplexMatrix& a) {
  // M_1 = I, a_k = -tr(A M_k)/k, M_{k+1} = A M_k + a_k I.
  const std::size_t n = a.size();
  std::vector<Complex> coeffs(n);
  ComplexMatrix m = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const ComplexMatrix am = a * m;
    const Complex ak = -am.trace() / static_cast<double>(k);
    if (!is_finite(ak)) throw NumericalError("coefficient overflow");
    coeffs[k - 1] = ak;
    if (k == n) break;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ak;
  }
  return MonicPolynomial(std::move(coeffs));
}

Complex resolvent_log_derivative(const ComplexMatrix& a, Complex z) {
  if (!is_finite(z)) throw InputError("non-finite evaluation point");
  const std::size_t n = a.size();
  ComplexMatrix shifted = -1.0 * a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) += z;
  const LuFactorization lu(std::move(shifted), spectrum_pivot_floor(a));
  return lu.inverse_trace();
}

SpectrumMultiset eigenvalues_oracle(const ComplexMatrix& a) {
  if (a.size() > kOracleMaxDimension) {
    throw InputError("eigenvalue oracle is limited to n <= " +
                     std::to_string(kOracleMaxDimension));
  }
  // Triangular spectra are read off the diagonal exactly; this covers A(0).
  bool upper = true;
  bool lower = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j < i && a(i, j) != Complex{}) upper = false;
      if (j > i && a(i, j) != Complex{}) lower = false;
    }
  }
  if (upper || lower) {
    std::vector<Complex> diag(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diag[i] = a(i, i);
    return SpectrumMultiset(std::move(diag));
  }
  return SpectrumMultiset(polynomial_roots(characteristic_polynomial(a)));
}

ComplexMatrix homotopy_member(const ComplexMatrix& a, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("parameter out of range");
  if (t == 1.0) return a;
  const std::size_t n = a.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? a(i, j) : t * a(i, j);
  }
  return m;
}

}  // namespace gersh
