#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gersh {

using Complex = std::complex<double>;

bool is_finite(Complex z) noexcept;

/// Dense n x n complex matrix, row-major. Every entry is finite; the
/// constructors reject NaN/Inf with InputError.
class ComplexMatrix {
 public:
  /// n x n zero matrix.
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  /// Row-wise literal, e.g. ComplexMatrix{{4, 1}, {0, 2}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t size() const noexcept { return n_; }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  /// Mutable access. Writing a non-finite value breaks the class invariant;
  /// call validate() after bulk edits from untrusted sources.
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<const Complex> row(std::size_t i) const {
    return std::span<const Complex>(entries_).subspan(i * n_, n_);
  }

  Complex trace() const noexcept;
  /// max_ij |a_ij|; the norm used wherever a matrix norm is needed.
  double max_abs() const noexcept;
  /// Diagonal part A0 = diag(a_11, ..., a_nn).
  ComplexMatrix diagonal_part() const;

  void validate() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// z^n + a_1 z^{n-1} + ... + a_n. Only a_1..a_n are stored.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Complex> coefficients);

  std::size_t degree() const noexcept { return coeffs_.size(); }
  /// a_1..a_n; coefficients()[k] is a_{k+1}.
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  /// max_j |a_j|.
  double max_abs_coefficient() const noexcept;

  Complex operator()(Complex z) const noexcept;
  Complex derivative(Complex z) const noexcept;
  /// p(z) and p'(z) in one Horner pass.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const noexcept;
  /// Bound on the rounding error of the Horner evaluation at z.
  double horner_error_bound(Complex z) const noexcept;

 private:
  std::vector<Complex> coeffs_;
};

/// Lexicographic (re, im) ordering used for canonical spectra.
bool lex_less(Complex a, Complex b) noexcept;

/// Unordered multiset of complex values, kept in canonical (re, im) order.
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;
  explicit SpectrumMultiset(std::vector<Complex> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const& noexcept { return values_; }
  // A span into a temporary would dangle.
  std::span<const Complex> values() const&& = delete;
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  Complex sum() const noexcept;
  Complex product() const noexcept;

  friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;

 private:
  std::vector<Complex> values_;
};

/// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
 public:
  /// Throws NumericalError("z too close to spectrum") when a pivot magnitude
  /// falls to or below `pivot_floor`.
  LuFactorization(ComplexMatrix m, double pivot_floor);

  std::size_t size() const noexcept { return lu_.size(); }
  /// Solves M x = b in place.
  void solve(std::span<Complex> b) const;
  /// trace(M^{-1}).
  Complex inverse_trace() const;
  /// det(M) / |det(M)|, computed without forming det(M) itself.
  Complex determinant_phase() const noexcept;
  /// log |det(M)|.
  double log_abs_determinant() const noexcept;

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

/// Pivot floor for factoring zI - A: 1e-12 * ||A||_max * n.
double spectrum_pivot_floor(const ComplexMatrix& a) noexcept;

/// Coefficients of det(zI - A) via the Faddeev-LeVerrier recurrence.
/// Throws NumericalError("coefficient overflow") on non-finite coefficients.
MonicPolynomial characteristic_polynomial(const ComplexMatrix& a);

/// p'(z)/p(z) for p = det(zI - A), evaluated as trace((zI - A)^{-1}).
/// Throws NumericalError("z too close to spectrum") when zI - A is
/// numerically singular.
Complex resolvent_log_derivative(const ComplexMatrix& a, Complex z);

/// All n eigenvalues of A with algebraic multiplicity. Desk-scale brute force
/// (n <= 20): characteristic polynomial followed by simultaneous root
/// iteration.
SpectrumMultiset eigenvalues_oracle(const ComplexMatrix& a);

/// Largest dimension accepted by eigenvalues_oracle.
inline constexpr std::size_t kOracleMaxDimension = 20;

/// A(t) = A0 + t (A - A0) with A0 the diagonal part of A. Exact at t = 0 and
/// t = 1. Throws InputError("parameter out of range") outside [0, 1].
ComplexMatrix homotopy_member(const ComplexMatrix& a, double t);

}  // namespace gersh
