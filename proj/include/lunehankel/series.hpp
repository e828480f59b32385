// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace lunehankel {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 128;

/// Power series c0 + c1 z + ... + cN z^N with complex coefficients, exact
/// up to degree N (the truncation order). Values are immutable; every
/// operation returns a new series whose order is the minimum of its
/// operands' orders.
class TruncatedSeries {
 public:
  /// The zero series of the given order (order >= 1).
  explicit TruncatedSeries(int order);

  /// Takes ownership of c0..cN; order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  /// Leading coefficients from the list, zero padded (or cut) to `order`.
  TruncatedSeries(std::initializer_list<Complex> coeffs, int order);

  static TruncatedSeries constant(Complex c, int order);
  static TruncatedSeries monomial(int degree, Complex c, int order);
  /// The identity series z.
  static TruncatedSeries variable(int order) { return monomial(1, 1.0, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero for k beyond the order or negative.
  Complex operator[](int k) const {
    return (k < 0 || k > order()) ? Complex{} : coeffs_[static_cast<std::size_t>(k)];
  }

  TruncatedSeries truncated(int order) const;

 private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
/// Quotient q with q*b = a to truncation order; b(0) must be nonzero.
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(a) for a(0) = 0, from (exp a)' = a' exp a.
TruncatedSeries exp_series(const TruncatedSeries& a);
/// log(a) for a(0) = 1, from (log a)' = a'/a.
TruncatedSeries log_series(const TruncatedSeries& a);
/// Square root with s(0) = +1; requires a(0) = 1.
TruncatedSeries sqrt_series(const TruncatedSeries& a);
/// outer(inner(z)); inner(0) must be 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
/// Antiderivative of a(x)/x vanishing at 0: c_k z^k -> (c_k / k) z^k. Requires a(0) = 0.
TruncatedSeries integrate_quotient(const TruncatedSeries& a);

/// Formal derivative; order drops by one.
TruncatedSeries derivative(const TruncatedSeries& a);
/// z a'(z): c_k -> k c_k. Order is kept.
TruncatedSeries euler_derivative(const TruncatedSeries& a);
/// Antiderivative vanishing at 0; order grows by one.
TruncatedSeries antiderivative(const TruncatedSeries& a);
/// a(z)/z for a(0) = 0; order drops by one.
TruncatedSeries divide_by_z(const TruncatedSeries& a);

/// Horner evaluation of the truncated polynomial at |z| < 1.
Complex evaluate(const TruncatedSeries& a, Complex z);

/// Evaluates at many points (x_i + i y_i) through the dispatched kernel.
/// Points must lie in the open unit disk.
void evaluate_batch(const TruncatedSeries& a, std::span<const double> xs, std::span<const double> ys,
                    std::span<double> out_re, std::span<double> out_im);

/// Bound on the discarded tail sum_{k>N} c_k z^k at |z| = r when |c_k| <= m:
/// m r^(N+1) / (1 - r).
double tail_bound(double coeff_bound, double r, int order);

/// Largest modulus |c_k| over the stored coefficients.
double max_coefficient_modulus(const TruncatedSeries& a);

}  // namespace lunehankel
