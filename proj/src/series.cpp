// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lunehankel/errors.hpp"
#include "lunehankel/kernels.hpp"

namespace lunehankel {
namespace {

void require_order(int order, const char* who) {
  if (order < 1) throw InvalidInput(std::string(who) + ": truncation order must be >= 1");
}

void require_constant(const TruncatedSeries& a, Complex expected, const char* who) {
  if (std::abs(a[0] - expected) != 0.0) {
    throw InvalidInput(std::string(who) + ": constant term must be " +
                       std::to_string(expected.real()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order, "TruncatedSeries");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(order(), "TruncatedSeries");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs, int order)
    : TruncatedSeries(order) {
  std::size_t k = 0;
  for (auto c : coeffs) {
    if (k >= coeffs_.size()) break;
    coeffs_[k++] = c;
  }
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, Complex c, int order) {
  TruncatedSeries s(order);
  if (degree < 0) throw InvalidInput("monomial: negative degree");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  require_order(new_order, "truncated");
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + std::min(new_order, order()) + 1);
  c.resize(static_cast<std::size_t>(new_order) + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Complex{-1.0} * a; }

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc{};
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    c[k] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Complex b0 = b[0];
  if (b0 == Complex{}) throw InvalidInput("series division: divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  require_constant(a, 0.0, "exp_series");
  const int n = a.order();
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1.0;
  // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
  for (int k = 1; k <= n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries log_series(const TruncatedSeries& a) {
  require_constant(a, 1.0, "log_series");
  const int n = a.order();
  std::vector<Complex> l(static_cast<std::size_t>(n) + 1);
  // k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  for (int k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
  require_constant(a, 1.0, "sqrt_series");
  const int n = a.order();
  std::vector<Complex> s(static_cast<std::size_t>(n) + 1);
  s[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    Complex acc = a[k];
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = 0.5 * acc;
  }
  return TruncatedSeries(std::move(s));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_constant(inner, 0.0, "compose");
  const int n = std::min(outer.order(), inner.order());
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  const TruncatedSeries w = inner.truncated(n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * w + TruncatedSeries::constant(outer[k], n);
  }
  return acc;
}

TruncatedSeries integrate_quotient(const TruncatedSeries& a) {
  require_constant(a, 0.0, "integrate_quotient");
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (int k = 1; k <= a.order(); ++k) c[k] /= static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() < 2) throw InvalidInput("derivative: order must be >= 2");
  std::vector<Complex> c(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) c[k - 1] = static_cast<double>(k) * a[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries euler_derivative(const TruncatedSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (int k = 0; k <= a.order(); ++k) c[k] *= static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries antiderivative(const TruncatedSeries& a) {
  std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries divide_by_z(const TruncatedSeries& a) {
  require_constant(a, 0.0, "divide_by_z");
  if (a.order() < 2) throw InvalidInput("divide_by_z: order must be >= 2");
  return TruncatedSeries(std::vector<Complex>(a.coeffs().begin() + 1, a.coeffs().end()));
}

Complex evaluate(const TruncatedSeries& a, Complex z) {
  if (!(std::abs(z) < 1.0)) throw InvalidInput("evaluate: |z| must be < 1");
  Complex acc{};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

void evaluate_batch(const TruncatedSeries& a, std::span<const double> xs, std::span<const double> ys,
                    std::span<double> out_re, std::span<double> out_im) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(std::hypot(xs[i], ys[i]) < 1.0)) throw InvalidInput("evaluate_batch: |z| must be < 1");
  }
  kernels::horner_batch(a.coeffs(), xs, ys, out_re, out_im);
}

double tail_bound(double coeff_bound, double r, int order) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidInput("tail_bound: r must lie in [0, 1)");
  return coeff_bound * std::pow(r, order + 1) / (1.0 - r);
}

double max_coefficient_modulus(const TruncatedSeries& a) {
  double m = 0.0;
  for (auto c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace lunehankel
