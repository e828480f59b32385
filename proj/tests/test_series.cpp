// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "lunehankel/errors.hpp"
#include "lunehankel/series.hpp"
#include "test_support.hpp"

using namespace lunehankel;
using namespace lunehankel::testing;

namespace {

TruncatedSeries geometric(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{1.0});
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction keeps exactly order + 1 coefficients") {
  const TruncatedSeries a({1.0, 2.0, 3.0, 4.0}, 2);
  CHECK(a.order() == 2);
  CHECK(a.coeffs().size() == 3);
  CHECK(a[3] == Complex{});
  CHECK(TruncatedSeries({1.0}, 5).coeffs().size() == 6);
  CHECK_THROWS_AS(TruncatedSeries(0), InvalidInput);
}

TEST_CASE("addition") {
  CHECK(max_coeff_diff(TruncatedSeries({1.0, 1.0}, 4) + TruncatedSeries({1.0, -1.0}, 4),
                       TruncatedSeries::constant(2.0, 4)) == 0.0);
  const auto z = TruncatedSeries::variable(3);
  CHECK(max_coeff_diff(z + TruncatedSeries(3), z) == 0.0);

  const auto sum = TruncatedSeries({1.0, 2.0, 3.0}, 2) + TruncatedSeries({1.0, 1.0}, 5);
  CHECK(sum.order() == 2);
  CHECK(max_coeff_diff(sum, TruncatedSeries({2.0, 3.0, 3.0}, 2)) == 0.0);
}

TEST_CASE("multiplication") {
  CHECK(max_coeff_diff(TruncatedSeries({1.0, 1.0}, 4) * TruncatedSeries({1.0, -1.0}, 4),
                       TruncatedSeries({1.0, 0.0, -1.0}, 4)) == 0.0);
  const auto z = TruncatedSeries::variable(4);
  CHECK(max_coeff_diff(z * z, TruncatedSeries::monomial(2, 1.0, 4)) == 0.0);
  const TruncatedSeries p({1.0, 1.0, 1.0}, 6);
  CHECK(max_coeff_diff(p * p, TruncatedSeries({1.0, 2.0, 3.0, 2.0, 1.0}, 6)) == 0.0);
  CHECK((TruncatedSeries(3) * TruncatedSeries(7)).order() == 3);
}

TEST_CASE("division") {
  const auto q = TruncatedSeries({1.0, 0.0, -1.0}, 8) / TruncatedSeries({1.0, -1.0}, 8);
  CHECK(max_coeff_diff(q, TruncatedSeries({1.0, 1.0}, 8)) < 1e-15);

  const auto geo = TruncatedSeries::constant(1.0, 10) / TruncatedSeries({1.0, -1.0}, 10);
  CHECK(max_coeff_diff(geo, geometric(10)) < 1e-15);

  // p = (1 - z^2)/(1 + z^2) gives the Schwarz function -z^2.
  const int n = 16;
  const auto one = TruncatedSeries::constant(1.0, n);
  const auto p = TruncatedSeries({1.0, 0.0, -1.0}, n) / TruncatedSeries({1.0, 0.0, 1.0}, n);
  CHECK(max_coeff_diff((p - one) / (p + one), TruncatedSeries::monomial(2, -1.0, n)) < 1e-14);

  CHECK_THROWS_AS(one / TruncatedSeries::variable(n), InvalidInput);
}

TEST_CASE("exp") {
  CHECK(max_coeff_diff(exp_series(TruncatedSeries(6)), TruncatedSeries::constant(1.0, 6)) == 0.0);
  const auto e = exp_series(TruncatedSeries({0.0, 0.0, 0.5, 0.0, 0.125}, 4));
  CHECK(max_coeff_diff(e, TruncatedSeries({1.0, 0.0, 0.5, 0.0, 0.25}, 4)) < 1e-15);
  CHECK_THROWS_AS(exp_series(TruncatedSeries::constant(1.0, 3)), InvalidInput);
}

TEST_CASE("log") {
  CHECK(max_coeff_diff(log_series(TruncatedSeries::constant(1.0, 5)), TruncatedSeries(5)) == 0.0);

  // Mercator: log 1/(1-z) = sum z^n / n.
  const int n = 40;
  const auto l = log_series(geometric(n));
  for (int k = 1; k <= n; ++k) CHECK_CLOSE(l[k], Complex(1.0 / k), 1e-14);

  const TruncatedSeries plus({1.0, 1.0}, n);
  const TruncatedSeries minus({1.0, -1.0}, n);
  CHECK(max_coeff_diff(log_series(plus * minus), log_series(plus) + log_series(minus)) < 1e-14);
  CHECK_THROWS_AS(log_series(TruncatedSeries::constant(2.0, 3)), InvalidInput);
}

TEST_CASE("sqrt") {
  CHECK(max_coeff_diff(sqrt_series(TruncatedSeries::constant(1.0, 4)),
                       TruncatedSeries::constant(1.0, 4)) == 0.0);
  const int n = 10;
  const auto s = sqrt_series(TruncatedSeries({1.0, 0.0, 1.0}, n));
  CHECK(max_coeff_diff(s, TruncatedSeries({1.0, 0.0, 0.5, 0.0, -0.125, 0.0, 0.0625, 0.0,
                                           -5.0 / 128.0, 0.0, 7.0 / 256.0},
                                          n)) < 1e-15);
  const auto s4 = sqrt_series(TruncatedSeries({1.0, 0.0, 0.0, 0.0, 1.0}, 11));
  CHECK(max_coeff_diff(s4, TruncatedSeries({1.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, -0.125}, 11)) <
        1e-15);
  CHECK_THROWS_AS(sqrt_series(TruncatedSeries::constant(4.0, 3)), InvalidInput);
}

TEST_CASE("compose") {
  const int n = 16;
  const auto one = TruncatedSeries::constant(1.0, n);
  const auto q = TruncatedSeries::variable(n) + sqrt_series(one + TruncatedSeries::monomial(2, 1.0, n));

  CHECK(max_coeff_diff(compose(q, TruncatedSeries(n)), one) == 0.0);
  CHECK(max_coeff_diff(compose(TruncatedSeries::monomial(2, 1.0, n), TruncatedSeries::variable(n)),
                       TruncatedSeries::monomial(2, 1.0, n)) == 0.0);

  // q(-z^2) = 1 - z^2 + z^4/2 - z^8/8 + z^12/16 - ...
  const auto qc = compose(q, TruncatedSeries::monomial(2, -1.0, n));
  CHECK(max_coeff_diff(qc, TruncatedSeries({1.0, 0.0, -1.0, 0.0, 0.5, 0.0, 0.0, 0.0, -0.125, 0.0,
                                            0.0, 0.0, 0.0625, 0.0, 0.0, 0.0, -5.0 / 128.0},
                                           n)) < 1e-15);
  CHECK_THROWS_AS(compose(q, one), InvalidInput);
}

TEST_CASE("integrate_quotient") {
  const int n = 12;
  CHECK(max_coeff_diff(integrate_quotient(TruncatedSeries::variable(n)),
                       TruncatedSeries::variable(n)) == 0.0);
  CHECK(max_coeff_diff(integrate_quotient(TruncatedSeries::monomial(3, 1.0, n)),
                       TruncatedSeries::monomial(3, 1.0 / 3.0, n)) < 1e-16);
  // z^2 + sqrt(1 + z^4) - 1 = z^2 + z^4/2 - z^8/8 + ...  ->  z^2/2 + z^4/8 - z^8/64 + ...
  const auto one = TruncatedSeries::constant(1.0, n);
  const auto a = TruncatedSeries::monomial(2, 1.0, n) +
                 sqrt_series(one + TruncatedSeries::monomial(4, 1.0, n)) - one;
  CHECK(max_coeff_diff(integrate_quotient(a),
                       TruncatedSeries({0.0, 0.0, 0.5, 0.0, 0.125, 0.0, 0.0, 0.0, -1.0 / 64.0, 0.0,
                                        0.0, 0.0, 1.0 / 192.0},
                                       n)) < 1e-16);
  CHECK_THROWS_AS(integrate_quotient(one), InvalidInput);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(TruncatedSeries({1.0, 1.0}, 3), 0.0) == Complex(1.0));
  CHECK_CLOSE(evaluate(geometric(128), 0.5), Complex(2.0), 1e-12);
  CHECK_CLOSE(evaluate(TruncatedSeries::variable(5), Complex(0.0, 0.3)), Complex(0.0, 0.3), 1e-16);
  CHECK_THROWS_AS(evaluate(geometric(4), 1.0), InvalidInput);
  CHECK_THROWS_AS(evaluate(geometric(4), Complex(0.8, 0.8)), InvalidInput);

  // Geometric series tail at r with |c_k| = 1 is exactly r^(N+1)/(1 - r).
  const double r = 0.9;
  const int order = 40;
  const double tail = std::abs(1.0 / (1.0 - r) - evaluate(geometric(order), r));
  CHECK(tail == doctest::Approx(tail_bound(1.0, r, order)).epsilon(1e-9));
}

TEST_CASE("batch evaluation matches pointwise Horner") {
  const auto a = random_series(64, 1.0);
  std::vector<double> xs, ys;
  for (int i = 0; i < 37; ++i) {
    const double r = uniform(0.0, 0.95);
    const double t = uniform(0.0, 6.3);
    xs.push_back(r * std::cos(t));
    ys.push_back(r * std::sin(t));
  }
  std::vector<double> re(xs.size()), im(xs.size());
  evaluate_batch(a, xs, ys, re, im);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK_CLOSE(Complex(re[i], im[i]), evaluate(a, {xs[i], ys[i]}), 1e-12);
  }
}

// Ring axioms and inverse pairs on random series.

TEST_CASE("ring axioms hold to truncation order") {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 20;
    const auto a = random_series(n, random_complex());
    const auto b = random_series(n, random_complex());
    const auto c = random_series(n, random_complex());
    CHECK(max_coeff_diff((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(max_coeff_diff(a * b, b * a) < 1e-12);
    CHECK(max_coeff_diff(a * (b + c), a * b + a * c) < 1e-12);
  }
}

TEST_CASE("division inverts multiplication") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_series(24, random_complex());
    const auto b = random_series(24, Complex(1.0) + 0.5 * random_complex(), 0.3);
    CHECK(max_coeff_diff((a * b) / b, a) < 1e-10);
  }
}

TEST_CASE("exp/log and sqrt/square round trips") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_series(24, 0.0, 0.5);
    CHECK(max_coeff_diff(log_series(exp_series(a)), a) < 1e-12);
    const auto b = random_series(24, 1.0, 0.5);
    CHECK(max_coeff_diff(exp_series(log_series(b)), b) < 1e-9);
    const auto s = sqrt_series(b);
    CHECK(s[0] == Complex(1.0));
    CHECK(max_coeff_diff(s * s, b) < 1e-10);
  }
}

TEST_CASE("exp, log and sqrt agree with pointwise evaluation") {
  // Low-degree inputs at |z| <= 0.3 keep the order-60 tails far below 1e-12.
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(3, 0.0).truncated(60);
    const auto b = random_series(3, 1.0, 0.2).truncated(60);
    const Complex z = std::polar(uniform(0.0, 0.3), uniform(0.0, 6.3));
    CHECK_CLOSE(evaluate(exp_series(a), z), std::exp(evaluate(a, z)), 1e-12);
    CHECK_CLOSE(evaluate(log_series(b), z), std::log(evaluate(b, z)), 1e-12);
    CHECK_CLOSE(evaluate(sqrt_series(b), z), std::sqrt(evaluate(b, z)), 1e-12);
  }
}

TEST_CASE("composition is associative and matches nested evaluation") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 16;
    const auto f = random_series(n, random_complex());
    const auto g = random_series(n, 0.0, 0.5);
    const auto h = random_series(n, 0.0, 0.5);
    CHECK(max_coeff_diff(compose(compose(f, g), h), compose(f, compose(g, h))) < 1e-11);

    const auto f3 = random_series(3, random_complex()).truncated(60);
    const auto g3 = random_series(3, 0.0, 0.5).truncated(60);
    const Complex z = std::polar(uniform(0.0, 0.3), uniform(0.0, 6.3));
    CHECK_CLOSE(evaluate(compose(f3, g3), z), evaluate(f3, evaluate(g3, z)), 1e-12);
  }
}

TEST_CASE("derivative of log(f/z) equals f'/f - 1/z") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 20;
    auto f = random_series(n, 0.0, 0.5);
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    c[1] = 1.0;
    f = TruncatedSeries(std::move(c));
    const auto lhs = derivative(log_series(divide_by_z(f)));
    // f'/f - 1/z = (z f' - f)/(z f) = ((z f' - f)/z^2) / (f/z)
    const auto rhs = divide_by_z(divide_by_z(euler_derivative(f) - f)) / divide_by_z(f);
    CHECK(max_coeff_diff(lhs, rhs.truncated(lhs.order())) < 1e-11);
  }
}

TEST_CASE("mixed orders truncate to the minimum") {
  const auto a = random_series(5, 1.0);
  const auto b = random_series(9, 1.0);
  CHECK((a + b).order() == 5);
  CHECK((a * b).order() == 5);
  CHECK((a / b).order() == 5);
  CHECK(compose(b, random_series(5, 0.0)).order() == 5);
}
