// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lunehankel/errors.hpp"
#include "lunehankel/log_hankel.hpp"
#include "test_support.hpp"

using namespace lunehankel;
using namespace lunehankel::testing;

namespace {

TruncatedSeries random_prefix_polynomial(int order = 6, double scale = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int k = 2; k <= 6 && k <= order; ++k) c[k] = random_complex(scale);
  return TruncatedSeries(std::move(c));
}

// Leibniz expansion over all permutations; test-only oracle.
Complex det_by_permutations(const std::vector<std::vector<Complex>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("log_coeffs_series examples") {
  const auto zero = log_coeffs_series(TruncatedSeries::variable(8));
  for (int n = 1; n <= 5; ++n) CHECK(zero(n) == Complex{});

  const auto k = log_coeffs_series(koebe());
  for (int n = 1; n <= 5; ++n) CHECK_CLOSE(k(n), Complex(1.0 / n), 1e-12);

  const auto g = log_coeffs_series(extremal_g());
  CHECK_CLOSE(g(1), Complex(0.0), 1e-15);
  CHECK_CLOSE(g(2), Complex(0.25), 1e-15);
  CHECK_CLOSE(g(3), Complex(0.0), 1e-15);

  CHECK_THROWS_AS(log_coeffs_series(koebe(5)), InvalidInput);
  CHECK_THROWS_AS(zero(6), InvalidInput);
}

TEST_CASE("log_coeffs_closed examples") {
  const auto zero = log_coeffs_closed({0.0, 0.0, 0.0, Complex{}, Complex{}});
  CHECK(zero.count() == 5);
  for (int n = 1; n <= 5; ++n) CHECK(zero(n) == Complex{});

  const auto k = log_coeffs_closed({2.0, 3.0, 4.0, Complex(5.0), Complex(6.0)});
  for (int n = 1; n <= 5; ++n) CHECK_CLOSE(k(n), Complex(1.0 / n), 1e-12);

  CHECK(log_coeffs_closed({1.0, 1.0, 1.0, std::nullopt, std::nullopt}).count() == 3);
  CHECK(log_coeffs_closed({1.0, 1.0, 1.0, Complex(1.0), std::nullopt}).count() == 4);
}

TEST_CASE("closed gamma formulas agree with the series definition") {
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_prefix_polynomial();
    const auto a = TaylorPrefix::from_series(f);
    const auto s = log_coeffs_series(f);
    const auto c = log_coeffs_closed(a);
    REQUIRE(c.count() == 5);
    for (int n = 1; n <= 5; ++n) CHECK_CLOSE(s(n), c(n), 1e-10);
  }
}

TEST_CASE("h21 from logarithmic coefficients") {
  const auto g = extremal_g();
  const auto hg = h21_log(log_coeffs_series(g), TaylorPrefix::from_series(g));
  CHECK_CLOSE(hg.value, Complex(-1.0 / 16.0), 1e-10);
  REQUIRE(hg.taylor_form.has_value());
  CHECK_CLOSE(*hg.taylor_form, hg.value, 1e-12);

  const auto h = extremal_h().h;
  const auto hh = h21_log(log_coeffs_series(h));
  CHECK_CLOSE(hh.value, Complex(-23.0 / 3264.0), 1e-10);
  CHECK(hh.modulus() == doctest::Approx(0.00704657).epsilon(1e-6));

  CHECK(h21_log(log_coeffs_series(TruncatedSeries::variable(6))).value == Complex{});

  for (int i = 0; i < 200; ++i) {
    const auto f = random_prefix_polynomial();
    const auto v = h21_log(log_coeffs_series(f), TaylorPrefix::from_series(f));
    CHECK_CLOSE(*v.taylor_form, v.value, 1e-12);
  }
}

TEST_CASE("h21_from_c examples") {
  CHECK_CLOSE(h21_from_c({2.0, 2.0, 2.0}, ClassId::LuneStarlike).value, Complex(-1.0 / 64.0), 1e-15);
  CHECK_CLOSE(h21_from_c({2.0, 2.0, 2.0}, ClassId::LuneConvex).value, Complex(-1.0 / 768.0), 1e-15);
  CHECK_CLOSE(h21_from_c({0.0, 2.0, 0.0}, ClassId::LuneStarlike).value, Complex(-1.0 / 16.0), 1e-15);
  const auto v = h21_from_c({0.0, 2.0, 0.0}, ClassId::LuneConvex);
  CHECK(v.coordinates == Coordinates::CaratheodoryC);
  CHECK(v.class_tag == ClassId::LuneConvex);
}

TEST_CASE("h21_from_tau examples") {
  for (double th : {0.0, 0.7, 2.0, 3.14159}) {
    const Complex t2 = std::polar(1.0, th);
    const auto s = h21_from_tau({0.0, t2, 0.4}, ClassId::LuneStarlike);
    CHECK_CLOSE(s.value, -std::polar(1.0, 2 * th) / 16.0, 1e-15);
    CHECK(h21_from_tau({0.0, t2}, ClassId::LuneConvex).modulus() ==
          doctest::Approx(1.0 / 144.0).epsilon(1e-13));
  }
  const double t1 = std::sqrt(2.0 / 17.0);
  for (Complex t3 : {Complex(0.0), Complex(1.0), Complex(0.0, -1.0)}) {
    CHECK_CLOSE(h21_from_tau({t1, -1.0, t3}, ClassId::LuneConvex).value, Complex(-23.0 / 3264.0),
                1e-12);
  }
}

TEST_CASE("tau form equals the c form through the parameterization") {
  for (int i = 0; i < 2000; ++i) {
    const CaratheodoryPoint t(uniform(0, 1), std::polar(std::sqrt(uniform(0, 1)), uniform(0, 7)),
                              std::polar(std::sqrt(uniform(0, 1)), uniform(0, 7)));
    for (auto cls : {ClassId::LuneStarlike, ClassId::LuneConvex}) {
      CHECK_CLOSE(h21_from_tau(t, cls).value, h21_from_c(coeffs_from_params(t), cls).value, 1e-10);
      CHECK_CLOSE(h21_from_c(coeffs_from_params(t), cls).value,
                  h21_taylor(coeffs_from_c(coeffs_from_params(t), cls)), 1e-10);
    }
  }
}

TEST_CASE("hankel_generic") {
  const std::vector<Complex> seq{0.0, 2.0, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0};
  CHECK(hankel_generic(seq, 1, 3) == Complex(5.0));
  CHECK(hankel_generic(std::vector<Complex>(5, Complex(2.5)), 2, 0) == Complex{});

  const auto g = log_coeffs_series(extremal_g());
  CHECK_CLOSE(hankel_generic(g.sequence(), 2, 1), Complex(-1.0 / 16.0), 1e-12);
  CHECK_CLOSE(hankel_generic(g.sequence(), 2, 1), h21_log(g).value, 1e-15);

  for (int q = 2; q <= 5; ++q) {
    std::vector<Complex> s(12);
    for (auto& x : s) x = random_complex();
    std::vector<std::vector<Complex>> m(q, std::vector<Complex>(q));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) m[i][j] = s[1 + i + j];
    CHECK_CLOSE(hankel_generic(s, q, 1), det_by_permutations(m), 1e-12);
  }

  CHECK_THROWS_AS(hankel_generic(seq, 3, 4), InvalidInput);
  CHECK_THROWS_AS(hankel_generic(seq, 0, 1), InvalidInput);
}

TEST_CASE("rotation") {
  const auto g = extremal_g(16);
  CHECK(max_coeff_diff(rotate(g, 0.0), g) == 0.0);
  const auto h = [](const TruncatedSeries& f) { return h21_log(log_coeffs_series(f)).value; };
  CHECK(std::abs(h(rotate(g, std::numbers::pi / 2))) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  for (int i = 0; i < 100; ++i) {
    const auto f = random_prefix_polynomial(8);
    const double theta = uniform(-4.0, 4.0);
    CHECK_CLOSE(h(rotate(f, theta)), std::polar(1.0, 4 * theta) * h(f), 1e-12);
    if (i == 0) CHECK_CLOSE(h(rotate(f, std::numbers::pi / 4)), -h(f), 1e-12);
  }
  CHECK_THROWS_AS(rotate(koebe(6) + koebe(6), 0.3), InvalidInput);
}
