// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/log_hankel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "lunehankel/errors.hpp"

namespace lunehankel {

Complex LogCoeffs::operator()(int n) const {
  if (n < 1 || n > count()) {
    throw InvalidInput("LogCoeffs: gamma_" + std::to_string(n) + " is not available");
  }
  return gamma[static_cast<std::size_t>(n - 1)];
}

std::vector<Complex> LogCoeffs::sequence() const {
  std::vector<Complex> s{Complex{}};
  s.insert(s.end(), gamma.begin(), gamma.end());
  return s;
}

LogCoeffs log_coeffs_series(const TruncatedSeries& f) {
  if (f.order() < 6) throw InvalidInput("log_coeffs_series: order must be >= 6");
  const TruncatedSeries l = log_series(divide_by_z(f));
  LogCoeffs g;
  for (int n = 1; n <= 5; ++n) g.gamma.push_back(0.5 * l[n]);
  return g;
}

LogCoeffs log_coeffs_closed(const TaylorPrefix& p) {
  const Complex a2 = p.a2;
  const Complex a3 = p.a3;
  const Complex a4 = p.a4;
  const Complex a2_2 = a2 * a2;
  LogCoeffs g;
  g.gamma.push_back(0.5 * a2);
  g.gamma.push_back(0.5 * (a3 - 0.5 * a2_2));
  g.gamma.push_back(0.5 * (a4 - a2 * a3 + a2_2 * a2 / 3.0));
  if (p.a5) {
    const Complex a5 = *p.a5;
    g.gamma.push_back(0.5 * (a5 - a2 * a4 + a2_2 * a3 - 0.5 * a3 * a3 - 0.25 * a2_2 * a2_2));
    if (p.a6) {
      const Complex a6 = *p.a6;
      g.gamma.push_back(0.5 * (a6 - a2 * a5 - a3 * a4 + a2 * a3 * a3 + a2_2 * a4 -
                               a2_2 * a2 * a3 + a2_2 * a2_2 * a2 / 5.0));
    }
  }
  return g;
}

HankelValue h21_log(const LogCoeffs& g) {
  return {g(1) * g(3) - g(2) * g(2), std::nullopt, Coordinates::Taylor, std::nullopt};
}

HankelValue h21_log(const LogCoeffs& g, const TaylorPrefix& a) {
  HankelValue h = h21_log(g);
  h.taylor_form = h21_taylor(a);
  return h;
}

Complex h21_taylor(const TaylorPrefix& a) {
  const Complex a2_2 = a.a2 * a.a2;
  return (a2_2 * a2_2 - 12.0 * a.a3 * a.a3 + 12.0 * a.a2 * a.a4) / 48.0;
}

HankelValue h21_from_c(const CaratheodoryCoeffs& c, ClassId cls) {
  const Complex c1 = c.c1;
  const Complex c1_2 = c1 * c1;
  Complex v;
  if (cls == ClassId::LuneStarlike) {
    v = (-3.0 * c1_2 * c1_2 - 8.0 * c1_2 * c.c2 - 48.0 * c.c2 * c.c2 + 64.0 * c1 * c.c3) / 3072.0;
  } else {
    v = (-7.0 * c1_2 * c1_2 - 8.0 * c1_2 * c.c2 - 64.0 * c.c2 * c.c2 + 96.0 * c1 * c.c3) / 36864.0;
  }
  return {v, cls, Coordinates::CaratheodoryC, std::nullopt};
}

HankelValue h21_from_tau(const CaratheodoryPoint& t, ClassId cls) {
  const double t1 = t.tau1();
  const double t1_2 = t1 * t1;
  const double s = 1.0 - t1_2;
  const Complex t2 = t.tau2();
  const Complex t3 = t.tau3();
  const double m2 = std::norm(t2);
  Complex v;
  if (cls == ClassId::LuneStarlike) {
    v = (-3.0 * t1_2 * t1_2 + 4.0 * s * t1_2 * t2 - 4.0 * s * (3.0 + t1_2) * t2 * t2 +
         16.0 * t1 * t3 * s * (1.0 - m2)) /
        192.0;
  } else {
    v = (-3.0 * t1_2 * t1_2 + 12.0 * s * t1_2 * t2 - 8.0 * s * (2.0 + t1_2) * t2 * t2 +
         24.0 * t1 * t3 * s * (1.0 - m2)) /
        2304.0;
  }
  return {v, cls, Coordinates::TauParams, std::nullopt};
}

namespace {

Complex det_lu(std::vector<Complex> m, int q) {
  Complex det = 1.0;
  auto at = [&](int i, int j) -> Complex& { return m[static_cast<std::size_t>(i * q + j)]; };
  for (int col = 0; col < q; ++col) {
    int piv = col;
    for (int r = col + 1; r < q; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    }
    if (at(piv, col) == Complex{}) return 0.0;
    if (piv != col) {
      for (int j = 0; j < q; ++j) std::swap(at(piv, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int r = col + 1; r < q; ++r) {
      const Complex f = at(r, col) / at(col, col);
      for (int j = col; j < q; ++j) at(r, j) -= f * at(col, j);
    }
  }
  return det;
}

}  // namespace

Complex hankel_generic(std::span<const Complex> seq, int q, int n) {
  if (q < 1 || n < 0) throw InvalidInput("hankel_generic: need q >= 1 and n >= 0");
  if (seq.size() <= static_cast<std::size_t>(n + 2 * (q - 1))) {
    throw InvalidInput("hankel_generic: sequence too short for the requested determinant");
  }
  auto e = [&](int i, int j) { return seq[static_cast<std::size_t>(n + i + j)]; };
  switch (q) {
    case 1:
      return e(0, 0);
    case 2:
      return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    case 3:
      return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
             e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
             e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    default: {
      std::vector<Complex> m(static_cast<std::size_t>(q * q));
      for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) m[static_cast<std::size_t>(i * q + j)] = e(i, j);
      }
      return det_lu(std::move(m), q);
    }
  }
}

TruncatedSeries rotate(const TruncatedSeries& f, double theta) {
  if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - 1.0) > 1e-12) {
    throw InvalidInput("rotate: expected f(0) = 0 and f'(0) = 1");
  }
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (int k = 2; k <= f.order(); ++k) c[k] *= std::polar(1.0, (k - 1) * theta);
  return TruncatedSeries(std::move(c));
}

}  // namespace lunehankel
