#pragma once

// Test-only oracles, independent of the exact code paths they check.

#include "cantor/polynomial.hpp"
#include "cantor/system.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace cantor::testing {

/// Roots of f from the eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> numeric_roots(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = f.leading().convert_to<double>();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i).convert_to<double>() / lead;
  Eigen::VectorXcd ev = c.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// N^{-1} sum_d e(d t) by direct summation in long double.
inline std::complex<long double> direct_mask(const std::vector<std::int64_t>& digits, std::int64_t modulus,
                                             long double t) {
  std::complex<long double> acc = 0;
  for (auto d : digits) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(d) * t;
    acc += std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return acc / static_cast<long double>(modulus);
}

/// m_D(delta / N) == 0, numerically.
inline bool numeric_mask_zero(const CantorSystem& s, std::int64_t delta) {
  const long double t = static_cast<long double>(delta) / static_cast<long double>(s.modulus());
  return std::abs(direct_mask(s.digits(), s.modulus(), t)) < 1e-10L;
}

/// Whether a primitive q-th root of unity annihilates f, numerically.
inline bool numeric_primitive_root_zero(const IntPolynomial& f, std::int64_t q) {
  // e(1/q) is primitive of order q.
  const std::complex<long double> z = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> / q);
  std::complex<long double> acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * z + f.coeff(i).convert_to<long double>();
  return std::abs(acc) < 1e-8L;
}

}  // namespace cantor::testing
