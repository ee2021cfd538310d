#pragma once

#include "cantor/integer.hpp"

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cantor {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored lowest degree first and kept canonical: no
/// trailing zeros, so the zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(Integer c);
  static IntPolynomial monomial(Integer c, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(int i) const;
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Human-readable form such as "1 + x^2 - 3x^5".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// P_D(x) = sum of x^d over the digit set.
IntPolynomial poly_from_digit_set(std::span<const std::int64_t> digits);

/// n-th cyclotomic polynomial, by exact division of x^n - 1 by the
/// cyclotomic factors of its proper divisors. Memoized; safe to call
/// concurrently.
IntPolynomial cyclotomic(std::int64_t n);

/// Phi_{p^t}(x) = Phi_p(x^{p^{t-1}}), built without any division.
IntPolynomial cyclotomic_prime_power(std::int64_t p, int t);

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
  /// False when some step needed a non-integral quotient coefficient; the
  /// remainder is then the partial remainder at that point.
  bool integral = true;
};

/// Long division over the integers. Divisor must be nonzero.
DivisionResult long_division(const IntPolynomial& f, const IntPolynomial& q);

bool divides(const IntPolynomial& q, const IntPolynomial& f);

/// f / q; throws InexactDivision carrying the remainder when q does not
/// divide f over the integers.
IntPolynomial exact_div(const IntPolynomial& f, const IntPolynomial& q);

/// x^deg(f) * f(1/x).
IntPolynomial reverse(const IntPolynomial& f);
Integer content(const IntPolynomial& f);
/// f / content(f), with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
IntPolynomial derivative(const IntPolynomial& f);
/// Removes the largest x^k factor.
IntPolynomial strip_x_power(const IntPolynomial& f);

/// lc(g)^(deg f - deg g + 1) * f mod g.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Greatest common divisor over Q, via the subresultant PRS. Primitive with
/// positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);

/// gcd(f, reverse(f)) after removing x-power factors. Contains every root of
/// f on the unit circle.
IntPolynomial self_reciprocal_part(const IntPolynomial& f);

/// Exact test for a complex root of modulus one. Reduces the self-reciprocal
/// part to a polynomial in y = x + 1/x and counts its real roots in [-2, 2]
/// with a Sturm sequence.
bool has_unit_circle_root(const IntPolynomial& f);

/// Number of distinct real roots in (a, b], for a < b not roots of f.
int sturm_root_count(const IntPolynomial& f, const Integer& a, const Integer& b);

}  // namespace cantor
