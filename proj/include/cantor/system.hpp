#pragma once

#include "cantor/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace cantor {

struct SystemLimits {
  std::int64_t max_digit = 10'000;
  std::int64_t max_modulus = 1'000'000;
};

/// Validated Cantor system: contraction base N = p^alpha and digit set D in
/// distinct residue classes mod N, together with the derived set
/// T = {t in [1, alpha] : Phi_{p^t} | P_D}.
class CantorSystem {
 public:
  std::int64_t p() const noexcept { return p_; }
  int alpha() const noexcept { return alpha_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  /// Sorted ascending.
  const std::vector<std::int64_t>& digits() const noexcept { return digits_; }
  /// Sorted ascending.
  const std::vector<int>& cyclotomic_exponents() const noexcept { return exponents_; }
  std::size_t digit_count() const noexcept { return digits_.size(); }
  std::int64_t max_digit() const noexcept { return digits_.back(); }

  /// p^|T|, the bound on next-digit branching of orthogonal frequency sets.
  std::int64_t branching_bound() const noexcept { return branching_bound_; }

  /// P_D is exactly the product of Phi_{p^t} over t in T.
  bool is_cyclotomic_product() const noexcept { return cyclotomic_product_; }
  /// Every unit-circle root of P_D is a root of some Phi_{p^t}, t in T.
  bool circle_hypothesis() const noexcept { return circle_hypothesis_; }

  bool in_exponent_set(int t) const noexcept;

  const IntPolynomial& digit_polynomial() const noexcept { return digit_poly_; }
  /// P_D divided by the product of the Phi_{p^t}, t in T.
  const IntPolynomial& residual_factor() const noexcept { return residual_; }

  friend CantorSystem build_system(std::int64_t, int, std::span<const std::int64_t>,
                                   const SystemLimits&);

 private:
  CantorSystem() = default;

  std::int64_t p_ = 0;
  int alpha_ = 0;
  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> digits_;
  std::vector<int> exponents_;
  std::int64_t branching_bound_ = 1;
  bool cyclotomic_product_ = false;
  bool circle_hypothesis_ = false;
  IntPolynomial digit_poly_;
  IntPolynomial residual_;
};

/// Throws ValidationError naming the offending value.
CantorSystem build_system(std::int64_t p, int alpha, std::span<const std::int64_t> digits,
                          const SystemLimits& limits = {});

inline CantorSystem build_system(std::int64_t p, int alpha,
                                 std::initializer_list<std::int64_t> digits) {
  return build_system(p, alpha, std::span<const std::int64_t>(digits.begin(), digits.size()));
}

/// m_D(delta / N) == 0, decided by alpha - v_p(delta) in T.
/// Requires 0 < |delta| < N.
bool admissible_label_difference(const CantorSystem& system, std::int64_t delta);

void to_json(nlohmann::json& j, const CantorSystem& system);
CantorSystem system_from_json(const nlohmann::json& j);

}  // namespace cantor
