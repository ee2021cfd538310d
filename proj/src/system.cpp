#include "cantor/system.hpp"

#include "cantor/errors.hpp"


#include <algorithm>
#include <map>

namespace cantor {

bool CantorSystem::in_exponent_set(int t) const noexcept {
  return std::binary_search(exponents_.begin(), exponents_.end(), t);
}

CantorSystem build_system(std::int64_t p, int alpha, std::span<const std::int64_t> digits,
                          const SystemLimits& limits) {
  if (!is_prime(p)) {
    throw ValidationError(ValidationKind::NonPrimeBase, p,
                          "p = " + std::to_string(p) + " is not prime");
  }
  if (alpha < 1) {
    throw ValidationError(ValidationKind::ExponentTooSmall, alpha,
                          "alpha = " + std::to_string(alpha) + " must be at least 1");
  }
  std::int64_t modulus = 1;
  for (int i = 0; i < alpha; ++i) {
    if (modulus > limits.max_modulus / p) {
      throw ValidationError(ValidationKind::ModulusTooLarge, p,
                            "N = " + std::to_string(p) + "^" + std::to_string(alpha) +
                                " exceeds the cap " + std::to_string(limits.max_modulus));
    }
    modulus *= p;
  }
  if (digits.empty()) throw ValidationError(ValidationKind::EmptyDigitSet, 0, "digit set is empty");

  std::map<std::int64_t, std::int64_t> residues;
  for (auto d : digits) {
    if (d < 0) {
      throw ValidationError(ValidationKind::NegativeDigit, d,
                            "digit " + std::to_string(d) + " is negative");
    }
    if (d > limits.max_digit) {
      throw ValidationError(ValidationKind::DigitTooLarge, d,
                            "digit " + std::to_string(d) + " exceeds the cap " +
                                std::to_string(limits.max_digit));
    }
    auto [it, fresh] = residues.emplace(d % modulus, d);
    if (!fresh) {
      throw ValidationError(ValidationKind::ResidueCollision, d,
                            "digits " + std::to_string(it->second) + " and " + std::to_string(d) +
                                " share a residue class mod " + std::to_string(modulus));
    }
  }

  CantorSystem s;
  s.p_ = p;
  s.alpha_ = alpha;
  s.modulus_ = modulus;
  s.digits_.assign(digits.begin(), digits.end());
  std::sort(s.digits_.begin(), s.digits_.end());
  s.digit_poly_ = poly_from_digit_set(s.digits_);

  IntPolynomial product{1};
  std::int64_t phi = p - 1;  // degree of Phi_{p^t}
  for (int t = 1; t <= alpha; ++t, phi *= p) {
    if (phi > s.digit_poly_.degree()) break;
    IntPolynomial factor = cyclotomic_prime_power(p, t);
    if (divides(factor, s.digit_poly_)) {
      s.exponents_.push_back(t);
      product = product * factor;
      s.branching_bound_ *= p;
    }
  }
  s.residual_ = exact_div(s.digit_poly_, product);
  s.cyclotomic_product_ = s.residual_ == IntPolynomial{1};

  // Remove every Phi_{p^t} (t in T) factor with multiplicity from the
  // self-reciprocal part of the residual; what is left must avoid the circle.
  IntPolynomial rest = self_reciprocal_part(s.residual_);
  for (int t : s.exponents_) {
    IntPolynomial factor = cyclotomic_prime_power(p, t);
    while (rest.degree() >= factor.degree() && divides(factor, rest)) rest = exact_div(rest, factor);
  }
  s.circle_hypothesis_ = !has_unit_circle_root(rest);
  return s;
}

bool admissible_label_difference(const CantorSystem& system, std::int64_t delta) {
  if (delta == 0 || delta <= -system.modulus() || delta >= system.modulus()) {
    throw DomainError("label difference " + std::to_string(delta) + " outside (-N, N) \\ {0}");
  }
  const int v = valuation(delta < 0 ? -delta : delta, system.p());
  return system.in_exponent_set(system.alpha() - v);
}

void to_json(nlohmann::json& j, const CantorSystem& s) {
  j = nlohmann::json{{"p", s.p()},
                     {"alpha", s.alpha()},
                     {"N", s.modulus()},
                     {"D", s.digits()},
                     {"T", s.cyclotomic_exponents()},
                     {"is_cyclotomic_product", s.is_cyclotomic_product()},
                     {"circle_hypothesis", s.circle_hypothesis()}};
}

CantorSystem system_from_json(const nlohmann::json& j) {
  auto digits = j.at("D").get<std::vector<std::int64_t>>();
  return build_system(j.at("p").get<std::int64_t>(), j.at("alpha").get<int>(), digits);
}

}  // namespace cantor
