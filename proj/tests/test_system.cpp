#include "cantor/errors.hpp"
#include "cantor/system.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace cantor;
using cantor::testing::numeric_mask_zero;
using cantor::testing::numeric_primitive_root_zero;

namespace {

ValidationKind kind_of(std::int64_t p, int alpha, std::vector<std::int64_t> d) {
  try {
    build_system(p, alpha, d);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ValidationKind::EmptyDigitSet;
}

}  // namespace

TEST_CASE("reference systems") {
  auto s = build_system(2, 2, {0, 2});
  CHECK(s.modulus() == 4);
  CHECK(s.cyclotomic_exponents() == std::vector<int>{2});
  CHECK(s.is_cyclotomic_product());
  CHECK(s.circle_hypothesis());
  CHECK(s.branching_bound() == 2);

  auto s8 = build_system(2, 3, {6, 0, 4, 2});
  CHECK(s8.digits() == std::vector<std::int64_t>{0, 2, 4, 6});
  CHECK(s8.cyclotomic_exponents() == std::vector<int>{2, 3});
  CHECK(s8.is_cyclotomic_product());
  CHECK(s8.branching_bound() == 4);

  auto s3 = build_system(3, 1, {0, 1, 2});
  CHECK(s3.cyclotomic_exponents() == std::vector<int>{1});
  CHECK(s3.is_cyclotomic_product());

  // 0 and 1 are distinct mod 4: not an error.
  CHECK_NOTHROW(build_system(2, 2, {0, 1}));
}

TEST_CASE("validation errors name the offending value") {
  CHECK(kind_of(4, 1, {0, 1}) == ValidationKind::NonPrimeBase);
  CHECK(kind_of(2, 0, {0}) == ValidationKind::ExponentTooSmall);
  CHECK(kind_of(2, 2, {}) == ValidationKind::EmptyDigitSet);
  CHECK(kind_of(2, 2, {0, -3}) == ValidationKind::NegativeDigit);
  CHECK(kind_of(2, 2, {0, 4}) == ValidationKind::ResidueCollision);
  CHECK(kind_of(2, 2, {0, 20000}) == ValidationKind::DigitTooLarge);
  CHECK(kind_of(2, 30, {0}) == ValidationKind::ModulusTooLarge);
  try {
    build_system(2, 2, {0, 4});
  } catch (const ValidationError& e) {
    CHECK(e.value() == 4);
    CHECK(std::string(e.what()).find("0 and 4") != std::string::npos);
  }
}

TEST_CASE("hypothesis flags on non-product systems") {
  // P_D = 1 + x + x^2 = Phi_3 is never a Phi_{2^t}: T empty, and its roots
  // sit on the circle outside the allowed factors.
  auto a = build_system(2, 3, {0, 1, 2});
  CHECK(a.cyclotomic_exponents().empty());
  CHECK_FALSE(a.is_cyclotomic_product());
  CHECK_FALSE(a.circle_hypothesis());

  // P_D = 1 + x + x^3 has no unit-circle roots at all.
  auto b = build_system(2, 2, {0, 1, 3});
  CHECK(b.cyclotomic_exponents().empty());
  CHECK_FALSE(b.is_cyclotomic_product());
  CHECK(b.circle_hypothesis());

  // 1 + x^2 + x^3 + x^5 = (1 + x^2)(1 + x^3): Phi_4 * Phi_2 * Phi_6 with
  // N = 8, so T = {1, 2} but Phi_6 breaks the circle hypothesis.
  auto c = build_system(2, 3, {0, 2, 3, 5});
  CHECK(c.cyclotomic_exponents() == std::vector<int>{1, 2});
  CHECK_FALSE(c.is_cyclotomic_product());
  CHECK_FALSE(c.circle_hypothesis());
}

TEST_CASE("admissible label differences") {
  auto s8 = build_system(2, 3, {0, 2, 4, 6});
  CHECK_FALSE(admissible_label_difference(s8, 4));
  CHECK(admissible_label_difference(s8, 2));
  CHECK(admissible_label_difference(s8, -3));
  auto s4 = build_system(2, 2, {0, 2});
  CHECK(admissible_label_difference(s4, 1));
  CHECK_FALSE(admissible_label_difference(s4, 2));
  CHECK_THROWS_AS(admissible_label_difference(s4, 0), DomainError);
  CHECK_THROWS_AS(admissible_label_difference(s4, 4), DomainError);
  CHECK_THROWS_AS(admissible_label_difference(s4, -4), DomainError);
}

namespace {

// Random valid systems: p in {2, 3, 5}, alpha <= 3, digits in distinct
// residue classes, some built as products of Phi_{p^t} so T is nonempty.
std::vector<CantorSystem> random_systems(int count) {
  std::mt19937_64 rng(99);
  std::vector<CantorSystem> out;
  const std::int64_t primes[] = {2, 3, 5};
  while (static_cast<int>(out.size()) < count) {
    const std::int64_t p = primes[rng() % 3];
    const int alpha = 1 + static_cast<int>(rng() % 3);
    std::int64_t n = 1;
    for (int i = 0; i < alpha; ++i) n *= p;
    const std::size_t m = 1 + rng() % std::min<std::int64_t>(n, 6);
    std::set<std::int64_t> residues;
    std::vector<std::int64_t> d;
    while (d.size() < m) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * n));
      if (residues.insert(x % n).second) d.push_back(x);
    }
    out.push_back(build_system(p, alpha, d));
  }
  // Tensor-style digit sets d = sum s_t p^{alpha - t} with T prescribed.
  out.push_back(build_system(3, 2, {0, 3, 6}));
  out.push_back(build_system(3, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  out.push_back(build_system(5, 1, {0, 1, 2, 3, 4}));
  out.push_back(build_system(2, 3, {0, 1, 4, 5}));
  out.push_back(build_system(2, 3, {0, 1}));
  return out;
}

}  // namespace

TEST_CASE("exact properties hold on random systems") {
  for (const auto& s : random_systems(60)) {
    CAPTURE(s.p());
    CAPTURE(s.alpha());
    CAPTURE(s.digit_polynomial().to_string());

    // T by divisibility agrees with numerically testing primitive p^t-th roots.
    std::int64_t q = 1;
    for (int t = 1; t <= s.alpha(); ++t) {
      q *= s.p();
      CHECK(s.in_exponent_set(t) == numeric_primitive_root_zero(s.digit_polynomial(), q));
    }
    // Sanity: Phi_{p^{alpha+1}} never divides P_D.
    CHECK_FALSE(divides(cyclotomic_prime_power(s.p(), s.alpha() + 1), s.digit_polynomial()));

    CHECK(s.branching_bound() <= static_cast<std::int64_t>(s.digit_count()));
    if (s.is_cyclotomic_product()) {
      CHECK(s.circle_hypothesis());
      CHECK(s.branching_bound() == static_cast<std::int64_t>(s.digit_count()));
    }

    for (std::int64_t delta = 1 - s.modulus(); delta < s.modulus(); ++delta) {
      if (delta == 0) continue;
      CHECK(admissible_label_difference(s, delta) == numeric_mask_zero(s, delta));
    }
  }
}

TEST_CASE("json serialization") {
  auto s = build_system(2, 3, {0, 2, 4, 6});
  nlohmann::json j = s;
  CHECK(j.dump() ==
        R"({"D":[0,2,4,6],"N":8,"T":[2,3],"alpha":3,"circle_hypothesis":true,"is_cyclotomic_product":true,"p":2})");
  auto back = system_from_json(j);
  CHECK(back.digits() == s.digits());
  CHECK(back.cyclotomic_exponents() == s.cyclotomic_exponents());
}
