#include "cantor/orthogonality.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace cantor {

namespace {

bool zero_at_valuation(const CantorSystem& system, int v) {
  const int alpha = system.alpha();
  for (int t : system.cyclotomic_exponents()) {
    if ((v + t) % alpha == 0 && v + t >= alpha) return true;
  }
  return false;
}

bool orthogonal_int64(const CantorSystem& system, std::int64_t a, std::int64_t b) {
  if (a == b) return false;
  // |a - b| may overflow for extreme inputs; callers only pass values that fit
  // with headroom.
  return zero_at_valuation(system, valuation(a - b, system.p()));
}

bool fits_with_headroom(const Integer& k) {
  static const Integer limit = Integer(1) << 61;
  return k < limit && k > -limit;
}

void check_labels(const HadamardCandidate& cand) {
  if (cand.labels.size() != cand.digits.size()) {
    throw SizeMismatch("|L| = " + std::to_string(cand.labels.size()) + " differs from |D| = " +
                       std::to_string(cand.digits.size()));
  }
  if (cand.modulus < 2) throw DomainError("Hadamard modulus must be at least 2");
  std::set<std::int64_t> seen;
  for (auto l : cand.labels) {
    if (l < 0 || l >= cand.modulus) {
      throw DomainError("label " + std::to_string(l) + " outside [0, " +
                        std::to_string(cand.modulus - 1) + "]");
    }
    if (!seen.insert(l).second) throw DomainError("duplicate label " + std::to_string(l));
  }
}

}  // namespace

bool mu_hat_is_zero(const CantorSystem& system, const Integer& k) {
  if (k == 0) return false;
  return zero_at_valuation(system, valuation(k, system.p()));
}

bool are_orthogonal(const CantorSystem& system, const Integer& a, const Integer& b) {
  if (a == b) return false;
  return mu_hat_is_zero(system, a - b);
}

FamilyCheck is_orthogonal_family(const CantorSystem& system, const FrequencySet& set) {
  const auto& e = set.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!are_orthogonal(system, e[i], e[j])) return {false, std::make_pair(e[i], e[j])};
    }
  }
  return {};
}

bool BranchingProfile::within_bound() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const BranchRecord& r) { return r.within_bound; });
}

const BranchRecord* BranchingProfile::find(std::span<const std::int64_t> prefix) const {
  for (const auto& r : records) {
    if (std::equal(r.prefix.begin(), r.prefix.end(), prefix.begin(), prefix.end())) return &r;
  }
  return nullptr;
}

BranchingProfile branching_profile(const CantorSystem& system, const FrequencySet& set, int depth) {
  if (depth < 1) throw DomainError("profile depth must be at least 1");
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::set<std::int64_t>> seen;
  const auto n_max = static_cast<std::size_t>(depth);
  for (const auto& k : set) {
    auto digits = leading_digits(k, system.modulus(), n_max);
    std::vector<std::int64_t> prefix;
    prefix.reserve(n_max);
    for (std::size_t n = 0; n < n_max; ++n) {
      seen[{n, prefix}].insert(digits[n]);
      prefix.push_back(digits[n]);
    }
  }
  BranchingProfile profile;
  profile.bound = system.branching_bound();
  profile.depth = depth;
  profile.records.reserve(seen.size());
  for (auto& [key, digits] : seen) {
    BranchRecord r;
    r.prefix = key.second;
    r.digits.assign(digits.begin(), digits.end());
    r.within_bound = static_cast<std::int64_t>(r.digits.size()) <= profile.bound;
    profile.records.push_back(std::move(r));
  }
  return profile;
}

Eigen::MatrixXcd hadamard_matrix(const HadamardCandidate& cand) {
  check_labels(cand);
  const auto rows = static_cast<Eigen::Index>(cand.digits.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(rows));
  Eigen::MatrixXcd m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < rows; ++j) {
      // Reduce d*l mod N in integers so the phase stays accurate.
      const auto d = floor_mod(cand.digits[static_cast<std::size_t>(i)], cand.modulus);
      const auto l = cand.labels[static_cast<std::size_t>(j)];
      const auto r = static_cast<std::int64_t>((static_cast<__int128>(d) * l) % cand.modulus);
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(cand.modulus);
      m(i, j) = std::polar(scale, phase);
    }
  }
  return m;
}

double unitarity_deviation(const HadamardCandidate& cand) {
  const Eigen::MatrixXcd m = hadamard_matrix(cand);
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

bool hadamard_triple_check(const HadamardCandidate& cand, CheckMode mode) {
  check_labels(cand);
  if (mode == CheckMode::Numeric) return unitarity_deviation(cand) < kUnitarityTolerance;
  const IntPolynomial pd = poly_from_digit_set(cand.digits);
  for (std::size_t i = 0; i < cand.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.labels.size(); ++j) {
      const std::int64_t delta = std::abs(cand.labels[i] - cand.labels[j]);
      // e(delta/N) is a primitive root of unity of this order.
      const std::int64_t order = cand.modulus / std::gcd(delta, cand.modulus);
      if (!divides(cyclotomic(order), pd)) return false;
    }
  }
  return true;
}

bool hadamard_triple_check(const CantorSystem& system, std::span<const std::int64_t> labels,
                           CheckMode mode) {
  HadamardCandidate cand{system.modulus(), system.digits(), {labels.begin(), labels.end()}};
  check_labels(cand);
  if (mode == CheckMode::Numeric) return unitarity_deviation(cand) < kUnitarityTolerance;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (!admissible_label_difference(system, labels[i] - labels[j])) return false;
    }
  }
  return true;
}

HadamardEnumeration enumerate_hadamard_L(const CantorSystem& system) {
  HadamardEnumeration out;
  if (!system.is_cyclotomic_product()) {
    out.diagnostic = "P_D is not a product of Phi_{p^t}, t in T: label sets are capped at p^|T| = " +
                     std::to_string(system.branching_bound()) + " < |D| = " +
                     std::to_string(system.digit_count()) + ", so no Hadamard triple exists";
    return out;
  }
  const std::int64_t n = system.modulus();
  const std::size_t want = system.digit_count();
  // Admissibility depends only on |delta|.
  std::vector<char> ok(static_cast<std::size_t>(n), 0);
  for (std::int64_t d = 1; d < n; ++d) ok[static_cast<std::size_t>(d)] = admissible_label_difference(system, d);

  std::vector<std::int64_t> current;
  auto extend = [&](auto&& self, std::int64_t start) -> void {
    if (current.size() == want) {
      out.sets.push_back(current);
      return;
    }
    for (std::int64_t x = start; x < n; ++x) {
      if (static_cast<std::size_t>(n - x) < want - current.size()) return;
      bool fine = std::all_of(current.begin(), current.end(),
                              [&](std::int64_t y) { return ok[static_cast<std::size_t>(x - y)] != 0; });
      if (!fine) continue;
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

namespace {

struct RootLattice {
  std::int64_t denominator = 1;
  int top = 0;
  std::vector<int> betas;

  bool is_root(std::int64_t a) const {
    a = floor_mod(a, denominator);
    if (a == 0) return true;
    const int order_exp = top - valuation(a, p);
    return std::find(betas.begin(), betas.end(), order_exp) != betas.end();
  }
  std::int64_t p = 2;
};

RootLattice make_lattice(std::int64_t p, std::span<const int> betas) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::set<int> distinct(betas.begin(), betas.end());
  if (distinct.size() != betas.size()) throw DomainError("betas must be distinct");
  for (int b : betas) {
    if (b < 1) throw DomainError("betas must be positive");
  }
  if (betas.size() > 3) throw InstanceTooLarge("at most 3 betas are searched exhaustively");
  RootLattice lat;
  lat.p = p;
  lat.betas.assign(distinct.begin(), distinct.end());
  lat.top = lat.betas.empty() ? 0 : lat.betas.back();
  std::int64_t denom = 1;
  for (int i = 0; i < lat.top; ++i) {
    denom *= p;
    if (denom > 64) {
      throw InstanceTooLarge(std::to_string(p) + "^" + std::to_string(lat.top) +
                             " exceeds the exhaustive-search guard of 64 roots");
    }
  }
  lat.denominator = denom;
  return lat;
}

}  // namespace

RatioClosedSubset max_ratio_closed_subset(std::int64_t p, std::span<const int> betas) {
  const RootLattice lat = make_lattice(p, betas);
  std::vector<std::int64_t> roots;
  for (std::int64_t a = 0; a < lat.denominator; ++a) {
    if (lat.is_root(a)) roots.push_back(a);
  }
  std::vector<std::int64_t> best, current;
  auto search = [&](auto&& self, std::vector<std::int64_t> candidates) -> void {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      const std::int64_t r = candidates[i];
      std::vector<std::int64_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (lat.is_root(candidates[j] - r)) next.push_back(candidates[j]);
      }
      current.push_back(r);
      self(self, std::move(next));
      current.pop_back();
    }
  };
  search(search, roots);
  return {lat.denominator, best};
}

std::size_t max_ratio_closed_subset_size(std::int64_t p, std::span<const int> betas) {
  return max_ratio_closed_subset(p, betas).numerators.size();
}

bool is_ratio_closed(std::int64_t p, std::span<const int> betas, const RatioClosedSubset& subset) {
  const RootLattice lat = make_lattice(p, betas);
  if (subset.denominator != lat.denominator) return false;
  for (auto a : subset.numerators) {
    if (!lat.is_root(a)) return false;
    for (auto b : subset.numerators) {
      if (!lat.is_root(a - b)) return false;
    }
  }
  return true;
}

FrequencySet greedy_maximal_completion(const CantorSystem& system, const FrequencySet& seed,
                                       const Integer& bound) {
  if (auto check = is_orthogonal_family(system, seed); !check.orthogonal) {
    throw PreconditionError("seed is not orthogonal: (" + check.violation->first.str() + ", " +
                            check.violation->second.str() + ")");
  }
  for (const auto& k : seed) {
    if (abs(k) > bound) {
      throw PreconditionError("bound " + bound.str() + " is smaller than |" + k.str() + "|");
    }
  }
  std::vector<Integer> members(seed.begin(), seed.end());
  auto admit = [&](const Integer& k) {
    if (std::find(members.begin(), members.end(), k) != members.end()) return;
    for (const auto& m : members) {
      if (!are_orthogonal(system, k, m)) return;
    }
    members.push_back(k);
  };

  if (fits_with_headroom(bound)) {
    // Same scan on machine integers.
    const auto b = bound.convert_to<std::int64_t>();
    std::vector<std::int64_t> fast;
    for (const auto& m : members) fast.push_back(m.convert_to<std::int64_t>());
    auto admit_fast = [&](std::int64_t k) {
      for (auto m : fast) {
        if (!orthogonal_int64(system, k, m)) return;
      }
      fast.push_back(k);
    };
    admit_fast(0);
    for (std::int64_t r = 1; r <= b; ++r) {
      admit_fast(r);
      admit_fast(-r);
    }
    std::vector<Integer> out(fast.begin(), fast.end());
    return FrequencySet(system.modulus(), std::move(out));
  }
  admit(Integer(0));
  for (Integer r = 1; r <= bound; ++r) {
    admit(r);
    admit(-r);
  }
  return FrequencySet(system.modulus(), std::move(members));
}

}  // namespace cantor
