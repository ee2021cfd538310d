#pragma once

#include "cantor/expansion.hpp"
#include "cantor/system.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cantor {

/// Exact zero test for the Fourier transform of the Cantor measure at an
/// integer. With v = v_p(k), mu_hat(k) = 0 iff some factor m_D(k / N^j)
/// vanishes, i.e. iff alpha*j - v is in T for some j >= 1.
bool mu_hat_is_zero(const CantorSystem& system, const Integer& k);

/// e_a and e_b are orthogonal in L^2(mu).
bool are_orthogonal(const CantorSystem& system, const Integer& a, const Integer& b);

struct FamilyCheck {
  bool orthogonal = true;
  /// Lexicographically first non-orthogonal pair (smaller element first).
  std::optional<std::pair<Integer, Integer>> violation;
};

FamilyCheck is_orthogonal_family(const CantorSystem& system, const FrequencySet& set);

struct BranchRecord {
  std::vector<std::int64_t> prefix;
  /// Distinct n-th digits observed below `prefix`, ascending.
  std::vector<std::int64_t> digits;
  bool within_bound = true;

  std::size_t count() const noexcept { return digits.size(); }
};

/// Next-digit sets |{d_n(lambda) : lambda in Lambda_n(prefix)}| for every
/// nonempty prefix shorter than the profiled depth.
struct BranchingProfile {
  std::int64_t bound = 1;
  int depth = 0;
  /// Ordered by (prefix length, prefix).
  std::vector<BranchRecord> records;

  bool within_bound() const noexcept;
  const BranchRecord* find(std::span<const std::int64_t> prefix) const;
};

BranchingProfile branching_profile(const CantorSystem& system, const FrequencySet& set, int depth);

/// (N, D, L) for a Hadamard triple test.
struct HadamardCandidate {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> digits;
  std::vector<std::int64_t> labels;
};

enum class CheckMode { Exact, Numeric };

inline constexpr double kUnitarityTolerance = 1e-10;

/// |D| x |L| matrix with entries e(d*l/N) / sqrt(|D|).
Eigen::MatrixXcd hadamard_matrix(const HadamardCandidate& cand);

/// max |M^* M - I| over all entries.
double unitarity_deviation(const HadamardCandidate& cand);

/// Exact mode tests m_D((l - l')/N) = 0 for all l != l' through divisibility
/// of P_D by Phi_{N / gcd(l - l', N)}; numeric mode tests unitarity of
/// hadamard_matrix to kUnitarityTolerance.
bool hadamard_triple_check(const HadamardCandidate& cand, CheckMode mode);

/// Same test against a validated system; exact mode goes through
/// admissible_label_difference.
bool hadamard_triple_check(const CantorSystem& system, std::span<const std::int64_t> labels,
                           CheckMode mode);

struct HadamardEnumeration {
  /// Sorted label sets, in lexicographic order.
  std::vector<std::vector<std::int64_t>> sets;
  /// Set when the system cannot admit any Hadamard label set.
  std::string diagnostic;
};

/// All L in [0, N) with |L| = |D| and pairwise admissible differences.
HadamardEnumeration enumerate_hadamard_L(const CantorSystem& system);

/// Roots of (x - 1) prod Phi_{p^beta}(x) as exact fractions a / p^{max beta}
/// modulo one.
struct RatioClosedSubset {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;
};

/// Largest set of roots of F(x) = (x - 1) prod_j Phi_{p^{beta_j}}(x) whose
/// pairwise ratios are again roots of F, by exhaustive clique search.
/// Guarded to |betas| <= 3 and p^{max beta} <= 64.
RatioClosedSubset max_ratio_closed_subset(std::int64_t p, std::span<const int> betas);
std::size_t max_ratio_closed_subset_size(std::int64_t p, std::span<const int> betas);

/// Every pairwise ratio of the subset is a root of F.
bool is_ratio_closed(std::int64_t p, std::span<const int> betas, const RatioClosedSubset& subset);

/// Scans [-bound, bound] by increasing |k|, positive first, adding each
/// integer orthogonal to all current members. The result is maximal within
/// the window. Throws PreconditionError for a non-orthogonal seed.
FrequencySet greedy_maximal_completion(const CantorSystem& system, const FrequencySet& seed,
                                       const Integer& bound);

}  // namespace cantor
