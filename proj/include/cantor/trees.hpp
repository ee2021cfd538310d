#pragma once

#include "cantor/expansion.hpp"
#include "cantor/orthogonality.hpp"
#include "cantor/system.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cantor {

struct LabelNode {
  std::int64_t label = 0;
  /// Sorted by label.
  std::vector<LabelNode> children;

  friend bool operator==(const LabelNode&, const LabelNode&) = default;
};

/// Labeling of the rooted |D|-homogeneous tree, explicit down to `depth`
/// levels below the root. Below that every node's children are labeled by
/// `default_rule`, a fixed label set containing 0.
class SpectralLabeling {
 public:
  /// Throws MalformedTree unless every node above `depth` has exactly |D|
  /// children labeled in [0, N), leaves sit at `depth`, and the default rule
  /// has |D| labels in range. Children are sorted on construction.
  SpectralLabeling(CantorSystem system, int depth, LabelNode root,
                   std::vector<std::int64_t> default_rule);

  const CantorSystem& system() const noexcept { return system_; }
  int depth() const noexcept { return depth_; }
  const LabelNode& root() const noexcept { return root_; }
  const std::vector<std::int64_t>& default_rule() const noexcept { return default_rule_; }

  /// Node reached by following child labels from the root, if present.
  const LabelNode* find(std::span<const std::int64_t> path) const;

  friend bool operator==(const SpectralLabeling& a, const SpectralLabeling& b) {
    return a.depth_ == b.depth_ && a.root_ == b.root_ && a.default_rule_ == b.default_rule_ &&
           a.system_.modulus() == b.system_.modulus() && a.system_.digits() == b.system_.digits();
  }

 private:
  CantorSystem system_;
  int depth_;
  LabelNode root_;
  std::vector<std::int64_t> default_rule_;
};

struct LabelingCheck {
  bool valid = true;
  /// Labels from the root to the offending node; empty for the root or the
  /// default rule.
  std::vector<std::int64_t> path;
  std::string reason;
};

/// Checks the all-zero path, the Hadamard property of every child-label set,
/// and that the default rule supplies an all-zero tail from every node.
LabelingCheck validate_labeling(const SpectralLabeling& tree);

/// Every child-label set is the lexicographically smallest Hadamard set
/// containing 0. Throws UnsupportedSystem unless P_D is a product of
/// Phi_{p^t}, t in T.
SpectralLabeling canonical_labeling(const CantorSystem& system, int depth);

/// Depth-first lexicographic enumeration of spectral labelings of the given
/// explicit depth. Nodes on the all-zero path range over Hadamard sets
/// containing 0, all others over every Hadamard set. The sink returns false
/// to stop. Returns the number of labelings delivered.
std::size_t enumerate_labelings(const CantorSystem& system, int depth,
                                const std::function<bool(const SpectralLabeling&)>& sink);

std::vector<SpectralLabeling> enumerate_labelings(const CantorSystem& system, int depth,
                                                  std::size_t limit);

/// Total number of labelings enumerate_labelings would produce, without
/// building them (saturates at SIZE_MAX).
std::size_t count_labelings(const CantorSystem& system, int depth);

/// Integers whose digit paths follow the tree and stabilize at 0 or N-1 by
/// level `depth`, with the tail continued through the explicit tree and then
/// the default rule. A subset of Lambda(L); always contains 0 for valid
/// labelings.
FrequencySet lambda_of_labeling(const SpectralLabeling& tree, int depth);

/// Rebuilds a labeling from the next-digit sets of a frequency set. Throws
/// PreconditionError when some visited node does not branch into exactly |D|
/// digits.
SpectralLabeling labeling_from_frequencies(const CantorSystem& system, const FrequencySet& set,
                                           int depth, std::vector<std::int64_t> default_rule);

enum class BranchStatus { Exact, Mismatch, Indeterminate };

struct BranchExactnessRecord {
  std::vector<std::int64_t> prefix;
  std::size_t count = 0;
  BranchStatus status = BranchStatus::Indeterminate;
};

struct BranchExactnessReport {
  std::int64_t expected = 1;
  std::vector<BranchExactnessRecord> records;

  bool exact() const noexcept;
  std::size_t determinate() const noexcept;
  std::size_t indeterminate() const noexcept;
};

/// For each nonempty prefix of length n < depth, checks that exactly p^|T|
/// next digits occur. A prefix is determinate when the integers
/// [0, N^{n+1}) lie inside the window the set is known to be complete on:
/// [-window, window] if given, otherwise [min S, max S].
/// Requires S orthogonal with 0 in S.
BranchExactnessReport check_branching_exactness(const CantorSystem& system, const FrequencySet& set,
                                                int depth,
                                                std::optional<Integer> window = std::nullopt);

void to_json(nlohmann::json& j, const SpectralLabeling& tree);
SpectralLabeling labeling_from_json(const nlohmann::json& j);

/// Graphviz digraph, one vertex per node in preorder, root text "∅".
void write_dot(std::ostream& os, const SpectralLabeling& tree);

}  // namespace cantor
