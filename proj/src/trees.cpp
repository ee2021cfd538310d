#include "cantor/trees.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace cantor {

namespace {

void normalize(LabelNode& node, int level, int depth, std::size_t arity, std::int64_t modulus) {
  if (level == depth) {
    if (!node.children.empty()) {
      throw MalformedTree("node at level " + std::to_string(level) + " below the explicit depth " +
                          std::to_string(depth));
    }
    return;
  }
  if (node.children.size() != arity) {
    throw MalformedTree("node at level " + std::to_string(level) + " has " +
                        std::to_string(node.children.size()) + " children, expected " +
                        std::to_string(arity));
  }
  for (auto& c : node.children) {
    if (c.label < 0 || c.label >= modulus) {
      throw MalformedTree("label " + std::to_string(c.label) + " outside [0, " +
                          std::to_string(modulus - 1) + "]");
    }
    normalize(c, level + 1, depth, arity, modulus);
  }
  std::stable_sort(node.children.begin(), node.children.end(),
                   [](const LabelNode& a, const LabelNode& b) { return a.label < b.label; });
}

std::vector<std::int64_t> child_labels(const LabelNode& node) {
  std::vector<std::int64_t> out;
  out.reserve(node.children.size());
  for (const auto& c : node.children) out.push_back(c.label);
  return out;
}

bool has_distinct(const std::vector<std::int64_t>& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool contains(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Internal (non-leaf) nodes of the complete arity-ary tree in preorder, as
// child-index paths.
void internal_nodes(std::vector<std::vector<std::size_t>>& out, std::vector<std::size_t>& path,
                    int depth, std::size_t arity) {
  out.push_back(path);
  if (static_cast<int>(path.size()) + 1 == depth) return;
  for (std::size_t i = 0; i < arity; ++i) {
    path.push_back(i);
    internal_nodes(out, path, depth, arity);
    path.pop_back();
  }
}

bool all_zero_indices(const std::vector<std::size_t>& path) {
  return std::all_of(path.begin(), path.end(), [](std::size_t i) { return i == 0; });
}

void fill_children(LabelNode& node, std::span<const std::vector<std::int64_t>* const> choices,
                   std::size_t& cursor, int level, int depth) {
  const auto& set = *choices[cursor++];
  node.children.clear();
  for (auto l : set) node.children.push_back({l, {}});
  if (level + 1 == depth) return;
  for (auto& c : node.children) fill_children(c, choices, cursor, level + 1, depth);
}

void collect_tail_values(const LabelNode& node, int level, int depth, Integer value,
                         const Integer& scale, std::int64_t modulus, const SpectralLabeling& tree,
                         std::vector<Integer>& out) {
  if (level == depth) {
    auto chain_exists = [&](std::int64_t digit) {
      const LabelNode* cur = &node;
      for (int l = level; l < tree.depth(); ++l) {
        auto it = std::find_if(cur->children.begin(), cur->children.end(),
                               [&](const LabelNode& c) { return c.label == digit; });
        if (it == cur->children.end()) return false;
        cur = &*it;
      }
      return contains(tree.default_rule(), digit);
    };
    if (chain_exists(0)) out.push_back(value);
    if (chain_exists(modulus - 1)) out.push_back(value - scale);
    return;
  }
  for (const auto& c : node.children) {
    collect_tail_values(c, level + 1, depth, value + scale * c.label, scale * modulus, modulus, tree, out);
  }
}

nlohmann::json node_json(const LabelNode& node, bool is_root) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : node.children) children.push_back(node_json(c, false));
  if (is_root) return {{"children", children}};
  return {{"label", node.label}, {"children", children}};
}

LabelNode node_from_json(const nlohmann::json& j, bool is_root) {
  LabelNode n;
  if (!is_root) n.label = j.at("label").get<std::int64_t>();
  for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c, false));
  return n;
}

void dot_node(std::ostream& os, const LabelNode& node, std::size_t id, std::size_t& next) {
  for (const auto& c : node.children) {
    const std::size_t cid = next++;
    os << "  n" << cid << " [label=\"" << c.label << "\"];\n";
    os << "  n" << id << " -> n" << cid << ";\n";
    dot_node(os, c, cid, next);
  }
}

}  // namespace

SpectralLabeling::SpectralLabeling(CantorSystem system, int depth, LabelNode root,
                                   std::vector<std::int64_t> default_rule)
    : system_(std::move(system)), depth_(depth), root_(std::move(root)),
      default_rule_(std::move(default_rule)) {
  if (depth_ < 1) throw MalformedTree("labeling depth must be at least 1");
  normalize(root_, 0, depth_, system_.digit_count(), system_.modulus());
  if (default_rule_.size() != system_.digit_count()) {
    throw MalformedTree("default rule has " + std::to_string(default_rule_.size()) +
                        " labels, expected " + std::to_string(system_.digit_count()));
  }
  for (auto l : default_rule_) {
    if (l < 0 || l >= system_.modulus()) throw MalformedTree("default rule label " + std::to_string(l) + " out of range");
  }
  std::sort(default_rule_.begin(), default_rule_.end());
}

const LabelNode* SpectralLabeling::find(std::span<const std::int64_t> path) const {
  const LabelNode* cur = &root_;
  for (auto label : path) {
    auto it = std::find_if(cur->children.begin(), cur->children.end(),
                           [&](const LabelNode& c) { return c.label == label; });
    if (it == cur->children.end()) return nullptr;
    cur = &*it;
  }
  return cur;
}

LabelingCheck validate_labeling(const SpectralLabeling& tree) {
  const auto& system = tree.system();
  LabelingCheck result;
  std::vector<std::int64_t> path;
  auto visit = [&](auto&& self, const LabelNode& node, int level, bool zero_path) -> bool {
    if (level == tree.depth()) return true;
    auto labels = child_labels(node);
    if (!has_distinct(labels)) {
      result = {false, path, "child labels are not distinct"};
      return false;
    }
    if (zero_path && !contains(labels, 0)) {
      result = {false, path, "all-zero path is broken: no child labeled 0"};
      return false;
    }
    if (!hadamard_triple_check(system, labels, CheckMode::Exact)) {
      result = {false, path, "child labels do not form a Hadamard triple with (N, D)"};
      return false;
    }
    for (const auto& c : node.children) {
      path.push_back(c.label);
      if (!self(self, c, level + 1, zero_path && c.label == 0)) return false;
      path.pop_back();
    }
    return true;
  };
  if (!visit(visit, tree.root(), 0, true)) return result;

  const auto& rule = tree.default_rule();
  if (!has_distinct(rule) || !hadamard_triple_check(system, rule, CheckMode::Exact)) {
    return {false, {}, "default rule is not a Hadamard label set"};
  }
  if (!contains(rule, 0)) return {false, {}, "default rule does not contain 0"};
  return result;
}

SpectralLabeling canonical_labeling(const CantorSystem& system, int depth) {
  if (depth < 1) throw DomainError("labeling depth must be at least 1");
  if (!system.is_cyclotomic_product()) {
    throw UnsupportedSystem("P_D is not a product of Phi_{p^t} over t in T");
  }
  auto sets = enumerate_hadamard_L(system).sets;
  auto it = std::find_if(sets.begin(), sets.end(), [](const auto& s) { return contains(s, 0); });
  if (it == sets.end()) throw UnsupportedSystem("no Hadamard label set contains 0");
  const std::vector<std::int64_t> base = *it;
  auto build = [&](auto&& self, std::int64_t label, int level) -> LabelNode {
    LabelNode n{label, {}};
    if (level == depth) return n;
    for (auto l : base) n.children.push_back(self(self, l, level + 1));
    return n;
  };
  return SpectralLabeling(system, depth, build(build, 0, 0), base);
}

std::size_t enumerate_labelings(const CantorSystem& system, int depth,
                                const std::function<bool(const SpectralLabeling&)>& sink) {
  if (depth < 1) throw DomainError("labeling depth must be at least 1");
  if (!system.is_cyclotomic_product()) {
    throw UnsupportedSystem("P_D is not a product of Phi_{p^t} over t in T");
  }
  const auto all = enumerate_hadamard_L(system).sets;
  std::vector<const std::vector<std::int64_t>*> with_zero, any;
  for (const auto& s : all) {
    any.push_back(&s);
    if (contains(s, 0)) with_zero.push_back(&s);
  }
  if (with_zero.empty()) return 0;
  const std::vector<std::int64_t>& rule = *with_zero.front();

  std::vector<std::vector<std::size_t>> nodes;
  std::vector<std::size_t> scratch;
  internal_nodes(nodes, scratch, depth, system.digit_count());
  std::vector<const std::vector<const std::vector<std::int64_t>*>*> options;
  for (const auto& n : nodes) options.push_back(all_zero_indices(n) ? &with_zero : &any);

  std::vector<const std::vector<std::int64_t>*> choice(nodes.size());
  std::size_t delivered = 0;
  auto assign = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == nodes.size()) {
      LabelNode root;
      std::size_t cursor = 0;
      fill_children(root, choice, cursor, 0, depth);
      ++delivered;
      return sink(SpectralLabeling(system, depth, std::move(root), rule));
    }
    for (const auto* set : *options[pos]) {
      choice[pos] = set;
      if (!self(self, pos + 1)) return false;
    }
    return true;
  };
  assign(assign, 0);
  return delivered;
}

std::vector<SpectralLabeling> enumerate_labelings(const CantorSystem& system, int depth,
                                                  std::size_t limit) {
  if (limit < 1) throw DomainError("enumeration limit must be at least 1");
  std::vector<SpectralLabeling> out;
  enumerate_labelings(system, depth, [&](const SpectralLabeling& t) {
    out.push_back(t);
    return out.size() < limit;
  });
  return out;
}

std::size_t count_labelings(const CantorSystem& system, int depth) {
  if (depth < 1) throw DomainError("labeling depth must be at least 1");
  if (!system.is_cyclotomic_product()) return 0;
  const auto all = enumerate_hadamard_L(system).sets;
  const auto zero = static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [](const auto& s) { return contains(s, 0); }));
  const std::size_t m = system.digit_count();
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  auto mul = [&](std::size_t a, std::size_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  // One zero-path node per level; the remaining internal nodes are free.
  std::size_t total = 1;
  std::size_t level_nodes = 1;
  for (int level = 0; level < depth; ++level) {
    total = mul(total, zero);
    for (std::size_t i = 1; i < level_nodes; ++i) total = mul(total, all.size());
    level_nodes = mul(level_nodes, m);
  }
  return total;
}

FrequencySet lambda_of_labeling(const SpectralLabeling& tree, int depth) {
  if (depth < 1 || depth > tree.depth()) {
    throw DomainError("depth " + std::to_string(depth) + " outside [1, " + std::to_string(tree.depth()) + "]");
  }
  std::vector<Integer> out;
  collect_tail_values(tree.root(), 0, depth, Integer(0), Integer(1), tree.system().modulus(), tree, out);
  return FrequencySet(tree.system().modulus(), std::move(out));
}

SpectralLabeling labeling_from_frequencies(const CantorSystem& system, const FrequencySet& set,
                                           int depth, std::vector<std::int64_t> default_rule) {
  const auto profile = branching_profile(system, set, depth);
  std::vector<std::int64_t> path;
  auto build = [&](auto&& self, LabelNode& node, int level) -> void {
    if (level == depth) return;
    const BranchRecord* rec = profile.find(path);
    if (rec == nullptr || rec->count() != system.digit_count()) {
      std::string where;
      for (auto d : path) where += std::to_string(d) + ".";
      throw PreconditionError("prefix [" + where + "] branches into " +
                              std::to_string(rec ? rec->count() : 0) + " digits, expected " +
                              std::to_string(system.digit_count()));
    }
    for (auto d : rec->digits) {
      node.children.push_back({d, {}});
      path.push_back(d);
      self(self, node.children.back(), level + 1);
      path.pop_back();
    }
  };
  LabelNode root;
  build(build, root, 0);
  return SpectralLabeling(system, depth, std::move(root), std::move(default_rule));
}

bool BranchExactnessReport::exact() const noexcept {
  return std::none_of(records.begin(), records.end(),
                      [](const auto& r) { return r.status == BranchStatus::Mismatch; });
}

std::size_t BranchExactnessReport::determinate() const noexcept {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.status != BranchStatus::Indeterminate;
  }));
}

std::size_t BranchExactnessReport::indeterminate() const noexcept {
  return records.size() - determinate();
}

BranchExactnessReport check_branching_exactness(const CantorSystem& system, const FrequencySet& set,
                                                int depth, std::optional<Integer> window) {
  if (!set.contains(Integer(0))) throw PreconditionError("frequency set must contain 0");
  if (auto check = is_orthogonal_family(system, set); !check.orthogonal) {
    throw PreconditionError("frequency set is not orthogonal: (" + check.violation->first.str() +
                            ", " + check.violation->second.str() + ")");
  }
  const Integer lo = window ? Integer(-*window) : set.elements().front();
  const Integer hi = window ? *window : set.elements().back();
  const auto profile = branching_profile(system, set, depth);
  BranchExactnessReport report;
  report.expected = system.branching_bound();
  for (const auto& r : profile.records) {
    BranchExactnessRecord out{r.prefix, r.count(), BranchStatus::Indeterminate};
    Integer reach = 1;
    for (std::size_t i = 0; i <= r.prefix.size(); ++i) reach *= system.modulus();
    if (lo <= 0 && hi >= reach - 1) {
      out.status = static_cast<std::int64_t>(r.count()) == report.expected ? BranchStatus::Exact
                                                                           : BranchStatus::Mismatch;
    }
    report.records.push_back(std::move(out));
  }
  return report;
}

void to_json(nlohmann::json& j, const SpectralLabeling& tree) {
  j = nlohmann::json{{"system", tree.system()},
                     {"depth", tree.depth()},
                     {"default_rule", tree.default_rule()},
                     {"root", node_json(tree.root(), true)}};
}

SpectralLabeling labeling_from_json(const nlohmann::json& j) {
  return SpectralLabeling(system_from_json(j.at("system")), j.at("depth").get<int>(),
                          node_from_json(j.at("root"), true),
                          j.at("default_rule").get<std::vector<std::int64_t>>());
}

void write_dot(std::ostream& os, const SpectralLabeling& tree) {
  os << "digraph labeling {\n";
  os << "  node [shape=circle];\n";
  os << "  n0 [label=\"∅\"];\n";
  std::size_t next = 1;
  dot_node(os, tree.root(), 0, next);
  os << "}\n";
}

}  // namespace cantor
