#include "cantor/errors.hpp"
#include "cantor/orthogonality.hpp"
#include "cantor/trees.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

using namespace cantor;
using cantor::testing::direct_mask;

namespace {

// mu_hat(k) = prod_{j>=1} m_D(k / N^j) vanishes iff one factor vanishes. Past
// N^j > 4 max(D) |k| every phase stays in the open right half plane.
bool numeric_mu_hat_zero(const CantorSystem& s, std::int64_t k) {
  if (k == 0) return false;
  const std::int64_t n = s.modulus();
  const Integer limit = Integer(4) * std::max<std::int64_t>(s.max_digit(), 1) * (k < 0 ? -k : k);
  Integer pw = n;
  while (true) {
    Integer r = k % pw;
    if (r < 0) r += pw;
    const long double t = r.convert_to<long double>() / pw.convert_to<long double>();
    if (std::abs(direct_mask(s.digits(), n, t)) < 1e-12L) return true;
    if (pw > limit) return false;
    pw *= n;
  }
}

}  // namespace

TEST_CASE("mu_hat zero examples") {
  auto s = build_system(2, 2, {0, 2});
  CHECK(mu_hat_is_zero(s, 1));
  CHECK_FALSE(mu_hat_is_zero(s, 0));
  CHECK_FALSE(mu_hat_is_zero(s, 2));
  CHECK(are_orthogonal(s, 0, 1));
  CHECK_FALSE(are_orthogonal(s, 5, 5));
  CHECK_FALSE(are_orthogonal(s, 0, 2));
}

TEST_CASE("mu_hat zero set agrees with the numeric product") {
  const CantorSystem systems[] = {
      build_system(2, 2, {0, 2}),       build_system(2, 3, {0, 2, 4, 6}), build_system(3, 1, {0, 1, 2}),
      build_system(3, 2, {0, 3, 6}),    build_system(2, 3, {0, 1, 4, 5}), build_system(2, 3, {0, 2, 3, 5}),
      build_system(2, 2, {0, 1, 3}),    build_system(5, 2, {0, 5, 10, 15, 20}),
  };
  for (const auto& s : systems) {
    CAPTURE(s.digit_polynomial().to_string());
    for (std::int64_t k = -700; k <= 700; ++k) {
      CAPTURE(k);
      CHECK(mu_hat_is_zero(s, k) == numeric_mu_hat_zero(s, k));
      CHECK(mu_hat_is_zero(s, k) == mu_hat_is_zero(s, -k));
    }
  }
}

TEST_CASE("orthogonal families") {
  auto s = build_system(2, 2, {0, 2});
  CHECK(is_orthogonal_family(s, make_frequency_set(4, {0})).orthogonal);
  CHECK(is_orthogonal_family(s, make_frequency_set(4, {0, 1, 4, 5})).orthogonal);
  auto bad = is_orthogonal_family(s, make_frequency_set(4, {0, 2}));
  CHECK_FALSE(bad.orthogonal);
  REQUIRE(bad.violation);
  CHECK(bad.violation->first == 0);
  CHECK(bad.violation->second == 2);
  auto bad2 = is_orthogonal_family(s, make_frequency_set(4, {5, 1, 4, 3}));
  REQUIRE(bad2.violation);
  CHECK(bad2.violation->first == 1);
  CHECK(bad2.violation->second == 3);
}

TEST_CASE("branching profile examples") {
  auto s = build_system(2, 2, {0, 2});
  auto p = branching_profile(s, make_frequency_set(4, {0, 1}), 1);
  REQUIRE(p.records.size() == 1);
  CHECK(p.records[0].prefix.empty());
  CHECK(p.records[0].digits == std::vector<std::int64_t>{0, 1});
  CHECK(p.records[0].count() == 2);
  CHECK(p.bound == 2);
  CHECK(p.within_bound());

  auto z = branching_profile(s, make_frequency_set(4, {0}), 3);
  for (const auto& r : z.records) CHECK(r.count() == 1);
  CHECK(z.records.size() == 3);

  auto over = branching_profile(s, make_frequency_set(4, {0, 1, 2}), 1);
  CHECK(over.records[0].count() == 3);
  CHECK_FALSE(over.records[0].within_bound);
  CHECK_FALSE(over.within_bound());
  CHECK_FALSE(is_orthogonal_family(s, make_frequency_set(4, {0, 1, 2})).orthogonal);

  std::int64_t zero[] = {0};
  auto q = branching_profile(s, make_frequency_set(4, {0, 4, 5, 16}), 2);
  REQUIRE(q.find(zero));
  CHECK(q.find(zero)->digits == std::vector<std::int64_t>{0, 1});
  std::int64_t three[] = {3};
  CHECK(q.find(three) == nullptr);
}

TEST_CASE("orthogonal families respect the branching bound") {
  // Every orthogonal subset of [0, 64) of size <= 4, grown by DFS.
  auto s = build_system(2, 2, {0, 2});
  std::vector<Integer> cur;
  std::size_t checked = 0;
  auto dfs = [&](auto&& self, std::int64_t start) -> void {
    if (!cur.empty()) {
      FrequencySet fs(4, cur);
      CHECK(branching_profile(s, fs, 4).within_bound());
      ++checked;
    }
    if (cur.size() == 4) return;
    for (std::int64_t k = start; k < 64; ++k) {
      bool ok = true;
      for (const auto& m : cur) ok = ok && are_orthogonal(s, m, k);
      if (!ok) continue;
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  CHECK(checked > 1000);

  std::mt19937_64 rng(17);
  auto s8 = build_system(2, 3, {0, 2, 4, 6});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> v;
    for (int tries = 0; tries < 40; ++tries) {
      const std::int64_t k = static_cast<std::int64_t>(rng() % 4001) - 2000;
      bool ok = true;
      for (const auto& m : v) ok = ok && are_orthogonal(s8, m, k);
      if (ok) v.push_back(k);
    }
    FrequencySet fs(8, v);
    REQUIRE(is_orthogonal_family(s8, fs).orthogonal);
    CHECK(branching_profile(s8, fs, 5).within_bound());
  }
}

TEST_CASE("hadamard triples") {
  HadamardCandidate a{4, {0, 2}, {0, 1}};
  CHECK(hadamard_triple_check(a, CheckMode::Exact));
  CHECK(hadamard_triple_check(a, CheckMode::Numeric));
  HadamardCandidate b{8, {0, 2, 4, 6}, {0, 2, 5, 7}};
  CHECK(hadamard_triple_check(b, CheckMode::Exact));
  CHECK(hadamard_triple_check(b, CheckMode::Numeric));
  HadamardCandidate c{4, {0, 2}, {0, 2}};
  CHECK_FALSE(hadamard_triple_check(c, CheckMode::Exact));
  CHECK_FALSE(hadamard_triple_check(c, CheckMode::Numeric));
  CHECK(unitarity_deviation(c) > 0.5);
  HadamardCandidate d{4, {0, 2}, {0, 1, 3}};
  CHECK_THROWS_AS(hadamard_triple_check(d, CheckMode::Exact), SizeMismatch);

  auto s = build_system(2, 3, {0, 2, 4, 6});
  std::int64_t l[] = {0, 2, 5, 7};
  CHECK(hadamard_triple_check(s, l, CheckMode::Exact));
  std::int64_t l3[] = {0, 2, 5};
  CHECK_THROWS_AS(hadamard_triple_check(s, l3, CheckMode::Exact), SizeMismatch);

  // Modes agree on every 4-subset of [0, 8) and on random candidates.
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    HadamardCandidate h{8, {0, 2, 4, 6}, {}};
    for (int i = 0; i < 8; ++i)
      if (mask >> i & 1U) h.labels.push_back(i);
    CHECK(hadamard_triple_check(h, CheckMode::Exact) == hadamard_triple_check(h, CheckMode::Numeric));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    const std::int64_t n = std::int64_t{1} << (1 + rng() % 4);
    const std::size_t m = 1 + rng() % std::min<std::int64_t>(n, 5);
    HadamardCandidate h{n, {}, {}};
    std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = k;
    std::shuffle(pool.begin(), pool.end(), rng);
    h.labels.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t j = 0; j < m; ++j) h.digits.push_back(pool[j] + n * static_cast<std::int64_t>(rng() % 3));
    CAPTURE(n);
    CHECK(hadamard_triple_check(h, CheckMode::Exact) == hadamard_triple_check(h, CheckMode::Numeric));
  }
}

TEST_CASE("hadamard label enumeration") {
  auto s8 = build_system(2, 3, {0, 2, 4, 6});
  auto e = enumerate_hadamard_L(s8);
  CHECK(e.diagnostic.empty());
  CHECK(e.sets.size() == 16);
  // Exhaustive oracle over all C(8,4) subsets via the numeric matrix.
  std::vector<std::vector<std::int64_t>> oracle;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::vector<std::int64_t> l;
    for (int i = 0; i < 8; ++i)
      if (mask >> i & 1U) l.push_back(i);
    if (unitarity_deviation({8, {0, 2, 4, 6}, l}) < kUnitarityTolerance) oracle.push_back(l);
  }
  std::sort(oracle.begin(), oracle.end());
  CHECK(e.sets == oracle);
  for (const auto& l : e.sets)
    for (std::int64_t r = 0; r < 4; ++r)
      CHECK(std::count_if(l.begin(), l.end(), [&](std::int64_t x) { return x % 4 == r; }) == 1);

  auto s4 = enumerate_hadamard_L(build_system(2, 2, {0, 2}));
  CHECK(s4.sets == std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  auto s3 = enumerate_hadamard_L(build_system(3, 1, {0, 1, 2}));
  CHECK(s3.sets == std::vector<std::vector<std::int64_t>>{{0, 1, 2}});

  auto none = enumerate_hadamard_L(build_system(2, 3, {0, 1, 2}));
  CHECK(none.sets.empty());
  CHECK_FALSE(none.diagnostic.empty());
}

namespace {

// Brute force over subsets of roots of (x - 1) prod Phi_{p^b}, with roots
// tested through their multiplicative order.
std::optional<std::size_t> ratio_closed_oracle(std::int64_t p, const std::vector<int>& betas) {
  int top = 0;
  for (int b : betas) top = std::max(top, b);
  std::int64_t den = 1;
  for (int i = 0; i < top; ++i) den *= p;
  auto order_ok = [&](std::int64_t a) {
    a = ((a % den) + den) % den;
    std::int64_t g = std::gcd(a, den);
    std::int64_t ord = den / g;
    if (ord == 1) return true;
    std::int64_t q = 1;
    for (int b = 1; b <= top; ++b) {
      q *= p;
      if (q == ord) return std::find(betas.begin(), betas.end(), b) != betas.end();
    }
    return false;
  };
  std::vector<std::int64_t> roots;
  for (std::int64_t a = 0; a < den; ++a)
    if (order_ok(a)) roots.push_back(a);
  const std::size_t r = roots.size();
  if (r > 21) return std::nullopt;
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U)) ok = order_ok(roots[i] - roots[j]);
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("ratio-closed subsets") {
  CHECK(max_ratio_closed_subset_size(2, std::vector<int>{}) == 1);
  CHECK(max_ratio_closed_subset_size(2, std::vector<int>{2}) == 2);
  CHECK(max_ratio_closed_subset_size(2, std::vector<int>{1, 2}) == 4);

  const std::vector<std::vector<int>> cases = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (std::int64_t p : {2, 3}) {
    for (const auto& betas : cases) {
      int top = 0;
      for (int b : betas) top = std::max(top, b);
      std::int64_t pb = 1;
      for (int i = 0; i < top; ++i) pb *= p;
      if (pb > 64) {
        CHECK_THROWS_AS(max_ratio_closed_subset_size(p, betas), InstanceTooLarge);
        continue;
      }
      CAPTURE(p);
      CAPTURE(betas.size());
      std::int64_t bound = 1;
      for (std::size_t i = 0; i < betas.size(); ++i) bound *= p;
      const auto got = max_ratio_closed_subset(p, betas);
      CHECK(is_ratio_closed(p, betas, got));
      CHECK(got.numerators.size() == max_ratio_closed_subset_size(p, betas));
      CHECK(static_cast<std::int64_t>(got.numerators.size()) <= bound);
      if (auto oracle = ratio_closed_oracle(p, betas)) CHECK(got.numerators.size() == *oracle);
      // betas = {1..m} reaches p^m.
      bool consecutive = true;
      for (std::size_t i = 0; i < betas.size(); ++i) consecutive = consecutive && betas[i] == static_cast<int>(i + 1);
      if (consecutive) CHECK(static_cast<std::int64_t>(got.numerators.size()) == bound);
    }
  }
  CHECK_THROWS_AS(max_ratio_closed_subset_size(2, std::vector<int>{1, 2, 3, 4}), InstanceTooLarge);
  CHECK_THROWS_AS(max_ratio_closed_subset_size(2, std::vector<int>{7}), InstanceTooLarge);
}

TEST_CASE("greedy maximal completion") {
  auto s = build_system(2, 2, {0, 2});
  CHECK(greedy_maximal_completion(s, make_frequency_set(4, {0}), 0) == make_frequency_set(4, {0}));
  CHECK_THROWS_AS(greedy_maximal_completion(s, make_frequency_set(4, {0, 2}), 20), PreconditionError);
  CHECK_THROWS_AS(greedy_maximal_completion(s, make_frequency_set(4, {0, 5}), 3), PreconditionError);

  auto g = greedy_maximal_completion(s, make_frequency_set(4, {0}), 20);
  CHECK(g.elements().front() >= -20);
  CHECK(g.elements().back() <= 20);
  CHECK(g.contains(0));
  CHECK(g.contains(1));
  CHECK(is_orthogonal_family(s, g).orthogonal);
  for (std::int64_t k = -20; k <= 20; ++k) {
    if (g.contains(k)) continue;
    bool blocked = false;
    for (const auto& m : g) blocked = blocked || !are_orthogonal(s, m, k);
    CHECK(blocked);
  }
  auto report = check_branching_exactness(s, g, 3, Integer(20));
  CHECK(report.exact());
  CHECK(report.determinate() > 0);

  auto s8 = build_system(2, 3, {0, 2, 4, 6});
  auto g8 = greedy_maximal_completion(s8, make_frequency_set(8, {0}), 511);
  auto prof = branching_profile(s8, g8, 2);
  for (const auto& r : prof.records) CHECK(r.count() == 4);
  CHECK(prof.records.size() == 5);
}

TEST_CASE("translation and reflection invariance") {
  auto s = build_system(2, 3, {0, 2, 4, 6});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 20001) - 10000;
    const std::int64_t b = static_cast<std::int64_t>(rng() % 20001) - 10000;
    const std::int64_t c = static_cast<std::int64_t>(rng() % 20001) - 10000;
    CHECK(are_orthogonal(s, a, b) == are_orthogonal(s, b, a));
    CHECK(are_orthogonal(s, a, b) == are_orthogonal(s, a + c, b + c));
    CHECK(are_orthogonal(s, a, b) == are_orthogonal(s, -a, -b));
  }
}
