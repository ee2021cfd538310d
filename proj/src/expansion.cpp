#include "cantor/expansion.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cantor {

namespace {

void require_base(std::int64_t base) {
  if (base < 2) throw DomainError("expansion base must be at least 2, got " + std::to_string(base));
}

// Steps k -> (k - d) / N with d = k mod N in [0, N).
template <class Visit>
void walk_digits(const Integer& k, std::int64_t base, std::size_t limit, Visit&& visit) {
  std::size_t n = 0;
  if (fits_int64(k)) {
    std::int64_t x = k.convert_to<std::int64_t>();
    while (n < limit && x != 0 && x != -1) {
      const std::int64_t d = floor_mod(x, base);
      visit(d);
      x = (x - d) / base;
      ++n;
    }
    return;
  }
  Integer x = k;
  const Integer b = base;
  Integer q, r;
  while (n < limit && x != 0 && x != -1) {
    boost::multiprecision::divide_qr(x, b, q, r);
    if (r < 0) {
      r += b;
      q -= 1;
    }
    visit(r.convert_to<std::int64_t>());
    x = std::move(q);
    ++n;
  }
}

}  // namespace

bool DigitExpansion::is_canonical() const noexcept {
  if (base < 2) return false;
  for (auto d : prefix) {
    if (d < 0 || d >= base) return false;
  }
  return prefix.empty() || prefix.back() != tail_digit();
}

DigitExpansion expand(const Integer& k, std::int64_t base) {
  require_base(base);
  DigitExpansion e;
  e.base = base;
  e.tail = k < 0 ? Tail::AllNMinusOne : Tail::AllZero;
  walk_digits(k, base, static_cast<std::size_t>(-1), [&](std::int64_t d) { e.prefix.push_back(d); });
  // The walk stops at k_n in {0, -1}, whose digits are already the tail.
  return e;
}

Integer collapse(const DigitExpansion& e) {
  if (!e.is_canonical()) throw CanonicalizationError("digit expansion is not canonical: " + render(e));
  Integer k = e.tail == Tail::AllZero ? 0 : -1;
  for (auto it = e.prefix.rbegin(); it != e.prefix.rend(); ++it) k = k * e.base + *it;
  return k;
}

std::int64_t digit_at(const Integer& k, std::int64_t base, std::size_t n) {
  require_base(base);
  std::int64_t found = k < 0 ? base - 1 : 0;
  std::size_t i = 0;
  walk_digits(k, base, n + 1, [&](std::int64_t d) {
    if (i++ == n) found = d;
  });
  return found;
}

std::vector<std::int64_t> leading_digits(const Integer& k, std::int64_t base, std::size_t count) {
  require_base(base);
  std::vector<std::int64_t> out;
  out.reserve(count);
  walk_digits(k, base, count, [&](std::int64_t d) { out.push_back(d); });
  out.resize(count, k < 0 ? base - 1 : 0);
  return out;
}

std::string render(const DigitExpansion& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.prefix.size(); ++i) {
    if (i) os << '.';
    os << e.prefix[i];
  }
  os << '|' << e.tail_digit();
  return os.str();
}

FrequencySet::FrequencySet(std::int64_t base, std::vector<Integer> elements)
    : base_(base), elements_(std::move(elements)) {
  require_base(base);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FrequencySet::contains(const Integer& k) const {
  return std::binary_search(elements_.begin(), elements_.end(), k);
}

FrequencySet make_frequency_set(std::int64_t base, std::initializer_list<long long> elements) {
  std::vector<Integer> v;
  for (long long x : elements) v.emplace_back(x);
  return FrequencySet(base, std::move(v));
}

FrequencySet prefix_subset(const FrequencySet& set, std::span<const std::int64_t> digits) {
  for (auto d : digits) {
    if (d < 0 || d >= set.base()) {
      throw DomainError("digit " + std::to_string(d) + " outside [0, " + std::to_string(set.base() - 1) + "]");
    }
  }
  if (digits.empty()) return set;
  std::vector<Integer> kept;
  for (const auto& k : set) {
    auto lead = leading_digits(k, set.base(), digits.size());
    if (std::equal(lead.begin(), lead.end(), digits.begin())) kept.push_back(k);
  }
  return FrequencySet(set.base(), std::move(kept));
}

}  // namespace cantor
