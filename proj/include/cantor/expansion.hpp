#pragma once

#include "cantor/integer.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cantor {

enum class Tail { AllZero, AllNMinusOne };

/// Base-N digits (d_n(k))_{n>=0} of an integer k, defined by
/// k_n = d_n + N k_{n+1} with 0 <= d_n < N. The sequence is eventually 0 for
/// k >= 0 and eventually N-1 for k < 0; only the shortest prefix before the
/// constant tail is stored.
struct DigitExpansion {
  std::int64_t base = 2;
  std::vector<std::int64_t> prefix;
  Tail tail = Tail::AllZero;

  std::int64_t tail_digit() const noexcept { return tail == Tail::AllZero ? 0 : base - 1; }
  bool is_canonical() const noexcept;
  /// n-th digit, tail digit past the prefix.
  std::int64_t digit(std::size_t n) const noexcept {
    return n < prefix.size() ? prefix[n] : tail_digit();
  }

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

DigitExpansion expand(const Integer& k, std::int64_t base);
Integer collapse(const DigitExpansion& e);
std::int64_t digit_at(const Integer& k, std::int64_t base, std::size_t n);

/// First `count` digits of k.
std::vector<std::int64_t> leading_digits(const Integer& k, std::int64_t base, std::size_t count);

/// "5.2.6|0" style: prefix digits dot-separated, tail digit after a bar.
std::string render(const DigitExpansion& e);

/// Finite set of integer frequencies, kept sorted and duplicate-free.
class FrequencySet {
 public:
  FrequencySet() = default;
  FrequencySet(std::int64_t base, std::vector<Integer> elements);

  std::int64_t base() const noexcept { return base_; }
  const std::vector<Integer>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Integer& k) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

 private:
  std::int64_t base_ = 2;
  std::vector<Integer> elements_;
};

FrequencySet make_frequency_set(std::int64_t base, std::initializer_list<long long> elements);

/// Lambda_n(d_0, ..., d_{n-1}): elements whose first n digits are `digits`.
FrequencySet prefix_subset(const FrequencySet& set, std::span<const std::int64_t> digits);

}  // namespace cantor
