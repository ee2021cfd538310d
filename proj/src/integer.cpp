#include "cantor/integer.hpp"

#include "cantor/errors.hpp"

#include <cctype>

namespace cantor {

int valuation(std::int64_t k, std::int64_t p) {
  if (k == 0) throw DomainError("valuation of zero is undefined");
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

int valuation(const Integer& k, std::int64_t p) {
  if (fits_int64(k)) return valuation(k.convert_to<std::int64_t>(), p);
  Integer q = k;
  Integer r;
  int v = 0;
  const Integer pp = p;
  for (;;) {
    Integer next;
    boost::multiprecision::divide_qr(q, pp, next, r);
    if (r != 0) break;
    q = std::move(next);
    ++v;
  }
  return v;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t checked_pow(std::int64_t b, int e, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / b) {
      throw DomainError(std::to_string(b) + "^" + std::to_string(e) +
                        " exceeds " + std::to_string(cap));
    }
    r *= b;
  }
  return r;
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("not an integer: '" + text + "'");
    }
  }
  Integer k(text[0] == '+' ? text.substr(1) : text);
  return k;
}

}  // namespace cantor
