#include "cantor/polynomial.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

namespace cantor {

namespace {

Integer ipow(Integer b, int e) {
  Integer r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int sign(const Integer& v) { return v.sign(); }

// Exact division of every coefficient by c.
IntPolynomial divide_coeffs(const IntPolynomial& f, const Integer& c) {
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(a / c);
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  return IntPolynomial(std::vector<Integer>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Integer c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPolynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + it->convert_to<double>();
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial poly_from_digit_set(std::span<const std::int64_t> digits) {
  if (digits.empty()) throw InvalidDigitSet("digit set is empty");
  std::set<std::int64_t> seen;
  for (auto d : digits) {
    if (d < 0) throw InvalidDigitSet("negative digit " + std::to_string(d));
    if (!seen.insert(d).second) throw InvalidDigitSet("duplicate digit " + std::to_string(d));
  }
  std::vector<Integer> v(static_cast<std::size_t>(*seen.rbegin()) + 1);
  for (auto d : seen) v[static_cast<std::size_t>(d)] = 1;
  return IntPolynomial(std::move(v));
}

IntPolynomial cyclotomic(std::int64_t n) {
  if (n <= 0) throw DomainError("cyclotomic order must be positive, got " + std::to_string(n));
  static std::shared_mutex mutex;
  static std::map<std::int64_t, IntPolynomial> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPolynomial result;
  if (n == 1) {
    result = IntPolynomial{-1, 1};
  } else {
    result = IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial{1};
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d == 0) result = exact_div(result, cyclotomic(d));
    }
  }
  std::unique_lock lock(mutex);
  // A concurrent writer computes the same value, so emplace is idempotent.
  return memo.emplace(n, std::move(result)).first->second;
}

IntPolynomial cyclotomic_prime_power(std::int64_t p, int t) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (t < 1) throw DomainError("prime-power exponent must be at least 1");
  const std::int64_t stride = checked_pow(p, t - 1, std::int64_t{1} << 40);
  std::vector<Integer> v(static_cast<std::size_t>(stride * (p - 1) + 1));
  for (std::int64_t i = 0; i < p; ++i) v[static_cast<std::size_t>(i * stride)] = 1;
  return IntPolynomial(std::move(v));
}

DivisionResult long_division(const IntPolynomial& f, const IntPolynomial& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  DivisionResult out;
  if (f.degree() < q.degree()) {
    out.remainder = f;
    return out;
  }
  std::vector<Integer> rem = f.coeffs();
  const auto& qc = q.coeffs();
  const Integer& lq = q.leading();
  const int dq = q.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(f.degree() - dq) + 1);
  for (int i = f.degree(); i >= dq; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Integer c, r;
    boost::multiprecision::divide_qr(top, lq, c, r);
    if (r != 0) {
      out.integral = false;
      break;
    }
    const int shift = i - dq;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(shift + j)] -= c * qc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(shift)] = std::move(c);
  }
  out.quotient = IntPolynomial(std::move(quot));
  out.remainder = IntPolynomial(std::move(rem));
  return out;
}

bool divides(const IntPolynomial& q, const IntPolynomial& f) {
  if (q.is_zero()) throw DomainError("zero divisor");
  if (f.is_zero()) return true;
  if (q.degree() > f.degree()) return false;
  auto r = long_division(f, q);
  return r.integral && r.remainder.is_zero();
}

IntPolynomial exact_div(const IntPolynomial& f, const IntPolynomial& q) {
  auto r = long_division(f, q);
  if (!r.integral || !r.remainder.is_zero()) {
    throw InexactDivision("(" + f.to_string() + ") is not divisible by (" + q.to_string() +
                              "); remainder " + r.remainder.to_string(),
                          r.remainder.coeffs());
  }
  return std::move(r.quotient);
}

IntPolynomial reverse(const IntPolynomial& f) {
  std::vector<Integer> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(v));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  return c == 1 ? f : divide_coeffs(f, c);
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> v(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = f.coeffs()[static_cast<std::size_t>(i)] * i;
  return IntPolynomial(std::move(v));
}

IntPolynomial strip_x_power(const IntPolynomial& f) {
  const auto& c = f.coeffs();
  auto first = std::find_if(c.begin(), c.end(), [](const Integer& a) { return a != 0; });
  return IntPolynomial(std::vector<Integer>(first, c.end()));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("pseudo-division by the zero polynomial");
  if (f.degree() < g.degree()) return f;
  const int dg = g.degree();
  const Integer& lg = g.leading();
  std::vector<Integer> r = f.coeffs();
  int steps = f.degree() - dg + 1;
  int used = 0;
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= dg) {
    Integer top = r[static_cast<std::size_t>(dr)];
    for (auto& a : r) a *= lg;
    const int shift = dr - dg;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(shift + j)] -= top * g.coeffs()[static_cast<std::size_t>(j)];
    ++used;
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  IntPolynomial out(std::move(r));
  if (used < steps) out = ipow(lg, steps - used) * out;
  return out;
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  IntPolynomial a = f.degree() >= g.degree() ? f : g;
  IntPolynomial b = f.degree() >= g.degree() ? g : f;
  a = primitive_part(a);
  b = primitive_part(b);
  Integer lead_g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPolynomial{1};
    a = std::move(b);
    b = divide_coeffs(r, lead_g * ipow(h, delta));
    lead_g = a.leading();
    if (delta > 0) h = ipow(lead_g, delta) / ipow(h, delta - 1);
  }
}

IntPolynomial self_reciprocal_part(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("self-reciprocal part of the zero polynomial");
  IntPolynomial s = strip_x_power(f);
  return gcd(s, reverse(s));
}

int sturm_root_count(const IntPolynomial& f, const Integer& a, const Integer& b) {
  if (f.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<IntPolynomial> seq{primitive_part(f)};
  IntPolynomial d = derivative(seq[0]);
  if (!d.is_zero()) seq.push_back(primitive_part(d));
  while (seq.size() >= 2 && seq.back().degree() > 0) {
    const auto& prev = seq[seq.size() - 2];
    const auto& cur = seq.back();
    IntPolynomial r = pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    // -rem(prev, cur) up to a positive factor.
    const int e = prev.degree() - cur.degree() + 1;
    const bool flip = cur.leading() < 0 && (e % 2 == 1);
    r = flip ? r : -r;
    Integer c = content(r);
    seq.push_back(divide_coeffs(r, c));
  }
  auto changes = [&](const Integer& x) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      const int sg = sign(s(x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  return changes(a) - changes(b);
}

bool has_unit_circle_root(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("unit-circle test of the zero polynomial");
  IntPolynomial g = self_reciprocal_part(f);
  if (g.degree() < 1) return false;
  if (g(Integer(1)) == 0 || g(Integer(-1)) == 0) return true;
  // g is palindromic of even degree 2m here; g(x) = x^m h(x + 1/x).
  const int m = g.degree() / 2;
  const auto& c = g.coeffs();
  IntPolynomial h = IntPolynomial::constant(c[static_cast<std::size_t>(m)]);
  IntPolynomial prev{2};
  IntPolynomial cur{0, 1};
  const IntPolynomial y{0, 1};
  for (int k = 1; k <= m; ++k) {
    h = h + c[static_cast<std::size_t>(m + k)] * cur;
    IntPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sturm_root_count(h, Integer(-2), Integer(2)) > 0;
}

}  // namespace cantor
