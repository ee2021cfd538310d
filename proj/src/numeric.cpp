#include "cantor/numeric.hpp"

#include "cantor/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace cantor {

namespace {

// e(x) with the quarter turn split off, so e(k/4) is exact.
std::complex<double> unit(double x) {
  x -= std::round(x);
  const double quarters = std::round(4.0 * x);
  const double y = 2.0 * std::numbers::pi * (x - quarters / 4.0);
  const double c = std::cos(y);
  const double s = std::sin(y);
  switch (static_cast<int>(quarters)) {
    case 1:
      return {-s, c};
    case 2:
    case -2:
      return {-c, -s};
    case -1:
      return {s, -c};
    default:
      return {c, s};
  }
}

std::complex<double> exp_sum(const CantorSystem& system, double t) {
  std::complex<double> acc = 0.0;
  for (auto d : system.digits()) acc += unit(static_cast<double>(d) * t);
  return acc;
}

}  // namespace

std::complex<double> mask_eval(const CantorSystem& system, double t) {
  return exp_sum(system, t) / static_cast<double>(system.digit_count());
}

std::complex<double> mask_eval_n_normalized(const CantorSystem& system, double t) {
  return exp_sum(system, t) / static_cast<double>(system.modulus());
}

double tail_bound(const CantorSystem& system, double xi, int truncation) {
  const double n = static_cast<double>(system.modulus());
  // sum_{j>J} N^{-j} = N^{-J} / (N - 1)
  const double geometric = std::pow(n, -truncation) / (n - 1.0);
  return std::expm1(2.0 * std::numbers::pi * static_cast<double>(system.max_digit()) * std::abs(xi) * geometric);
}

TruncatedTransformValue mu_hat_truncated(const CantorSystem& system, double xi, int truncation) {
  if (truncation < 1) throw DomainError("truncation level must be at least 1");
  TruncatedTransformValue out;
  out.xi = xi;
  out.truncation = truncation;
  const double n = static_cast<double>(system.modulus());
  std::complex<double> value = 1.0;
  double scaled = xi;
  for (int j = 1; j <= truncation; ++j) {
    scaled /= n;
    value *= mask_eval(system, scaled);
  }
  out.value = value;
  out.tail_bound = tail_bound(system, xi, truncation);
  return out;
}

int truncation_for(const CantorSystem& system, double xi, double target) {
  if (!(target > 0.0)) throw DomainError("tail target must be positive");
  int j = 1;
  while (tail_bound(system, xi, j) >= target) {
    if (++j > 4096) throw DomainError("no truncation level reaches the requested tail bound");
  }
  return j;
}

std::vector<GridRow> mu_hat_grid(const CantorSystem& system, double lo, double hi, double step,
                                 int truncation) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) throw DomainError("grid requires lo <= hi");
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    const double xi = lo + static_cast<double>(i) * step;
    auto v = mu_hat_truncated(system, xi, truncation);
    rows.push_back({xi, v.value, v.tail_bound});
  }
  return rows;
}

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows) {
  os << "xi,re,im,abs,tail_bound\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.xi, r.value.real(),
                  r.value.imag(), std::abs(r.value), r.tail_bound);
    os << buf;
  }
}

}  // namespace cantor
