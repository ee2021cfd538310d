#pragma once

#include "cantor/system.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace cantor {

/// m_D(t) = |D|^{-1} sum_d e(d t). With this mask mu_hat(0) = 1.
std::complex<double> mask_eval(const CantorSystem& system, double t);

/// N^{-1} sum_d e(d t), the N-normalized mask. Same zero set as mask_eval.
std::complex<double> mask_eval_n_normalized(const CantorSystem& system, double t);

struct TruncatedTransformValue {
  double xi = 0.0;
  int truncation = 1;
  std::complex<double> value;
  /// Bound on |prod_{j>J} m_D(N^{-j} xi) - 1|, so that
  /// |mu_hat(xi) - value| <= |value| * tail_bound.
  double tail_bound = 0.0;
};

/// prod_{j=1}^{J} m_D(N^{-j} xi) with its tail bound
/// exp(2 pi d_max |xi| sum_{j>J} N^{-j}) - 1.
TruncatedTransformValue mu_hat_truncated(const CantorSystem& system, double xi, int truncation);

double tail_bound(const CantorSystem& system, double xi, int truncation);

/// Smallest J >= 1 whose tail bound at xi is below `target`.
int truncation_for(const CantorSystem& system, double xi, double target);

struct GridRow {
  double xi = 0.0;
  std::complex<double> value;
  double tail_bound = 0.0;
};

/// Rows at lo + i*step for i = 0 .. floor((hi - lo)/step).
std::vector<GridRow> mu_hat_grid(const CantorSystem& system, double lo, double hi, double step,
                                 int truncation);

/// CSV with header "xi,re,im,abs,tail_bound", 17 significant digits.
void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows);

}  // namespace cantor
