#pragma once

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quncert {

struct RootResult {
  double root;
  int iterations;
  double residual;
  double bracket_lo;
  double bracket_hi;
};

/// Plain bisection. Throws std::domain_error when f does not change sign
/// over [lo, hi]; the message carries both endpoint values.
template <typename F>
RootResult bisect_root(F&& f, double lo, double hi, double xtol = 1e-10, int max_iter = 200) {
  if (!(lo < hi)) {
    throw std::invalid_argument("bisection bracket is empty");
  }
  const double orig_lo = lo;
  const double orig_hi = hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0, 0.0, orig_lo, orig_hi};
  if (fhi == 0.0) return {hi, 0, 0.0, orig_lo, orig_hi};
  if ((flo < 0.0) == (fhi < 0.0)) {
    std::ostringstream msg;
    msg << "no sign change over bracket [" << lo << ", " << hi << "]: f(lo) = " << flo
        << ", f(hi) = " << fhi;
    throw std::domain_error(msg.str());
  }
  int it = 0;
  for (; it < max_iter && (hi - lo) > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, it + 1, 0.0, orig_lo, orig_hi};
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, it, f(root), orig_lo, orig_hi};
}

}  // namespace quncert
