#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace tmfg {

// Error-free accumulator for doubles (Shewchuk partials, the scheme behind
// Python's math.fsum). round() is the correctly rounded sum of every addend
// so far, so any two accumulations of the same multiset agree bitwise, and a
// +x followed by a -x cancels without residue. All retained-weight totals in
// this library go through it; that is what makes "incremental bookkeeping
// equals the final edge-list sum" an exact statement instead of a tolerance.
class ExactSum {
 public:
  void add(double x) {
    std::size_t used = 0;
    for (std::size_t i = 0; i < partials_.size(); ++i) {
      double y = partials_[i];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      double hi = x + y;
      double lo = y - (hi - x);
      if (lo != 0.0) partials_[used++] = lo;
      x = hi;
    }
    partials_.resize(used);
    partials_.push_back(x);
  }

  void subtract(double x) { add(-x); }

  // Correctly rounded value; ties across partials resolved half-to-even.
  double round() const {
    if (partials_.empty()) return 0.0;
    std::size_t n = partials_.size();
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      double x = hi;
      double y = partials_[--n];
      hi = x + y;
      double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) ||
                  (lo > 0.0 && partials_[n - 1] > 0.0))) {
      double y = lo * 2.0;
      double x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

  void reset() { partials_.clear(); }

 private:
  std::vector<double> partials_;  // non-overlapping, increasing magnitude
};

inline double exact_sum(std::span<const double> xs) {
  ExactSum s;
  for (double x : xs) s.add(x);
  return s.round();
}

}  // namespace tmfg
