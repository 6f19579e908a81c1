#pragma once

#include <vector>

#include "core/digit_stream.hpp"
#include "core/exact_real.hpp"
#include "core/system.hpp"

namespace ranum {

// Closed interval [lo, hi]; a point interval (lo == hi) is distinct from the
// empty interval, which carries no endpoints.
class Interval {
 public:
  static Interval closed(ExactReal lo, ExactReal hi);
  static Interval point(ExactReal at) { return closed(at, at); }
  static Interval none() { return Interval(); }

  bool empty() const { return empty_; }
  bool is_point() const { return !empty_ && lo_ == hi_; }
  const ExactReal& lo() const;
  const ExactReal& hi() const;
  ExactReal length() const;
  bool contains(const Interval& inner) const;

  // Set intersection of two closed intervals.
  static Interval intersect(const Interval& x, const Interval& y);

  bool operator==(const Interval& o) const {
    if (empty_ != o.empty_) return false;
    return empty_ || (lo_ == o.lo_ && hi_ == o.hi_);
  }

 private:
  Interval() : empty_(true) {}
  ExactReal lo_;
  ExactReal hi_;
  bool empty_;
};

// Length r/(a^k (a-1)) shared by every rank-k cylinder.
ExactReal cylinder_length(const SystemParams& sys, int rank);

// The set of numbers whose representation starts with a fixed digit word:
// an interval [u, u + d] with u the value of the word and d the rank length.
class Cylinder {
 public:
  Cylinder(SystemParams sys, DigitWord base);

  const SystemParams& system() const { return sys_; }
  const DigitWord& base() const { return base_; }
  int rank() const { return static_cast<int>(base_.size()); }

  ExactReal min() const;
  ExactReal max() const;
  Interval interval() const;

  Cylinder child(int digit) const;

  // The r+1 cylinders extending the base by one digit; their union is the
  // parent interval, with overlaps in redundant systems.
  std::vector<Cylinder> subdivide() const;

  // Intersection of children j and j+1: [min of child j+1, max of child j];
  // a single point at zero redundancy, never empty while r >= a-1.
  Interval adjacent_overlap(int digit) const;

 private:
  SystemParams sys_;
  DigitWord base_;
};

// Do two equal-rank words denote the same cylinder? Decided by the exact
// criterion sum a^(-i) (alpha_i - beta_i) == 0, not digit equality.
bool words_equal(const SystemParams& sys, const DigitWord& w1, const DigitWord& w2);

// Parameter coincidences in the overlap structure.
struct CoincidenceReport {
  bool integer_coincidence = false;   // r == a: adjacent children meet in one point
  bool half_length = false;           // a == 2: children have half the parent length
  std::vector<int> property11_m;      // overlap equals a rank-(k+m) cylinder
  bool golden = false;                // r == 1, a^2 == a+1: overlap is a rank-(k+2) cylinder
  bool half_overlap_ratio = false;    // overlap length == child length / 2
};

CoincidenceReport classify_coincidences(const SystemParams& sys, int max_m);

}  // namespace ranum
