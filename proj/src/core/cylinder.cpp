#include "core/cylinder.hpp"

#include <utility>

#include "core/representation.hpp"

namespace ranum {

Interval Interval::closed(ExactReal lo, ExactReal hi) {
  if (lo.compare(hi) > 0) throw domain_error("interval endpoints out of order");
  Interval out;
  out.lo_ = std::move(lo);
  out.hi_ = std::move(hi);
  out.empty_ = false;
  return out;
}

const ExactReal& Interval::lo() const {
  if (empty_) throw domain_error("empty interval has no endpoints");
  return lo_;
}

const ExactReal& Interval::hi() const {
  if (empty_) throw domain_error("empty interval has no endpoints");
  return hi_;
}

ExactReal Interval::length() const {
  if (empty_) return ExactReal(0);
  return hi_ - lo_;
}

bool Interval::contains(const Interval& inner) const {
  if (inner.empty_) return true;
  if (empty_) return false;
  return lo_.compare(inner.lo_) <= 0 && hi_.compare(inner.hi_) >= 0;
}

Interval Interval::intersect(const Interval& x, const Interval& y) {
  if (x.empty_ || y.empty_) return none();
  const ExactReal& lo = x.lo_.compare(y.lo_) >= 0 ? x.lo_ : y.lo_;
  const ExactReal& hi = x.hi_.compare(y.hi_) <= 0 ? x.hi_ : y.hi_;
  if (lo.compare(hi) > 0) return none();
  return closed(lo, hi);
}

ExactReal cylinder_length(const SystemParams& sys, int rank) {
  if (rank < 0) throw domain_error("cylinder rank must be non-negative");
  return ExactReal(sys.max_digit()) /
         (pow(sys.base(), static_cast<unsigned>(rank)) * (sys.base() - ExactReal(1)));
}

Cylinder::Cylinder(SystemParams sys, DigitWord base)
    : sys_(std::move(sys)), base_(std::move(base)) {
  for (int digit : base_) sys_.check_digit(digit);
}

ExactReal Cylinder::min() const { return eval_word(sys_, base_); }

ExactReal Cylinder::max() const { return min() + cylinder_length(sys_, rank()); }

Interval Cylinder::interval() const {
  ExactReal lo = min();
  ExactReal hi = lo + cylinder_length(sys_, rank());
  return Interval::closed(std::move(lo), std::move(hi));
}

Cylinder Cylinder::child(int digit) const {
  sys_.check_digit(digit);
  DigitWord extended = base_;
  extended.push_back(digit);
  return Cylinder(sys_, std::move(extended));
}

std::vector<Cylinder> Cylinder::subdivide() const {
  std::vector<Cylinder> children;
  children.reserve(static_cast<size_t>(sys_.max_digit()) + 1);
  for (int digit = 0; digit <= sys_.max_digit(); ++digit) {
    children.push_back(child(digit));
  }
  return children;
}

Interval Cylinder::adjacent_overlap(int digit) const {
  if (digit < 0 || digit >= sys_.max_digit()) {
    throw domain_error("adjacent overlap needs a digit in {0,...,r-1}");
  }
  ExactReal lo = child(digit + 1).min();
  ExactReal hi = child(digit).max();
  if (lo.compare(hi) > 0) {
    throw internal_error("adjacent cylinders failed to meet despite r >= a-1");
  }
  return Interval::closed(std::move(lo), std::move(hi));
}

bool words_equal(const SystemParams& sys, const DigitWord& w1, const DigitWord& w2) {
  if (w1.size() != w2.size()) {
    throw domain_error("cylinder words must have equal rank");
  }
  const ExactReal ainv = ExactReal(1) / sys.base();
  ExactReal sum(0);
  ExactReal scale(1);
  for (size_t i = 0; i < w1.size(); ++i) {
    sys.check_digit(w1[i]);
    sys.check_digit(w2[i]);
    scale = scale * ainv;
    int delta = w1[i] - w2[i];
    if (delta != 0) sum = sum + ExactReal(delta) * scale;
  }
  return sum.is_zero();
}

CoincidenceReport classify_coincidences(const SystemParams& sys, int max_m) {
  if (max_m < 1) throw domain_error("max_m must be a positive integer");
  CoincidenceReport report;
  const ExactReal& a = sys.base();
  const ExactReal r(sys.max_digit());
  const ExactReal one(1);

  report.integer_coincidence = (r == a);
  report.half_length = (a == ExactReal(2));
  report.golden = sys.max_digit() == 1 && a * a == a + one;
  // Overlap (r-a+1)/(a^{k+1}(a-1)) equals half of r/(a^{k+1}(a-1)).
  report.half_overlap_ratio = ExactReal(2) * (r + one - a) == r;

  for (int m = 1; m <= max_m; ++m) {
    ExactReal am = pow(a, static_cast<unsigned>(m));
    ExactReal rhs = am * (a - one) / (am - one);
    if (r == rhs) report.property11_m.push_back(m);
  }
  return report;
}

}  // namespace ranum
