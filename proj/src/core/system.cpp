#include "core/system.hpp"

namespace ranum {

SystemParams::SystemParams(ExactReal base, int max_digit)
    : base_(std::move(base)), r_(max_digit) {
  if (r_ < 1) throw domain_error("alphabet max r must be a positive integer");
  if (base_.compare(ExactReal(1)) <= 0) {
    throw domain_error("base a must exceed 1");
  }
  ExactReal shifted = base_ - ExactReal(1);
  int c = ExactReal(r_).compare(shifted);
  if (c < 0) {
    throw domain_error("alphabet too small: r must satisfy r >= a - 1");
  }
  redundant_ = c > 0;
  upper_ = ExactReal(r_) / shifted;
}

}  // namespace ranum
