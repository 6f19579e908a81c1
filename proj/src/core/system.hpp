#pragma once

#include "core/exact_real.hpp"

namespace ranum {

// A base-alphabet pair (a, r): base a > 1 and digits {0, ..., r} with
// r >= a - 1, carrying the represented interval [0, U], U = r/(a-1).
// The system is redundant exactly when r > a - 1 strictly; a = r + 1 is
// the classical zero-redundancy positional system.
class SystemParams {
 public:
  SystemParams(ExactReal base, int max_digit);

  const ExactReal& base() const { return base_; }
  int max_digit() const { return r_; }
  const ExactReal& upper() const { return upper_; }
  bool redundant() const { return redundant_; }
  bool zero_redundancy() const { return base_ == ExactReal(r_ + 1); }

  // Digits valid for this alphabet?
  void check_digit(int digit) const {
    if (digit < 0 || digit > r_) {
      throw domain_error("digit " + std::to_string(digit) + " outside alphabet {0,...," +
                         std::to_string(r_) + "}");
    }
  }

  bool operator==(const SystemParams& o) const {
    return r_ == o.r_ && base_ == o.base_;
  }

 private:
  ExactReal base_;
  int r_;
  ExactReal upper_;
  bool redundant_;
};

}  // namespace ranum
