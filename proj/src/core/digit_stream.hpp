#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace ranum {

// A digit word: finite, possibly empty; digit range is checked against a
// concrete system where it matters.
using DigitWord = std::vector<int>;

// An eventually periodic digit sequence: preperiod word followed by a
// repeated nonempty period word. Canonical on construction: the period is
// primitive (not a power of a shorter word) and the preperiod never ends
// with a rotated copy of the period, so syntactic equality is a sound
// equality of sequences. Terminating expansions carry period (0).
class DigitStream {
 public:
  // The zero stream (0).
  DigitStream() : per_{0} {}

  DigitStream(DigitWord preperiod, DigitWord period);

  const DigitWord& preperiod() const { return pre_; }
  const DigitWord& period() const { return per_; }

  bool terminating() const { return per_.size() == 1 && per_[0] == 0; }

  // 0-based digit of the infinite sequence.
  int digit_at(std::size_t n) const {
    if (n < pre_.size()) return pre_[n];
    return per_[(n - pre_.size()) % per_.size()];
  }

  std::size_t canonical_length() const { return pre_.size() + per_.size(); }

  int max_digit() const;

  bool operator==(const DigitStream& o) const = default;
  auto operator<=>(const DigitStream& o) const = default;

 private:
  DigitWord pre_;
  DigitWord per_;
};

}  // namespace ranum
