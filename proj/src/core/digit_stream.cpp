#include "core/digit_stream.hpp"

#include <algorithm>

namespace ranum {

namespace {

// Primitive root of a word: the shortest prefix whose repetition gives it.
DigitWord primitive_period(const DigitWord& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) {
      repeats = w[i] == w[i % len];
    }
    if (repeats) return DigitWord(w.begin(), w.begin() + static_cast<long>(len));
  }
  return w;
}

}  // namespace

DigitStream::DigitStream(DigitWord preperiod, DigitWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw domain_error("stream period must be nonempty");
  for (int digit : pre_) {
    if (digit < 0) throw domain_error("digits must be non-negative");
  }
  for (int digit : per_) {
    if (digit < 0) throw domain_error("digits must be non-negative");
  }
  per_ = primitive_period(per_);
  // Absorb the preperiod tail into the period phase: ...w c (p c) = ...w (c p).
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
  }
}

int DigitStream::max_digit() const {
  int top = 0;
  for (int digit : pre_) top = std::max(top, digit);
  for (int digit : per_) top = std::max(top, digit);
  return top;
}

}  // namespace ranum
