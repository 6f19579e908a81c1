#include "core/representation.hpp"

namespace ranum {

namespace {

void check_word(const SystemParams& sys, const DigitWord& word) {
  for (int digit : word) sys.check_digit(digit);
}

void check_range(const SystemParams& sys, const ExactReal& x) {
  if (x.sign() < 0 || x.compare(sys.upper()) > 0) {
    throw domain_error("x outside the represented interval [0, r/(a-1)]");
  }
}

void check_digit_count(int digits) {
  if (digits < 1 || digits > kMaxExpansionDigits) {
    throw domain_error("digit count must lie in [1, " +
                       std::to_string(kMaxExpansionDigits) + "]");
  }
}

}  // namespace

ExactReal eval_word(const SystemParams& sys, const DigitWord& word) {
  check_word(sys, word);
  const ExactReal ainv = ExactReal(1) / sys.base();
  ExactReal sum(0);
  ExactReal scale(1);
  for (int digit : word) {
    scale = scale * ainv;
    if (digit != 0) sum = sum + ExactReal(digit) * scale;
  }
  return sum;
}

ExactReal eval_stream(const SystemParams& sys, const DigitStream& stream) {
  check_word(sys, stream.preperiod());
  check_word(sys, stream.period());
  const ExactReal ainv = ExactReal(1) / sys.base();
  ExactReal head = eval_word(sys, stream.preperiod());
  ExactReal period_sum = eval_word(sys, stream.period());
  if (period_sum.is_zero()) return head;
  ExactReal shrink = inv_pow(sys.base(), static_cast<unsigned>(stream.period().size()));
  ExactReal tail = period_sum / (ExactReal(1) - shrink);
  return head + inv_pow(sys.base(), static_cast<unsigned>(stream.preperiod().size())) * tail;
}

Expansion greedy_expand(const SystemParams& sys, const ExactReal& x, int digits) {
  check_digit_count(digits);
  check_range(sys, x);
  Expansion out;
  out.word.reserve(static_cast<size_t>(digits));
  ExactReal rem = x;
  for (int i = 0; i < digits; ++i) {
    ExactReal scaled = sys.base() * rem;
    Int fl = scaled.floor();
    long digit = fl.fits_slong_p() ? fl.get_si() : sys.max_digit();
    if (digit > sys.max_digit()) digit = sys.max_digit();
    if (digit < 0) digit = 0;
    out.word.push_back(static_cast<int>(digit));
    rem = scaled - ExactReal(digit);
  }
  out.remainder = rem;
  return out;
}

Expansion lazy_expand(const SystemParams& sys, const ExactReal& x, int digits) {
  check_digit_count(digits);
  check_range(sys, x);
  Expansion out;
  out.word.reserve(static_cast<size_t>(digits));
  ExactReal rem = x;
  for (int i = 0; i < digits; ++i) {
    ExactReal scaled = sys.base() * rem;
    // Smallest digit with scaled - digit <= U.
    Int lift = (scaled - sys.upper()).ceil();
    long digit = lift.fits_slong_p() ? lift.get_si() : 0;
    if (digit < 0) digit = 0;
    if (digit > sys.max_digit()) digit = sys.max_digit();
    out.word.push_back(static_cast<int>(digit));
    rem = scaled - ExactReal(digit);
  }
  out.remainder = rem;
  return out;
}

bool is_ra_rational(const SystemParams& sys, const DigitStream& stream, int depth) {
  if (!sys.base().is_rational()) {
    throw domain_error("r_a-rationality is defined for rational bases only");
  }
  if (depth < 1) throw domain_error("search depth must be a positive integer");
  check_word(sys, stream.preperiod());
  check_word(sys, stream.period());
  if (stream.terminating()) return true;
  ExactReal x = eval_stream(sys, stream);
  for (auto expand : {greedy_expand, lazy_expand}) {
    ExactReal rem = x;
    if (rem.is_zero()) return true;
    for (int i = 0; i < depth; ++i) {
      rem = expand(sys, rem, 1).remainder;
      if (rem.is_zero()) return true;
    }
  }
  return false;
}

}  // namespace ranum
