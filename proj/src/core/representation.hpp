#pragma once

#include "core/digit_stream.hpp"
#include "core/exact_real.hpp"
#include "core/system.hpp"

namespace ranum {

// Exact value of the stream in the system: sum of digit_n * a^(-n). The
// preperiod is a finite sum, the period a geometric closed form; the result
// always lies in [0, U].
ExactReal eval_stream(const SystemParams& sys, const DigitStream& stream);

// Exact value of the finite word read as a terminating expansion.
ExactReal eval_word(const SystemParams& sys, const DigitWord& word);

// Largest digit count accepted by the expansion routines.
inline constexpr int kMaxExpansionDigits = 4096;

struct Expansion {
  DigitWord word;        // n digits
  ExactReal remainder;   // in [0, U]; x == eval(word) + a^(-n) * remainder
};

// Greedy expansion: each step takes min(r, floor(a*x)). The clamp at r
// matters in redundant systems, where a*x may exceed r while a valid
// expansion still exists.
Expansion greedy_expand(const SystemParams& sys, const ExactReal& x, int digits);

// Lazy expansion: each step takes the smallest digit keeping the scaled
// remainder inside [0, U].
Expansion lazy_expand(const SystemParams& sys, const ExactReal& x, int digits);

inline constexpr int kDefaultRaRationalDepth = 20;

// Does the value admit a terminating representation (period (0))? True when
// the canonical stream itself terminates, otherwise both greedy and lazy
// expansions of its value are searched up to `depth` digits for a zero
// remainder. Rational bases only; the bounded search can under-approximate.
bool is_ra_rational(const SystemParams& sys, const DigitStream& stream,
                    int depth = kDefaultRaRationalDepth);

}  // namespace ranum
