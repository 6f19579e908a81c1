#pragma once

#include <string>

#include "core/digit_stream.hpp"
#include "core/exact_real.hpp"

namespace ranum {

// Value/base literal grammar:
//   integer    3        -7
//   rational   3/2      -7/3
//   quadratic  (1+1*sqrt5)/2   meaning (u + v*sqrt(d))/w, the /w optional
//   keyword    phi  ==  (1+1*sqrt5)/2
ExactReal parse_real_literal(const std::string& text);

// Digit word/stream literals. Compact digit-per-character form for r <= 9
// ("110", "110(01)"), comma-separated for r > 9 ("10,3,0(2,1)"). A stream
// literal always carries its period in parentheses; the preperiod may be
// empty ("(100)").
DigitWord parse_word_literal(const std::string& text, int r);
DigitStream parse_stream_literal(const std::string& text, int r);

std::string format_word(const DigitWord& word, int r);
std::string format_stream(const DigitStream& stream, int r);

}  // namespace ranum
