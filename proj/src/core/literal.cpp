#include "core/literal.hpp"

#include <cctype>
#include <cstddef>

namespace ranum {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) {
      throw parse_error(std::string("expected '") + c + "' (" + what + ") in \"" + text + "\"");
    }
  }
  bool accept_keyword(const std::string& kw) {
    skip_space();
    if (text.compare(pos, kw.size(), kw) == 0) {
      pos += kw.size();
      return true;
    }
    return false;
  }
  Int integer(const char* what) {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits_from = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_from) {
      throw parse_error(std::string("expected integer (") + what + ") in \"" + text + "\"");
    }
    return Int(text.substr(start, pos - start));
  }
  Int unsigned_nonzero(const char* what) {
    Int n = integer(what);
    if (n <= 0) throw parse_error(std::string(what) + " must be positive in \"" + text + "\"");
    return n;
  }
};

long to_long(const Int& n, const char* what) {
  if (!n.fits_slong_p()) throw parse_error(std::string(what) + " out of range");
  return n.get_si();
}

// (U+V*sqrtD)/W, the cursor sits on '('.
ExactReal parse_quadratic(Cursor& cur) {
  cur.expect('(', "quadratic literal");
  Int u = cur.integer("rational part");
  int vsign = 1;
  if (cur.accept('-')) {
    vsign = -1;
  } else {
    cur.expect('+', "sign before surd term");
  }
  Int v = cur.integer("surd coefficient");
  if (v < 0) throw parse_error("surd coefficient carries its sign outside: use (u-v*sqrtD)");
  cur.expect('*', "surd term");
  if (!cur.accept_keyword("sqrt")) {
    throw parse_error("expected sqrt<d> in quadratic literal \"" + cur.text + "\"");
  }
  Int d = cur.integer("radicand");
  if (d < 0) throw parse_error("radicand must be non-negative in \"" + cur.text + "\"");
  cur.expect(')', "quadratic literal");
  Int w(1);
  if (cur.accept('/')) w = cur.unsigned_nonzero("denominator");
  Rat ru(u, w);
  Rat rv(vsign * v, w);
  return ExactReal::make(std::move(ru), std::move(rv), to_long(d, "radicand"));
}

}  // namespace

ExactReal parse_real_literal(const std::string& text) {
  Cursor cur{text};
  ExactReal value;
  if (cur.accept_keyword("phi")) {
    value = golden_ratio();
  } else if (cur.peek() == '(') {
    value = parse_quadratic(cur);
  } else {
    Int num = cur.integer("numerator");
    Int den(1);
    if (cur.accept('/')) den = cur.unsigned_nonzero("denominator");
    value = ExactReal(Rat(num, den));
  }
  if (!cur.done()) {
    throw parse_error("trailing characters in literal \"" + text + "\"");
  }
  return value;
}

namespace {

DigitWord parse_digit_run(const std::string& text, std::size_t from, std::size_t to, int r,
                          const std::string& whole) {
  DigitWord word;
  if (r <= 9) {
    for (std::size_t i = from; i < to; ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw parse_error(std::string("invalid digit character '") + c + "' in \"" + whole + "\"");
      }
      word.push_back(c - '0');
    }
  } else {
    std::size_t i = from;
    while (i < to) {
      std::size_t j = i;
      while (j < to && text[j] != ',') ++j;
      if (j == i) throw parse_error("empty digit between commas in \"" + whole + "\"");
      int digit = 0;
      for (std::size_t k = i; k < j; ++k) {
        char c = text[k];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw parse_error(std::string("invalid digit character '") + c + "' in \"" + whole + "\"");
        }
        digit = digit * 10 + (c - '0');
        if (digit > 1000000) throw parse_error("digit out of range in \"" + whole + "\"");
      }
      word.push_back(digit);
      i = (j < to) ? j + 1 : j;
    }
  }
  for (int digit : word) {
    if (digit > r) {
      throw parse_error("digit " + std::to_string(digit) + " exceeds alphabet max " +
                        std::to_string(r) + " in \"" + whole + "\"");
    }
  }
  return word;
}

}  // namespace

DigitWord parse_word_literal(const std::string& text, int r) {
  if (text.find('(') != std::string::npos || text.find(')') != std::string::npos) {
    throw parse_error("word literal cannot contain a period: \"" + text + "\"");
  }
  return parse_digit_run(text, 0, text.size(), r, text);
}

DigitStream parse_stream_literal(const std::string& text, int r) {
  std::size_t open = text.find('(');
  if (open == std::string::npos) {
    throw parse_error("stream literal needs a parenthesized period, e.g. \"110(01)\": \"" +
                      text + "\"");
  }
  if (text.empty() || text.back() != ')') {
    throw parse_error("stream literal must end with ')': \"" + text + "\"");
  }
  std::size_t close = text.size() - 1;
  if (text.find('(', open + 1) != std::string::npos ||
      text.find(')') != close) {
    throw parse_error("malformed period parentheses in \"" + text + "\"");
  }
  // In comma form a separator may precede '(' : "10,3,0(2,1)" and "10,3,0,(2,1)"
  // read the same.
  std::size_t pre_end = open;
  if (r > 9 && pre_end > 0 && text[pre_end - 1] == ',') --pre_end;
  DigitWord pre = parse_digit_run(text, 0, pre_end, r, text);
  DigitWord per = parse_digit_run(text, open + 1, close, r, text);
  if (per.empty()) throw parse_error("period must be nonempty in \"" + text + "\"");
  return DigitStream(std::move(pre), std::move(per));
}

std::string format_word(const DigitWord& word, int r) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (r > 9 && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_stream(const DigitStream& stream, int r) {
  std::string out = format_word(stream.preperiod(), r);
  if (r > 9 && !stream.preperiod().empty()) out += ',';
  out += '(';
  out += format_word(stream.period(), r);
  out += ')';
  return out;
}

}  // namespace ranum
