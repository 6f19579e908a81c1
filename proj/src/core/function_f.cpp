#include "core/function_f.hpp"

#include <utility>

#include "core/cylinder.hpp"

namespace ranum {

namespace {

SystemParams classical_system(int r) { return SystemParams(ExactReal(r + 1), r); }

void check_stream(const SystemParams& sys, const DigitStream& stream) {
  for (int digit : stream.preperiod()) sys.check_digit(digit);
  for (int digit : stream.period()) sys.check_digit(digit);
}

bool has_r_tail(const DigitStream& stream, int r) {
  return stream.period().size() == 1 && stream.period()[0] == r &&
         !stream.preperiod().empty();
}

}  // namespace

SourcePoint::SourcePoint(SystemParams target, DigitStream digits)
    : sys_(std::move(target)), digits_(std::move(digits)) {
  check_stream(sys_, digits_);
  if (has_r_tail(digits_, sys_.max_digit())) {
    throw domain_error(
        "non-canonical (r)-tail representation of a binary point; use the (0)-tail form");
  }
}

Rat SourcePoint::value() const {
  return eval_stream(classical_system(sys_.max_digit()), digits_).rational_part();
}

ExactReal f_eval(const SourcePoint& point) {
  return eval_stream(point.target(), point.digits());
}

ExactReal jump_at_binary(const SystemParams& sys, const DigitWord& prefix, int k) {
  if (k < 1) throw domain_error("discontinuity position k must be a positive integer");
  if (static_cast<size_t>(k) != prefix.size()) {
    throw domain_error("k must equal the prefix length (the binary point terminates at digit k)");
  }
  for (int digit : prefix) sys.check_digit(digit);
  if (prefix.back() < 1) {
    throw domain_error("no binary point here: digit at position k is 0");
  }
  DigitWord lowered = prefix;
  lowered.back() -= 1;
  ExactReal left = eval_stream(sys, DigitStream(std::move(lowered), {sys.max_digit()}));
  ExactReal value = eval_stream(sys, DigitStream(prefix, {0}));
  return left - value;
}

WitnessTriple nonmonotone_witness(const SystemParams& sys, const DigitWord& base) {
  for (int digit : base) sys.check_digit(digit);
  const int r = sys.max_digit();
  const ExactReal& a = sys.base();
  const ExactReal one(1);
  if (sys.zero_redundancy()) {
    throw domain_error("f is the identity at a = r+1; no non-monotonicity witness exists");
  }

  WitnessTriple w;
  w.x1 = DigitStream(base, {0});

  if (a.compare(ExactReal(r)) <= 0) {
    w.case_id = 1;
    DigitWord pre2 = base;
    pre2.insert(pre2.end(), {r, 0, r});
    w.x2 = DigitStream(std::move(pre2), {r - 1});
    DigitWord pre3 = base;
    pre3.insert(pre3.end(), {r, 1});
    w.x3 = DigitStream(std::move(pre3), {0});
  } else {
    w.case_id = 2;
    // Least n with r/(a^n (a-1)) < (r-a+1)/(a(a-1)); exists since a < r+1
    // makes the right side positive while rank lengths shrink to 0.
    ExactReal bound = (ExactReal(r) - a + one) / (a * (a - one));
    int n = 1;
    while (cylinder_length(sys, n).compare(bound) >= 0) ++n;
    w.tail_run = n;
    DigitWord pre2 = base;
    pre2.push_back(0);
    pre2.insert(pre2.end(), static_cast<size_t>(n), r);
    w.x2 = DigitStream(std::move(pre2), {0});
    DigitWord pre3 = base;
    pre3.push_back(1);
    w.x3 = DigitStream(std::move(pre3), {0});
  }

  SourcePoint p1(sys, w.x1), p2(sys, w.x2), p3(sys, w.x3);
  w.v1 = p1.value();
  w.v2 = p2.value();
  w.v3 = p3.value();
  w.f1 = f_eval(p1);
  w.f2 = f_eval(p2);
  w.f3 = f_eval(p3);

  if (!(cmp(w.v1, w.v2) < 0 && cmp(w.v2, w.v3) < 0)) {
    throw internal_error("witness arguments out of order");
  }
  bool rises_then_caps = (w.f2 - w.f1).sign() > 0 && (w.f2 - w.f3).sign() > 0;
  bool rises_then_falls = (w.f2 - w.f1).sign() > 0 && (w.f3 - w.f2).sign() < 0;
  if (w.case_id == 1 ? !rises_then_caps : !rises_then_falls) {
    throw internal_error("witness sign conditions failed");
  }
  return w;
}

ExactReal variation_lower_bound(const SystemParams& sys, int n) {
  if (n < 1 || n > kMaxVariationRank) {
    throw domain_error("variation rank must lie in [1, " +
                       std::to_string(kMaxVariationRank) + "]");
  }
  ExactReal ratio = ExactReal(sys.max_digit() + 1) / sys.base();
  return pow(ratio, static_cast<unsigned>(n)) * sys.upper();
}

std::vector<GraphRow> sample_graph(const SystemParams& sys, int depth) {
  if (depth < 1) throw domain_error("graph depth must be a positive integer");
  const int width = sys.max_digit() + 1;
  long points = 1;
  for (int i = 0; i < depth; ++i) {
    points *= width;
    if (points > kMaxGraphPoints) {
      throw domain_error("graph too dense: (r+1)^depth may not exceed " +
                         std::to_string(kMaxGraphPoints));
    }
  }

  std::vector<GraphRow> rows;
  rows.reserve(static_cast<size_t>(2 * points));
  for (long m = 0; m <= points; ++m) {
    Rat x(m, points);
    x.canonicalize();
    if (m == points) {
      // x = 1 has the single purely periodic representation (r).
      rows.push_back({x, eval_stream(sys, DigitStream({}, {sys.max_digit()})), false});
      break;
    }
    DigitWord word(static_cast<size_t>(depth), 0);
    long rest = m;
    for (int i = depth - 1; i >= 0; --i) {
      word[static_cast<size_t>(i)] = static_cast<int>(rest % width);
      rest /= width;
    }
    if (m > 0) {
      // Left limit at the interior binary point: the (r)-tail companion.
      DigitWord trimmed = word;
      while (trimmed.back() == 0) trimmed.pop_back();
      trimmed.back() -= 1;
      rows.push_back({x, eval_stream(sys, DigitStream(std::move(trimmed), {sys.max_digit()})),
                      true});
    }
    rows.push_back({x, eval_stream(sys, DigitStream(std::move(word), {0})), false});
  }
  return rows;
}

}  // namespace ranum
