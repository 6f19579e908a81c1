#pragma once

#include <vector>

#include "core/digit_stream.hpp"
#include "core/exact_real.hpp"
#include "core/representation.hpp"
#include "core/system.hpp"

namespace ranum {

// Largest point count (r+1)^depth accepted by sample_graph.
inline constexpr long kMaxGraphPoints = 65536;

// Largest rank accepted by variation_lower_bound.
inline constexpr int kMaxVariationRank = 4096;

// An argument of the digit-transplant function: a number in [0, 1] given by
// its classical base-(r+1) digits, which f re-reads in the (a, r) system.
// Binary points (two classical representations) are admitted only in their
// (0)-tail form; the purely periodic stream (r) stands for x = 1.
class SourcePoint {
 public:
  SourcePoint(SystemParams target, DigitStream digits);

  const SystemParams& target() const { return sys_; }
  const DigitStream& digits() const { return digits_; }

  // Exact value sum digit_n (r+1)^(-n) in [0, 1].
  Rat value() const;

 private:
  SystemParams sys_;
  DigitStream digits_;
};

// f(x): the value of x's classical digits read in the (a, r) system.
ExactReal f_eval(const SourcePoint& point);

// Jump of f at the binary point whose terminating digits are `prefix`
// (k == |prefix|, last digit >= 1): left limit minus function value, which
// equals (r+1-a)/(a^k (a-1)) and vanishes exactly at a = r+1.
ExactReal jump_at_binary(const SystemParams& sys, const DigitWord& prefix, int k);

// A certificate of non-monotonicity of f inside one rank-m source cylinder.
struct WitnessTriple {
  int case_id = 0;       // 1: a <= r, 2: r < a < r+1
  int tail_run = 0;      // case 2: minimal run length n of digit r in x2
  DigitStream x1, x2, x3;
  Rat v1, v2, v3;        // x values, v1 < v2 < v3
  ExactReal f1, f2, f3;
};

// Exact witness per the two parameter cases; domain_error at a = r+1 where
// f is the identity. Case 1 satisfies f2 > f1 and f2 > f3; case 2 satisfies
// f2 > f1 and f3 < f2 with the minimal run length n such that
// r/(a^n (a-1)) < (r-a+1)/(a(a-1)).
WitnessTriple nonmonotone_witness(const SystemParams& sys, const DigitWord& base);

// V_n = ((r+1)/a)^n * U: the total length of all (r+1)^n rank-n image
// cylinders, a lower bound for the variation of f. Grows without bound
// exactly when a < r+1; constant U at a = r+1.
ExactReal variation_lower_bound(const SystemParams& sys, int n);

struct GraphRow {
  Rat x;
  ExactReal y;
  bool left_side = false;  // one-sided (left limit) row at a binary point
};

// f sampled at every x = m/(r+1)^depth in [0, 1], sorted by x. Interior
// grid points are binary; each contributes a left-limit row followed by the
// value row, so the row count is (r+1)^depth + 1 + (interior point count).
std::vector<GraphRow> sample_graph(const SystemParams& sys, int depth);

}  // namespace ranum
