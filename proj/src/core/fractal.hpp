#pragma once

#include <set>
#include <string>
#include <vector>

#include "core/cylinder.hpp"
#include "core/digit_stream.hpp"
#include "core/exact_real.hpp"
#include "core/system.hpp"

namespace ranum {

// Deepest cover level (2^n intervals) accepted by cantor_cover.
inline constexpr int kMaxCantorLevel = 16;

// Largest canonical-length cap accepted by substitute_all.
inline constexpr int kMaxSubstitutionLength = 64;

// The Cantor-type set of numbers representable with digits {0, 2} in an
// (a, 2) system. Disjointness of the two first-rank pieces needs a > 2, so
// the base is confined to (2, 3).
class CantorSpec {
 public:
  explicit CantorSpec(ExactReal base);

  const SystemParams& system() const { return sys_; }

 private:
  SystemParams sys_;
};

// Does the stream avoid the middle digit 1 everywhere?
bool cantor_member(const CantorSpec& spec, const DigitStream& stream);

// The 2^level rank-`level` cylinder intervals over digits {0, 2}, sorted and
// pairwise disjoint; level-(n+1) covers refine level-n covers.
std::vector<Interval> cantor_cover(const CantorSpec& spec, int level);

// Self-similarity dimension log 2 / log a under the open set condition.
struct CantorDimension {
  long piece_count = 2;    // numerator argument: log(piece_count)
  ExactReal contraction;   // denominator argument: log(contraction) with ratio 1/a
  double decimal = 0.0;
};

CantorDimension cantor_dimension(const CantorSpec& spec);

bool is_golden(const SystemParams& sys);

SystemParams golden_system();

// Closure of the seed under exchanging consecutive digit triples
// (1,0,0) <-> (0,1,1), restricted to streams of canonical length <= max_len.
// Golden base only; every member is verified to evaluate to the seed value.
std::set<DigitStream> substitute_all(const SystemParams& sys, const DigitStream& seed,
                                     int max_len);

// y0 = value of (100) in the golden system, the level-set anchor.
ExactReal golden_anchor_value();

struct LevelSetPreimage {
  Rat x;               // exact binary value of the expanded digit stream
  DigitStream digits;  // canonical binary stream
};

// Block code into the level set f^{-1}(y0): each label expands to a binary
// triple (4 -> 100, 5 -> 011), closed off with the chosen periodic tail.
// f of the resulting stream equals y0 exactly.
LevelSetPreimage level_set_preimage(const std::string& octal_word, int tail);

// Dimension of the embedded copy C[8;{4,5}]: the certified lower bound 1/3.
Rat level_set_dimension();

}  // namespace ranum
