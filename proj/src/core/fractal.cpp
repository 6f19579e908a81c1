#include "core/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

#include "core/representation.hpp"

namespace ranum {

namespace {

SystemParams make_cantor_system(ExactReal base) {
  if (base.compare(ExactReal(2)) <= 0 || base.compare(ExactReal(3)) >= 0) {
    throw domain_error(
        "Cantor construction needs a in (2, 3): the rank-1 pieces over digits {0,2} "
        "are disjoint only for a > 2");
  }
  return SystemParams(std::move(base), 2);
}

}  // namespace

CantorSpec::CantorSpec(ExactReal base) : sys_(make_cantor_system(std::move(base))) {}

bool cantor_member(const CantorSpec& spec, const DigitStream& stream) {
  for (int digit : stream.preperiod()) {
    spec.system().check_digit(digit);
    if (digit == 1) return false;
  }
  for (int digit : stream.period()) {
    spec.system().check_digit(digit);
    if (digit == 1) return false;
  }
  return true;
}

std::vector<Interval> cantor_cover(const CantorSpec& spec, int level) {
  if (level < 1 || level > kMaxCantorLevel) {
    throw domain_error("cover level must lie in [1, " + std::to_string(kMaxCantorLevel) + "]");
  }
  const SystemParams& sys = spec.system();
  const ExactReal len = cylinder_length(sys, level);
  std::vector<Interval> cover;
  cover.reserve(1u << level);
  const long count = 1L << level;
  for (long index = 0; index < count; ++index) {
    DigitWord word(static_cast<size_t>(level), 0);
    for (int i = 0; i < level; ++i) {
      if ((index >> (level - 1 - i)) & 1L) word[static_cast<size_t>(i)] = 2;
    }
    ExactReal lo = eval_word(sys, word);
    cover.push_back(Interval::closed(lo, lo + len));
  }
  for (size_t i = 0; i + 1 < cover.size(); ++i) {
    if (cover[i].hi().compare(cover[i + 1].lo()) >= 0) {
      throw internal_error("cover pieces overlap; disjointness requires a > 2");
    }
  }
  return cover;
}

CantorDimension cantor_dimension(const CantorSpec& spec) {
  CantorDimension dim;
  dim.contraction = spec.system().base();
  dim.decimal = std::log(2.0) / std::log(dim.contraction.to_double());
  return dim;
}

bool is_golden(const SystemParams& sys) {
  const ExactReal& a = sys.base();
  return sys.max_digit() == 1 && a * a == a + ExactReal(1);
}

SystemParams golden_system() { return SystemParams(golden_ratio(), 1); }

ExactReal golden_anchor_value() {
  return eval_stream(golden_system(), DigitStream({}, {1, 0, 0}));
}

namespace {

// Sites where one triple can be swapped for the other inside a word.
void swap_sites(const DigitWord& w, std::vector<std::pair<size_t, bool>>& out) {
  out.clear();
  for (size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == 1 && w[i + 1] == 0 && w[i + 2] == 0) out.emplace_back(i, true);
    if (w[i] == 0 && w[i + 1] == 1 && w[i + 2] == 1) out.emplace_back(i, false);
  }
}

DigitWord swapped(const DigitWord& w, size_t at, bool to_011) {
  DigitWord out = w;
  out[at] = to_011 ? 0 : 1;
  out[at + 1] = to_011 ? 1 : 0;
  out[at + 2] = to_011 ? 1 : 0;
  return out;
}

}  // namespace

std::set<DigitStream> substitute_all(const SystemParams& sys, const DigitStream& seed,
                                     int max_len) {
  if (!is_golden(sys)) {
    throw domain_error("triple substitution (100) <-> (011) is exact only in the golden system");
  }
  if (max_len < 1 || max_len > kMaxSubstitutionLength) {
    throw domain_error("max_len must lie in [1, " + std::to_string(kMaxSubstitutionLength) +
                       "]");
  }
  for (int digit : seed.preperiod()) sys.check_digit(digit);
  for (int digit : seed.period()) sys.check_digit(digit);

  if (seed.canonical_length() > static_cast<size_t>(max_len)) {
    throw domain_error("max_len is smaller than the seed's canonical length");
  }

  const ExactReal anchor = eval_stream(sys, seed);
  std::set<DigitStream> closure{seed};
  std::deque<DigitStream> queue{seed};

  std::vector<std::pair<size_t, bool>> sites;
  auto offer = [&](DigitWord pre, DigitWord per) {
    DigitStream candidate(std::move(pre), std::move(per));
    if (candidate.canonical_length() > static_cast<size_t>(max_len)) return;
    if (!closure.insert(candidate).second) return;
    if (eval_stream(sys, candidate) != anchor) {
      throw internal_error("substitution changed the represented value");
    }
    queue.push_back(std::move(candidate));
  };

  while (!queue.empty()) {
    DigitStream cur = queue.front();
    queue.pop_front();
    const DigitWord& pre = cur.preperiod();
    const DigitWord& per = cur.period();

    // Single-occurrence swaps inside an unrolled finite window; anything
    // whose canonical length survives the cap sits within this unroll bound.
    DigitWord window = pre;
    while (window.size() <= static_cast<size_t>(max_len) + 2) {
      swap_sites(window, sites);
      for (auto [at, dir] : sites) {
        if (at + 3 <= window.size()) offer(swapped(window, at, dir), per);
      }
      window.insert(window.end(), per.begin(), per.end());
    }

    // Phase-aligned swaps applied to every period copy at once; rotations
    // cover occurrences wrapping around the period boundary.
    DigitWord head = pre;
    DigitWord rot = per;
    for (size_t t = 0; t < per.size(); ++t) {
      swap_sites(rot, sites);
      for (auto [at, dir] : sites) {
        offer(head, swapped(rot, at, dir));
      }
      head.push_back(rot.front());
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  return closure;
}

LevelSetPreimage level_set_preimage(const std::string& octal_word, int tail) {
  auto expand = [](char label) -> DigitWord {
    if (label == '4') return {1, 0, 0};
    if (label == '5') return {0, 1, 1};
    throw domain_error(std::string("level-set words use digits 4 and 5 only, got '") + label +
                       "'");
  };
  if (tail != 4 && tail != 5) {
    throw domain_error("tail must be 4 or 5");
  }
  DigitWord pre;
  pre.reserve(octal_word.size() * 3);
  for (char label : octal_word) {
    DigitWord block = expand(label);
    pre.insert(pre.end(), block.begin(), block.end());
  }
  LevelSetPreimage out{Rat(0), DigitStream(std::move(pre), expand(static_cast<char>('0' + tail)))};
  out.x = eval_stream(SystemParams(ExactReal(2), 1), out.digits).rational_part();
  return out;
}

Rat level_set_dimension() { return Rat(1, 3); }

}  // namespace ranum
