#include "core/verify.hpp"

#include <random>

#include "core/cylinder.hpp"
#include "core/fractal.hpp"
#include "core/function_f.hpp"
#include "core/literal.hpp"
#include "core/representation.hpp"
#include "core/serialize.hpp"

namespace ranum {

namespace {

using Words = std::vector<DigitWord>;

// Every word of length <= max_rank when that stays small, otherwise a
// seeded sample of the same shape.
Words probe_words(const SystemParams& sys, int max_rank, size_t cap = 400) {
  Words words{{}};
  for (size_t i = 0; i < words.size() && words.size() <= cap; ++i) {
    if (static_cast<int>(words[i].size()) >= max_rank) continue;
    for (int digit = 0; digit <= sys.max_digit(); ++digit) {
      DigitWord next = words[i];
      next.push_back(digit);
      words.push_back(std::move(next));
    }
  }
  if (words.size() <= cap) return words;
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> digit_of(0, sys.max_digit());
  std::uniform_int_distribution<int> rank_of(0, max_rank);
  Words sample{{}};
  while (sample.size() < cap) {
    DigitWord word(static_cast<size_t>(rank_of(rng)));
    for (int& digit : word) digit = digit_of(rng);
    sample.push_back(std::move(word));
  }
  return sample;
}

CheckResult check(const std::string& name, bool passed, const std::string& detail = "") {
  return CheckResult{name, passed, detail};
}

SuiteResult cylinders_suite(const SystemParams& sys) {
  SuiteResult suite{"cylinders", true, {}};
  const Words words = probe_words(sys, 3);

  bool union_ok = true;
  bool overlap_ok = true;
  bool monotone_ok = true;
  for (const DigitWord& word : words) {
    Cylinder parent(sys, word);
    const Interval parent_iv = parent.interval();
    const std::vector<Cylinder> children = parent.subdivide();
    if (children.front().min() != parent_iv.lo() ||
        children.back().max() != parent_iv.hi()) {
      union_ok = false;
    }
    for (size_t j = 0; j + 1 < children.size(); ++j) {
      if (children[j + 1].min().compare(children[j].max()) > 0) union_ok = false;
      if (children[j].min().compare(children[j + 1].min()) >= 0) monotone_ok = false;
      Interval brute = Interval::intersect(children[j].interval(), children[j + 1].interval());
      Interval direct = parent.adjacent_overlap(static_cast<int>(j));
      ExactReal formula = (ExactReal(sys.max_digit()) - sys.base() + ExactReal(1)) /
                          (pow(sys.base(), static_cast<unsigned>(parent.rank() + 1)) *
                           (sys.base() - ExactReal(1)));
      if (!(brute == direct) || direct.length() != formula) overlap_ok = false;
    }
  }
  suite.checks.push_back(check("subdivision-union", union_ok));
  suite.checks.push_back(check("adjacent-overlap-geometry", overlap_ok));
  suite.checks.push_back(check("child-min-monotone", monotone_ok));

  bool nested_ok = true;
  std::mt19937 rng(11u);
  std::uniform_int_distribution<int> digit_of(0, sys.max_digit());
  for (int trial = 0; trial < 10; ++trial) {
    DigitWord pre(5);
    for (int& digit : pre) digit = digit_of(rng);
    DigitWord per(2);
    for (int& digit : per) digit = digit_of(rng);
    DigitStream stream(pre, per);
    ExactReal x = eval_stream(sys, stream);
    Interval outer = Cylinder(sys, {}).interval();
    DigitWord prefix;
    for (size_t k = 0; k < 8; ++k) {
      prefix.push_back(stream.digit_at(k));
      Interval inner = Cylinder(sys, prefix).interval();
      if (!outer.contains(inner)) nested_ok = false;
      if (inner.lo().compare(x) > 0 || inner.hi().compare(x) < 0) nested_ok = false;
      outer = inner;
    }
  }
  suite.checks.push_back(check("nested-chain-contains-value", nested_ok));

  bool words_ok = true;
  const Words short_words = probe_words(sys, 3, 80);
  for (const DigitWord& w1 : short_words) {
    for (const DigitWord& w2 : short_words) {
      if (w1.size() != w2.size()) continue;
      bool same_interval = Cylinder(sys, w1).interval() == Cylinder(sys, w2).interval();
      if (words_equal(sys, w1, w2) != same_interval) words_ok = false;
    }
  }
  suite.checks.push_back(check("words-equal-matches-intervals", words_ok));
  return suite;
}

SuiteResult function_suite(const SystemParams& sys) {
  SuiteResult suite{"function", true, {}};
  std::mt19937 rng(13u);
  std::uniform_int_distribution<int> digit_of(0, sys.max_digit());

  if (sys.zero_redundancy()) {
    bool identity_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      DigitWord pre(6);
      for (int& digit : pre) digit = digit_of(rng);
      DigitStream stream(std::move(pre), {0});
      SourcePoint point(sys, stream);
      if (f_eval(point) != ExactReal(point.value())) identity_ok = false;
    }
    suite.checks.push_back(check("identity-at-zero-redundancy", identity_ok));
    return suite;
  }

  bool jump_ok = true;
  for (int k = 1; k <= 6; ++k) {
    DigitWord prefix(static_cast<size_t>(k), 0);
    prefix.back() = 1;
    ExactReal jump = jump_at_binary(sys, prefix, k);
    ExactReal formula = (ExactReal(sys.max_digit() + 1) - sys.base()) /
                        (pow(sys.base(), static_cast<unsigned>(k)) * (sys.base() - ExactReal(1)));
    if (jump != formula) jump_ok = false;
  }
  suite.checks.push_back(check("jump-formula", jump_ok));

  bool witness_ok = true;
  for (const DigitWord& word : probe_words(sys, 2, 60)) {
    try {
      nonmonotone_witness(sys, word);
    } catch (const internal_error&) {
      witness_ok = false;
    }
  }
  suite.checks.push_back(check("nonmonotone-witness", witness_ok));

  bool ratio_ok = true;
  ExactReal ratio = ExactReal(sys.max_digit() + 1) / sys.base();
  for (int n = 1; n <= 8; ++n) {
    if (variation_lower_bound(sys, n + 1) != variation_lower_bound(sys, n) * ratio) {
      ratio_ok = false;
    }
  }
  if (!(ratio.compare(ExactReal(1)) > 0)) ratio_ok = false;
  suite.checks.push_back(check("variation-ratio", ratio_ok));

  bool sum_ok = true;
  for (int n = 1; n <= 5; ++n) {
    ExactReal total(0);
    long words = 1;
    for (int i = 0; i < n; ++i) words *= sys.max_digit() + 1;
    total = ExactReal(words) * cylinder_length(sys, n);
    if (total != variation_lower_bound(sys, n)) sum_ok = false;
  }
  suite.checks.push_back(check("variation-cylinder-sum", sum_ok));
  return suite;
}

SuiteResult fractal_suite(const SystemParams& sys) {
  SuiteResult suite{"fractal", false, {}};
  const bool cantor_applicable = sys.max_digit() == 2 &&
                                 sys.base().compare(ExactReal(2)) > 0 &&
                                 sys.base().compare(ExactReal(3)) < 0;
  const bool golden_applicable = is_golden(sys);
  if (!cantor_applicable && !golden_applicable) {
    return suite;
  }
  suite.applicable = true;

  if (cantor_applicable) {
    CantorSpec spec(sys.base());
    bool cover_ok = true;
    std::vector<Interval> prev;
    for (int level = 1; level <= 6; ++level) {
      std::vector<Interval> cover = cantor_cover(spec, level);
      if (cover.size() != (1u << level)) cover_ok = false;
      for (size_t i = 0; i + 1 < cover.size(); ++i) {
        if (cover[i].hi().compare(cover[i + 1].lo()) >= 0) cover_ok = false;
      }
      for (const Interval& piece : cover) {
        if (piece.length() != cylinder_length(sys, level)) cover_ok = false;
      }
      if (!prev.empty()) {
        for (size_t i = 0; i < cover.size(); ++i) {
          if (!prev[i / 2].contains(cover[i])) cover_ok = false;
        }
      }
      prev = std::move(cover);
    }
    suite.checks.push_back(check("cantor-cover-structure", cover_ok));

    bool member_ok = true;
    DigitStream inside({2, 0}, {2});
    DigitStream outside({2, 1}, {0});
    member_ok = cantor_member(spec, inside) && !cantor_member(spec, outside);
    ExactReal x = eval_stream(sys, inside);
    for (int level = 1; level <= 6; ++level) {
      bool in_cover = false;
      for (const Interval& piece : cantor_cover(spec, level)) {
        if (piece.lo().compare(x) <= 0 && piece.hi().compare(x) >= 0) in_cover = true;
      }
      if (!in_cover) member_ok = false;
    }
    suite.checks.push_back(check("cantor-membership", member_ok));
  }

  if (golden_applicable) {
    bool subs_ok = true;
    DigitStream seed({}, {1, 0, 0});
    std::set<DigitStream> closure = substitute_all(sys, seed, 9);
    if (closure.find(DigitStream({}, {0, 1, 1})) == closure.end()) subs_ok = false;
    ExactReal anchor = eval_stream(sys, seed);
    for (const DigitStream& member : closure) {
      if (eval_stream(sys, member) != anchor) subs_ok = false;
    }
    suite.checks.push_back(check("substitution-closure", subs_ok));

    bool level_ok = true;
    ExactReal y0 = golden_anchor_value();
    for (int len = 0; len <= 4; ++len) {
      for (int tail : {4, 5}) {
        for (long index = 0; index < (1L << len); ++index) {
          std::string word;
          for (int i = len - 1; i >= 0; --i) word += ((index >> i) & 1L) ? '5' : '4';
          LevelSetPreimage pre = level_set_preimage(word, tail);
          if (f_eval(SourcePoint(sys, pre.digits)) != y0) level_ok = false;
        }
      }
    }
    suite.checks.push_back(check("level-set-preimages", level_ok));

    bool rank_ok = true;
    for (const DigitWord& word : probe_words(sys, 3, 40)) {
      Cylinder parent(sys, word);
      DigitWord w011 = word;
      w011.insert(w011.end(), {0, 1, 1});
      DigitWord w100 = word;
      w100.insert(w100.end(), {1, 0, 0});
      Interval overlap = parent.adjacent_overlap(0);
      if (!(Cylinder(sys, w011).interval() == Cylinder(sys, w100).interval()) ||
          !(Cylinder(sys, w100).interval() == overlap)) {
        rank_ok = false;
      }
    }
    suite.checks.push_back(check("golden-overlap-is-rank+2-cylinder", rank_ok));
  }
  return suite;
}

}  // namespace

std::vector<SuiteResult> run_verify(const SystemParams& sys, const std::string& suite) {
  if (suite != "all" && suite != "cylinders" && suite != "function" && suite != "fractal") {
    throw domain_error("unknown suite '" + suite + "'; expected all|cylinders|function|fractal");
  }
  std::vector<SuiteResult> results;
  if (suite == "all" || suite == "cylinders") results.push_back(cylinders_suite(sys));
  if (suite == "all" || suite == "function") results.push_back(function_suite(sys));
  if (suite == "all" || suite == "fractal") results.push_back(fractal_suite(sys));
  return results;
}

nlohmann::json verify_json(const SystemParams& sys, const std::vector<SuiteResult>& suites) {
  nlohmann::json out{{"system", system_json(sys)}, {"suites", nlohmann::json::array()}};
  for (const SuiteResult& suite : suites) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& check : suite.checks) {
      nlohmann::json row{{"name", check.name}, {"passed", check.passed}};
      if (!check.detail.empty()) row["detail"] = check.detail;
      checks.push_back(std::move(row));
    }
    out["suites"].push_back(nlohmann::json{{"name", suite.name},
                                           {"applicable", suite.applicable},
                                           {"passed", suite.all_passed()},
                                           {"checks", std::move(checks)}});
  }
  out["all_passed"] = verify_all_passed(suites);
  return out;
}

bool verify_all_passed(const std::vector<SuiteResult>& suites) {
  for (const SuiteResult& suite : suites) {
    if (suite.applicable && !suite.all_passed()) return false;
  }
  return true;
}

}  // namespace ranum
