#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "core/cylinder.hpp"
#include "core/literal.hpp"
#include "core/representation.hpp"

using ranum::Cylinder;
using ranum::DigitStream;
using ranum::DigitWord;
using ranum::ExactReal;
using ranum::Interval;
using ranum::Rat;
using ranum::SystemParams;

namespace {

SystemParams sys(const char* base, int r) {
  return SystemParams(ranum::parse_real_literal(base), r);
}

std::vector<DigitWord> words_up_to(int r, int max_rank) {
  std::vector<DigitWord> words{{}};
  for (size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) >= max_rank) continue;
    for (int digit = 0; digit <= r; ++digit) {
      DigitWord next = words[i];
      next.push_back(digit);
      words.push_back(std::move(next));
    }
  }
  return words;
}

}  // namespace

TEST_CASE("interval endpoints") {
  CHECK(Cylinder(sys("3/2", 1), {0}).interval() ==
        Interval::closed(ExactReal(0), ExactReal(Rat(4, 3))));
  CHECK(Cylinder(sys("2", 1), {}).interval() == Interval::closed(ExactReal(0), ExactReal(1)));

  // Golden base, word "1": [phi-1, phi] since 1/phi = phi-1 and the rank-1
  // length is 1/(phi(phi-1)) = 1.
  SystemParams golden = sys("phi", 1);
  ExactReal a = golden.base();
  Interval iv = Cylinder(golden, {1}).interval();
  CHECK(iv.lo() == a - ExactReal(1));
  CHECK(iv.hi() == a);
  CHECK(iv.length() == ExactReal(1));
}

TEST_CASE("rank lengths") {
  SystemParams s = sys("3/2", 1);
  CHECK(ranum::cylinder_length(s, 1) == ExactReal(Rat(4, 3)));
  CHECK(ranum::cylinder_length(s, 2) == ExactReal(Rat(8, 9)));
  CHECK(ranum::cylinder_length(sys("2", 1), 0) == ExactReal(1));
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{
           {"2", 1}, {"3/2", 1}, {"5/2", 2}, {"phi", 1}}) {
    SystemParams t = sys(base, r);
    for (int k = 0; k < 8; ++k) {
      CHECK(ranum::cylinder_length(t, k + 1) ==
            ranum::cylinder_length(t, k) / t.base());
    }
  }
}

TEST_CASE("subdivision") {
  auto children = Cylinder(sys("2", 1), {}).subdivide();
  CHECK(children.size() == 2);
  CHECK(children[0].interval() == Interval::closed(ExactReal(0), ExactReal(Rat(1, 2))));
  CHECK(children[1].interval() == Interval::closed(ExactReal(Rat(1, 2)), ExactReal(1)));

  children = Cylinder(sys("3/2", 1), {}).subdivide();
  CHECK(children[0].interval() == Interval::closed(ExactReal(0), ExactReal(Rat(4, 3))));
  CHECK(children[1].interval() == Interval::closed(ExactReal(Rat(2, 3)), ExactReal(2)));

  // (5/2, 2): children 0 and 2 are disjoint (this gap carries the Cantor set).
  children = Cylinder(sys("5/2", 2), {}).subdivide();
  CHECK(children.size() == 3);
  CHECK(children[0].max().compare(children[2].min()) < 0);
}

TEST_CASE("subdivision union equals the parent, children stay ordered") {
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{
           {"2", 1}, {"3/2", 1}, {"5/2", 2}, {"3", 2}, {"phi", 1}}) {
    SystemParams s = sys(base, r);
    for (const DigitWord& word : words_up_to(r, 3)) {
      Cylinder parent(s, word);
      auto children = parent.subdivide();
      CHECK(children.front().min() == parent.min());
      CHECK(children.back().max() == parent.max());
      for (size_t j = 0; j + 1 < children.size(); ++j) {
        // Consecutive children meet or overlap, and minima strictly increase.
        CHECK(children[j + 1].min().compare(children[j].max()) <= 0);
        CHECK(children[j].min().compare(children[j + 1].min()) < 0);
      }
    }
  }
}

TEST_CASE("adjacent overlaps") {
  // (3/2, 1): overlap [2/3, 4/3] of length 2/3, exactly half the child length.
  Cylinder root(sys("3/2", 1), {});
  Interval overlap = root.adjacent_overlap(0);
  CHECK(overlap == Interval::closed(ExactReal(Rat(2, 3)), ExactReal(Rat(4, 3))));
  CHECK(overlap.length() == ExactReal(Rat(2, 3)));
  CHECK(overlap.length() * ExactReal(2) == ranum::cylinder_length(root.system(), 1));

  // Zero redundancy: adjacent children share a single point.
  Interval touch = Cylinder(sys("2", 1), {}).adjacent_overlap(0);
  CHECK(touch.is_point());
  CHECK(touch.lo() == ExactReal(Rat(1, 2)));

  // Golden base: overlap length 2 - phi = (3 - sqrt(5))/2.
  Interval golden_overlap = Cylinder(sys("phi", 1), {}).adjacent_overlap(0);
  CHECK(golden_overlap.length() == ExactReal(2) - ranum::golden_ratio());
  CHECK(golden_overlap.length() == ExactReal::make(Rat(3, 2), Rat(-1, 2), 5));

  CHECK_THROWS_AS(root.adjacent_overlap(1), ranum::domain_error);
  CHECK_THROWS_AS(root.adjacent_overlap(-1), ranum::domain_error);
}

TEST_CASE("overlap equals brute-force intersection and the length formula") {
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{
           {"2", 1}, {"3/2", 1}, {"5/2", 2}, {"3", 2}, {"phi", 1}}) {
    SystemParams s = sys(base, r);
    ExactReal one(1);
    for (const DigitWord& word : words_up_to(r, 3)) {
      Cylinder parent(s, word);
      for (int j = 0; j + 1 <= r; ++j) {
        Interval direct = parent.adjacent_overlap(j);
        Interval brute = Interval::intersect(parent.child(j).interval(),
                                             parent.child(j + 1).interval());
        CHECK(direct == brute);
        ExactReal formula =
            (ExactReal(r) - s.base() + one) /
            (ranum::pow(s.base(), static_cast<unsigned>(parent.rank() + 1)) * (s.base() - one));
        CHECK(direct.length() == formula);
        // Property 7 endpoint forms: [child(j+1) followed by (0); child(j)
        // followed by (r)].
        DigitWord lo_word = word;
        lo_word.push_back(j + 1);
        DigitWord hi_word = word;
        hi_word.push_back(j);
        CHECK(direct.lo() == ranum::eval_stream(s, DigitStream(lo_word, {0})));
        CHECK(direct.hi() == ranum::eval_stream(s, DigitStream(hi_word, {r})));
      }
    }
  }
}

TEST_CASE("nested prefix cylinders capture the stream value") {
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{{"3/2", 1}, {"5/2", 2}}) {
    SystemParams s = sys(base, r);
    DigitStream stream({1, 0}, {r, 0});
    ExactReal x = ranum::eval_stream(s, stream);
    Interval outer = Cylinder(s, {}).interval();
    DigitWord prefix;
    for (size_t k = 0; k < 12; ++k) {
      prefix.push_back(stream.digit_at(k));
      Interval inner = Cylinder(s, prefix).interval();
      CHECK(outer.contains(inner));
      CHECK(inner.lo().compare(x) <= 0);
      CHECK(inner.hi().compare(x) >= 0);
      outer = inner;
    }
  }
}

TEST_CASE("every cylinder stays inside [0, U] with positive length") {
  std::mt19937 rng(73);
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{
           {"2", 1}, {"3/2", 1}, {"5/2", 2}, {"3", 2}, {"phi", 1}}) {
    SystemParams s = sys(base, r);
    std::uniform_int_distribution<int> digit_of(0, r);
    std::uniform_int_distribution<int> rank_of(0, 10);
    for (int trial = 0; trial < 50; ++trial) {
      DigitWord word(static_cast<size_t>(rank_of(rng)));
      for (int& d : word) d = digit_of(rng);
      Interval iv = Cylinder(s, word).interval();
      CHECK(iv.lo().sign() >= 0);
      CHECK(iv.hi().compare(s.upper()) <= 0);
      CHECK(iv.length().sign() > 0);
    }
  }
}

TEST_CASE("words_equal uses the value criterion, not digit equality") {
  SystemParams golden = sys("phi", 1);
  CHECK(ranum::words_equal(golden, {1, 0, 0}, {0, 1, 1}));
  CHECK(ranum::words_equal(golden, {1, 0, 0}, {1, 0, 0}));
  CHECK_FALSE(ranum::words_equal(sys("2", 1), {1, 0}, {0, 1}));
  CHECK_THROWS_AS(ranum::words_equal(golden, {1}, {0, 1}), ranum::domain_error);

  // Exhaustive pairwise consistency with interval equality on short words.
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{{"2", 1}, {"phi", 1}, {"5/2", 2}}) {
    SystemParams s = sys(base, r);
    auto words = words_up_to(r, 4);
    for (const DigitWord& w1 : words) {
      for (const DigitWord& w2 : words) {
        if (w1.size() != w2.size()) continue;
        bool same = Cylinder(s, w1).interval() == Cylinder(s, w2).interval();
        CHECK(ranum::words_equal(s, w1, w2) == same);
      }
    }
  }
}

TEST_CASE("words_equal at length 6 over alphabets up to r = 3") {
  // Same-length words bucketed by exact left endpoint: words_equal must hold
  // inside a bucket and fail across buckets (sampled).
  std::mt19937 rng(59);
  for (auto [base, r] : std::vector<std::pair<const char*, int>>{
           {"2", 1}, {"phi", 1}, {"2", 2}, {"5/2", 2}, {"3", 3}, {"2", 3}}) {
    SystemParams s = sys(base, r);
    for (int len : {5, 6}) {
      std::vector<DigitWord> words;
      for (const DigitWord& w : words_up_to(r, len)) {
        if (static_cast<int>(w.size()) == len) words.push_back(w);
      }
      std::map<std::string, std::vector<size_t>> buckets;
      for (size_t i = 0; i < words.size(); ++i) {
        buckets[ranum::eval_word(s, words[i]).literal()].push_back(i);
      }
      for (const auto& [value, members] : buckets) {
        for (size_t i = 0; i + 1 < members.size(); ++i) {
          CHECK(ranum::words_equal(s, words[members[i]], words[members[i + 1]]));
        }
      }
      std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
      for (int trial = 0; trial < 400; ++trial) {
        size_t i = pick(rng);
        size_t j = pick(rng);
        bool same_bucket = ranum::eval_word(s, words[i]) == ranum::eval_word(s, words[j]);
        CHECK(ranum::words_equal(s, words[i], words[j]) == same_bucket);
      }
    }
  }
}

TEST_CASE("golden coincidence: overlap is the common rank+2 cylinder") {
  SystemParams golden = sys("phi", 1);
  for (const DigitWord& word : words_up_to(1, 6)) {
    Cylinder parent(golden, word);
    DigitWord w011 = word;
    w011.insert(w011.end(), {0, 1, 1});
    DigitWord w100 = word;
    w100.insert(w100.end(), {1, 0, 0});
    Interval i011 = Cylinder(golden, w011).interval();
    Interval i100 = Cylinder(golden, w100).interval();
    CHECK(i011 == i100);
    CHECK(i100 == parent.adjacent_overlap(0));
  }
}

TEST_CASE("coincidence classification") {
  // (2,2): r = a makes adjacent children meet in one point, a = 2 halves
  // lengths each rank, and the overlap collapses at m = 1; the overlap is
  // also exactly half the child length here.
  auto report = ranum::classify_coincidences(sys("2", 2), 6);
  CHECK(report.integer_coincidence);
  CHECK(report.half_length);
  CHECK(report.property11_m == std::vector<int>{1});
  CHECK_FALSE(report.golden);
  CHECK(report.half_overlap_ratio);

  report = ranum::classify_coincidences(sys("phi", 1), 6);
  CHECK_FALSE(report.integer_coincidence);
  CHECK_FALSE(report.half_length);
  CHECK(report.golden);
  CHECK(report.property11_m == std::vector<int>{2});
  CHECK_FALSE(report.half_overlap_ratio);

  report = ranum::classify_coincidences(sys("3/2", 1), 6);
  CHECK_FALSE(report.integer_coincidence);
  CHECK_FALSE(report.half_length);
  CHECK_FALSE(report.golden);
  CHECK(report.property11_m.empty());
  CHECK(report.half_overlap_ratio);

  report = ranum::classify_coincidences(sys("3", 3), 4);
  CHECK(report.integer_coincidence);
  CHECK_FALSE(report.half_length);
  CHECK(report.property11_m == std::vector<int>{1});

  CHECK_THROWS_AS(ranum::classify_coincidences(sys("2", 1), 0), ranum::domain_error);
}

TEST_CASE("interval primitives") {
  Interval none = Interval::none();
  CHECK(none.empty());
  CHECK(none.length() == ExactReal(0));
  CHECK_THROWS_AS(none.lo(), ranum::domain_error);

  Interval point = Interval::point(ExactReal(1));
  CHECK(point.is_point());
  CHECK_FALSE(point.empty());

  CHECK(Interval::intersect(Interval::closed(ExactReal(0), ExactReal(1)),
                            Interval::closed(ExactReal(2), ExactReal(3)))
            .empty());
  CHECK_THROWS_AS(Interval::closed(ExactReal(1), ExactReal(0)), ranum::domain_error);
}
