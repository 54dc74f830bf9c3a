#include "doctest.h"

#include "sadic/fixtures.hpp"
#include "sadic/language.hpp"

using namespace sadic;

namespace {

std::set<std::string> names(const FactorBag& bag) {
  std::set<std::string> out;
  for (const Word& w : bag.words()) out.insert(w.display());
  return out;
}

}  // namespace

TEST_CASE("language of a morphism") {
  FactorSet fib = language_of_morphism(fixtures::fibonacci(), 2, 4);
  CHECK(names(fib.bag) == std::set<std::string>{"a", "b", "aa", "ab", "ba"});
  CHECK(fib.saturated);
  CHECK_FALSE(fib.truncated);

  FactorSet tm = language_of_morphism(fixtures::thue_morse(), 2, 3);
  CHECK(names(tm.bag) == std::set<std::string>{"a", "b", "aa", "ab", "ba", "bb"});
  CHECK(tm.saturated);

  // sigma^0 contributes the bare letters, so c is in the language even though
  // it never occurs in any image.
  FactorSet m34 = language_of_morphism(fixtures::ex34_endo(), 2, 4);
  CHECK(names(m34.bag) == std::set<std::string>{"a", "b", "c", "aa", "ab", "ba"});
  CHECK(m34.saturated);
  CHECK(member(m34, Word::parse(m34.bag.words().begin()->alphabet(), "b b")) ==
        Membership::NotSeen);
}

TEST_CASE("level language") {
  MorphismSequence ex51 = fixtures::ex51();
  FactorSet l0 = level_language(ex51, 0, 3, 5);
  CHECK(names(l0.bag) == std::set<std::string>{"a", "aa", "aaa"});

  FactorSet l1 = level_language(ex51, 1, 3, 5);
  auto a1 = ex51.alphabet_at(1);
  CHECK(member(l1, Word::parse(a1, "a b a")) == Membership::In);
  CHECK(member(l1, Word::parse(a1, "b a b")) == Membership::In);
  CHECK(member(l1, Word::parse(a1, "a a b")) == Membership::NotSeen);

  // horizon = n keeps exactly the single letters
  FactorSet base = level_language(ex51, 2, 3, 2);
  CHECK(names(base.bag) == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("membership contract") {
  FactorSet fib = language_of_morphism(fixtures::fibonacci(), 2, 5);
  auto ab = fixtures::fibonacci().domain();
  CHECK(member(fib, Word::parse(ab, "a b")) == Membership::In);
  CHECK(member(fib, Word::parse(ab, "b b")) == Membership::NotSeen);
  CHECK(fib.saturated);  // NotSeen is a certified exclusion here
  CHECK_THROWS_AS((void)member(fib, Word::parse(ab, "a b a")), std::invalid_argument);
}

TEST_CASE("saturate levels") {
  // Constant sequence: every level equals the morphism language.
  MorphismSequence fib_seq = constant_sequence(fixtures::fibonacci());
  auto sat = saturate_levels(fib_seq, 2);
  REQUIRE(sat.size() == 1);
  CHECK(names(sat[0].bag) == std::set<std::string>{"a", "b", "aa", "ab", "ba"});
  CHECK(sat[0].saturated);

  // One-letter level: powers of the single letter up to the bound.
  auto ex51 = fixtures::ex51();
  auto levels = saturate_levels(ex51, 3);
  REQUIRE(levels.size() == 3);
  CHECK(names(levels[0].bag) == std::set<std::string>{"a", "aa", "aaa"});

  // The padded family: level K+1 holds exactly the factors of the single
  // non-a_0 points.
  auto ex75 = fixtures::ex75(1);
  auto sat75 = saturate_levels(ex75, 3);
  REQUIRE(sat75.size() == 3);
  for (const Word& w : sat75[2].bag.words()) {
    int non_zero = 0;
    for (int64_t i = 0; i < w.size(); ++i)
      if (w.at(i) != 0) ++non_zero;
    CHECK(non_zero <= 1);
  }
  auto top = ex75.alphabet_at(2);
  CHECK(member(sat75[2], Word::parse(top, "a_0 a_1 a_0")) == Membership::In);
  CHECK(member(sat75[2], Word::parse(top, "a_0 a_2 a_0")) == Membership::In);
}

TEST_CASE("reported words replay as factors of telescoped images") {
  MorphismSequence seq = fixtures::ex51();
  const int n = 1, horizon = 6;
  FactorSet lang = level_language(seq, n, 4, horizon);
  auto occurs_in = [](const Word& needle, const Word& hay) {
    if (needle.size() > hay.size()) return false;
    for (int64_t i = 0; i + needle.size() <= hay.size(); ++i)
      if (hay.sub(i, needle.size()) == needle) return true;
    return false;
  };
  for (const Word& w : lang.bag.words()) {
    bool found = false;
    for (int m = n; m <= horizon && !found; ++m) {
      Morphism tel = telescope(seq, n, m);
      for (int32_t a = 0; a < tel.domain()->size() && !found; ++a)
        found = occurs_in(w, tel.image(a));
    }
    CHECK(found);
  }
}

TEST_CASE("monotone in length and horizon") {
  Morphism tm = fixtures::thue_morse();
  FactorSet small = language_of_morphism(tm, 3, 2);
  FactorSet longer = language_of_morphism(tm, 5, 2);
  FactorSet deeper = language_of_morphism(tm, 3, 4);
  for (const Word& w : small.bag.words()) {
    CHECK(longer.bag.contains(w));
    CHECK(deeper.bag.contains(w));
  }
}

TEST_CASE("factor closure of reported words") {
  FactorSet l1 = level_language(fixtures::ex51(), 1, 4, 6);
  for (const Word& w : l1.bag.words())
    if (w.size() > 1) {
      CHECK(l1.bag.contains(w.sub(0, w.size() - 1)));
      CHECK(l1.bag.contains(w.sub(1, w.size() - 1)));
    }
}

TEST_CASE("saturate_levels agrees with deep level_language") {
  auto ex51 = fixtures::ex51();
  auto sat = saturate_levels(ex51, 3);
  for (int n = 0; n < 3; ++n) {
    if (sat[n].truncated) continue;
    FactorSet deep = level_language(ex51, n, 3, n + 14);
    CHECK(names(sat[n].bag) == names(deep.bag));
  }
}
