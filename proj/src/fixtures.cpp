#include "sadic/fixtures.hpp"

namespace sadic::fixtures {

namespace {

AlphabetPtr subscripted(int count) {
  std::vector<std::string> tokens;
  for (int i = 0; i < count; ++i) tokens.push_back("a_" + std::to_string(i));
  return make_alphabet(std::move(tokens));
}

// a_i -> a_0 a_i a_0 for i < chain_from; a_{chain_from} -> a_{chain_from - 1}.
// chain_from < 0 pads every letter.
Morphism padding_morphism(const AlphabetPtr& domain, const AlphabetPtr& codomain,
                          int chain_from) {
  std::vector<Word> images;
  for (int32_t i = 0; i < domain->size(); ++i) {
    if (chain_from >= 0 && i == chain_from)
      images.emplace_back(codomain, std::vector<int32_t>{i - 1});
    else
      images.emplace_back(codomain, std::vector<int32_t>{0, i, 0});
  }
  return Morphism(domain, codomain, std::move(images));
}

}  // namespace

Morphism fibonacci() {
  auto ab = make_alphabet_chars("ab");
  return Morphism(ab, ab, {Word::parse(ab, "a b"), Word::parse(ab, "a")});
}

Morphism thue_morse() {
  auto ab = make_alphabet_chars("ab");
  return Morphism(ab, ab, {Word::parse(ab, "a b"), Word::parse(ab, "b a")});
}

Morphism ex34() {
  auto abc = make_alphabet_chars("abc");
  auto ab = make_alphabet_chars("ab");
  return Morphism(abc, ab,
                  {Word::parse(ab, "a a"), Word::parse(ab, "a b"), Word::parse(ab, "b a")});
}

Morphism ex34_endo() {
  auto abc = make_alphabet_chars("abc");
  return Morphism(abc, abc,
                  {Word::parse(abc, "a a"), Word::parse(abc, "a b"),
                   Word::parse(abc, "b a")});
}

MorphismSequence ex51() {
  auto a1 = make_alphabet_chars("a");
  auto a2 = make_alphabet_chars("ab");
  auto a3 = make_alphabet_chars("abc");
  Morphism s0(a2, a1, {Word::parse(a1, "a"), Word::parse(a1, "")});
  Morphism s1(a3, a2,
              {Word::parse(a2, "a"), Word::parse(a2, "b b"), Word::parse(a2, "a b")});
  Morphism s2(a3, a3,
              {Word::parse(a3, "a"), Word::parse(a3, "b b"), Word::parse(a3, "c a b")});
  return MorphismSequence({s0, s1}, {s2});
}

std::map<int, ShiftModel> ex51_models() {
  auto a1 = make_alphabet_chars("a");
  auto a2 = make_alphabet_chars("ab");
  std::map<int, ShiftModel> models;
  models[0] = ShiftModel{0, {periodic_point(Word::parse(a1, "a"))}};
  models[1] = ShiftModel{
      1, {Epp(Word::parse(a2, "b"), Word::parse(a2, "a"), Word::parse(a2, "b"), 0)}};
  return models;
}

MorphismSequence ex75(int k) {
  if (k < 1) throw std::invalid_argument("ex7.5 needs K >= 1");
  std::vector<Morphism> preperiod;
  for (int n = 0; n <= k; ++n)
    preperiod.push_back(padding_morphism(subscripted(n + 2), subscripted(n + 1), n + 1));
  Morphism tail = padding_morphism(subscripted(k + 2), subscripted(k + 2), -1);
  return MorphismSequence(std::move(preperiod), {tail});
}

std::map<int, ShiftModel> ex75_models(int k) {
  std::map<int, ShiftModel> models;
  for (int n = 0; n <= k + 2; ++n) {
    const int letters = std::min(n, k + 1);
    AlphabetPtr alphabet = subscripted(std::min(n, k + 1) + 1);
    ShiftModel model{n, {}};
    Word a0(alphabet, {0});
    model.generators.push_back(periodic_point(a0));
    for (int32_t i = 1; i <= letters; ++i)
      model.generators.push_back(Epp(a0, Word(alphabet, {i}), a0, 0));
    models[n] = std::move(model);
  }
  return models;
}

NonRecognizabilityCertificate ex75_certificate(int k, int level) {
  if (level < 1 || level > k)
    throw std::invalid_argument("ex7.5 certificates exist for levels 1..K");
  MorphismSequence seq = ex75(k);
  const Morphism& sigma = seq.morphism_at(level);
  const AlphabetPtr& upper = sigma.domain();    // A_{level+1}
  const AlphabetPtr& lower = sigma.codomain();  // A_level
  Word u_up(upper, {0});
  Word u_lo(lower, {0});
  // sigma(... a_0 a_0 . a_n a_0 ...) = ... a_0 . a_0 a_n a_0 ... =
  // sigma(... a_0 . a_0 a_{n+1} a_0 ...): the image point carries a_n at
  // index 1, reached with offsets 0 and 2.
  Epp x1(u_up, Word(upper, {static_cast<int32_t>(level)}), u_up, 0);
  Epp x2(u_up, Word(upper, {static_cast<int32_t>(level + 1)}), u_up, 1);
  Epp image(u_lo, Word(lower, {static_cast<int32_t>(level)}), u_lo, 1);
  return NonRecognizabilityCertificate{sigma, CenteredRep{x1, 0}, CenteredRep{x2, 2},
                                       image};
}

MorphismSequence ex76(int truncation) {
  if (truncation < 1) throw std::invalid_argument("ex7.6 needs a truncation level >= 1");
  std::vector<Morphism> preperiod;
  for (int n = 0; n < truncation; ++n)
    preperiod.push_back(padding_morphism(subscripted(n + 3), subscripted(n + 2), n + 2));
  Morphism tail = padding_morphism(subscripted(truncation + 2),
                                   subscripted(truncation + 2), -1);
  return MorphismSequence(std::move(preperiod), {tail}, /*truncated_family=*/true);
}

std::vector<std::string> example_names() {
  return {"fibonacci", "thue-morse", "ex3.4", "ex5.1", "ex7.5", "ex7.6"};
}

}  // namespace sadic::fixtures
