#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include <random>

#include "sadic/morphism.hpp"

namespace sadic::testgen {

inline AlphabetPtr letters(int n) {
  static const char* names = "abcdefgh";
  std::vector<std::string> tokens;
  for (int i = 0; i < n; ++i) tokens.emplace_back(1, names[i]);
  return make_alphabet(std::move(tokens));
}

inline Word random_word(std::mt19937& rng, const AlphabetPtr& alphabet, int min_len,
                        int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int32_t> sym(0, alphabet->size() - 1);
  std::vector<int32_t> syms;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) syms.push_back(sym(rng));
  return Word(alphabet, std::move(syms));
}

// Random endomorphism; erasing_percent of images are empty (subject to at
// least one non-empty image so the morphism is not trivial).
inline Morphism random_endomorphism(std::mt19937& rng, int letters_count, int max_image,
                                    int erasing_percent) {
  AlphabetPtr a = letters(letters_count);
  std::uniform_int_distribution<int> pct(0, 99);
  std::vector<Word> images;
  for (int i = 0; i < letters_count; ++i) {
    const bool erase = pct(rng) < erasing_percent;
    images.push_back(random_word(rng, a, erase ? 0 : 1, erase ? 0 : max_image));
  }
  bool all_empty = true;
  for (const Word& w : images) all_empty &= w.empty();
  if (all_empty) images[0] = random_word(rng, a, 1, max_image);
  return Morphism(a, a, std::move(images));
}

inline Epp random_epp(std::mt19937& rng, const AlphabetPtr& alphabet, int max_piece) {
  std::uniform_int_distribution<int64_t> origin(-3, 3);
  return Epp(random_word(rng, alphabet, 1, max_piece),
             random_word(rng, alphabet, 0, max_piece),
             random_word(rng, alphabet, 1, max_piece), origin(rng));
}

}  // namespace sadic::testgen
