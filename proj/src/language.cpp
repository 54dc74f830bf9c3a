#include "sadic/language.hpp"

namespace sadic {

namespace {

// sigma applied to z, clamped to `cap` letters. Sets *hit when clamped.
Word apply_capped(const Morphism& sigma, const Word& z, int64_t cap, bool* hit) {
  Word out(sigma.codomain(), {});
  for (int64_t i = 0; i < z.size(); ++i) {
    const Word& img = sigma.image(z.at(i));
    for (int64_t j = 0; j < img.size(); ++j) {
      if (out.size() >= cap) {
        *hit = true;
        return out;
      }
      out.push_back(img.at(j));
    }
  }
  return out;
}

}  // namespace

FactorSet language_of_morphism(const Morphism& sigma, int64_t len, int horizon,
                               const LanguageOptions& opts) {
  if (!same_alphabet(sigma.domain(), sigma.codomain()))
    throw std::invalid_argument("language_of_morphism: not an endomorphism");
  if (len < 1 || horizon < 0)
    throw std::invalid_argument("language_of_morphism: need len >= 1, horizon >= 0");

  FactorSet fs;
  fs.level = -1;
  fs.max_len = len;
  fs.horizon = horizon;
  fs.bag = FactorBag(len);

  const int n_letters = sigma.domain()->size();
  std::vector<Word> words;
  for (int32_t a = 0; a < n_letters; ++a)
    words.emplace_back(sigma.domain(), std::vector<int32_t>{a});

  bool grew_last = false;
  for (int step = 0; step <= horizon; ++step) {
    bool grew = false;
    for (const Word& w : words) grew |= fs.bag.insert_factors(w);
    grew_last = grew;
    if (step < horizon)
      for (Word& w : words) w = apply_capped(sigma, w, opts.word_cap, &fs.truncated);
  }

  if (!grew_last && horizon >= 1) {
    // Lookahead: the next iteration must contribute nothing new as well.
    bool lookahead_grew = false;
    FactorBag probe = fs.bag;
    for (Word& w : words) {
      w = apply_capped(sigma, w, opts.word_cap, &fs.truncated);
      lookahead_grew |= probe.insert_factors(w);
    }
    fs.saturated = !lookahead_grew && !fs.truncated;
  }
  return fs;
}

FactorSet level_language(const MorphismSequence& seq, int n, int64_t len, int horizon,
                         const LanguageOptions& opts) {
  if (len < 1 || horizon < n || n < 0)
    throw std::invalid_argument("level_language: need len >= 1, horizon >= n >= 0");

  FactorSet fs;
  fs.level = n;
  fs.max_len = len;
  fs.horizon = horizon;
  fs.bag = FactorBag(len);

  // words[a] = sigma_[n,m)(a) for a in A_m, advanced one level per step.
  AlphabetPtr am = seq.alphabet_at(n);
  std::vector<Word> words;
  for (int32_t a = 0; a < am->size(); ++a)
    words.emplace_back(am, std::vector<int32_t>{a});

  for (int m = n;; ++m) {
    for (const Word& w : words) fs.bag.insert_factors(w);
    if (m == horizon) break;
    const Morphism& next = seq.morphism_at(m);
    const AlphabetPtr& dom = next.domain();
    std::vector<Word> grown;
    grown.reserve(dom->size());
    for (int32_t b = 0; b < dom->size(); ++b) {
      // sigma_[n,m+1)(b) = sigma_[n,m)(sigma_m(b)); splice from the cached
      // level-m images.
      const Word& img = next.image(b);
      Word acc(words.front().alphabet(), {});
      for (int64_t i = 0; i < img.size() && acc.size() < opts.word_cap; ++i) {
        const Word& piece = words.at(img.at(i));
        for (int64_t j = 0; j < piece.size(); ++j) {
          if (acc.size() >= opts.word_cap) {
            fs.truncated = true;
            break;
          }
          acc.push_back(piece.at(j));
        }
      }
      grown.push_back(std::move(acc));
    }
    words = std::move(grown);
  }
  return fs;
}

std::vector<FactorSet> saturate_levels(const MorphismSequence& seq, int64_t len,
                                       const LanguageOptions& opts) {
  if (len < 1) throw std::invalid_argument("saturate_levels: len must be >= 1");
  const int levels = seq.distinct_levels();
  std::vector<FactorSet> out;

  struct State {
    std::vector<Word> words;
    int depth = 0;  // current m
  };
  std::vector<State> states(levels);
  for (int i = 0; i < levels; ++i) {
    out.push_back(FactorSet{});
    out[i].level = i;
    out[i].max_len = len;
    out[i].bag = FactorBag(len);
    AlphabetPtr a = seq.alphabet_at(i);
    for (int32_t c = 0; c < a->size(); ++c)
      states[i].words.emplace_back(a, std::vector<int32_t>{c});
    states[i].depth = i;
    for (const Word& w : states[i].words) out[i].bag.insert_factors(w);
  }

  // Deepen every level one step per round until a full cycle of rounds adds
  // nothing anywhere (or the round budget runs out).
  int quiet_rounds = 0;
  const int need_quiet = seq.cycle_size() + 1;
  bool stabilized = false;
  for (int round = 0; round < opts.max_rounds; ++round) {
    bool grew = false;
    for (int i = 0; i < levels; ++i) {
      State& st = states[i];
      const Morphism& next = seq.morphism_at(st.depth);
      std::vector<Word> grown;
      grown.reserve(next.domain()->size());
      for (int32_t b = 0; b < next.domain()->size(); ++b) {
        const Word& img = next.image(b);
        Word acc(st.words.front().alphabet(), {});
        for (int64_t k = 0; k < img.size(); ++k) {
          const Word& piece = st.words.at(img.at(k));
          for (int64_t j = 0; j < piece.size(); ++j) {
            if (acc.size() >= opts.word_cap) {
              out[i].truncated = true;
              break;
            }
            acc.push_back(piece.at(j));
          }
          if (acc.size() >= opts.word_cap) break;
        }
        grown.push_back(std::move(acc));
      }
      st.words = std::move(grown);
      ++st.depth;
      for (const Word& w : st.words) grew |= out[i].bag.insert_factors(w);
      out[i].horizon = st.depth;
    }
    quiet_rounds = grew ? 0 : quiet_rounds + 1;
    if (quiet_rounds >= need_quiet) {
      stabilized = true;
      break;
    }
  }
  for (int i = 0; i < levels; ++i) out[i].saturated = stabilized && !out[i].truncated;
  return out;
}

Membership member(const FactorSet& fs, const Word& z) {
  if (z.size() > fs.max_len)
    throw std::invalid_argument("member: query longer than max_len");
  return fs.bag.contains(z) ? Membership::In : Membership::NotSeen;
}

bool passes_filter(const FactorSet& fs, const Word& z) {
  return fs.bag.all_factors_present(z);
}

}  // namespace sadic
