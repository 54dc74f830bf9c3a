#pragma once

#include <vector>

#include "sadic/sequence.hpp"

namespace sadic {

/// Bounded-length, bounded-horizon approximation of a language L(sigma) or
/// L^(n)(sigma). Soundness is unconditional: stored words genuinely occur in
/// telescoped images. `saturated` upgrades NOT_SEEN to a certified "out";
/// `truncated` records that a per-word length cap was hit, which voids any
/// completeness claim.
struct FactorSet {
  int level = -1;  // -1: single-morphism language
  int64_t max_len = 0;
  int horizon = 0;
  FactorBag bag;
  bool truncated = false;
  bool saturated = false;
};

enum class Membership { In, NotSeen };

struct LanguageOptions {
  int64_t word_cap = 1000000;  // per telescoped image word
  int max_rounds = 64;         // saturate_levels fixpoint rounds
};

/// Union over 0 <= k <= horizon of the factors of sigma^k(a), length <= len.
/// Saturated when the last step added nothing and a one-step lookahead adds
/// nothing either.
FactorSet language_of_morphism(const Morphism& sigma, int64_t len, int horizon,
                               const LanguageOptions& opts = {});

/// Union over n <= m <= horizon, a in A_m of the factors of sigma_[n,m)(a).
FactorSet level_language(const MorphismSequence& seq, int n, int64_t len, int horizon,
                         const LanguageOptions& opts = {});

/// One FactorSet per distinct level (preperiod + one cycle), deepened until a
/// full cycle of extra horizon steps adds nothing at any level.
std::vector<FactorSet> saturate_levels(const MorphismSequence& seq, int64_t len,
                                       const LanguageOptions& opts = {});

/// In is a proof of membership; NotSeen certifies non-membership only when
/// the set is saturated and not truncated. Throws for |z| > max_len.
Membership member(const FactorSet& fs, const Word& z);

/// Sound filter usable beyond max_len: true iff every factor of z of length
/// <= max_len is present (equivalent to membership for |z| <= max_len).
bool passes_filter(const FactorSet& fs, const Word& z);

}  // namespace sadic
