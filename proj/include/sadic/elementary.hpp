#pragma once

#include <optional>
#include <vector>

#include "sadic/desub.hpp"
#include "sadic/sequence.hpp"

namespace sadic {

/// A factorization sigma = alpha o beta through a strictly smaller alphabet B
/// (except in the degenerate single-letter erasing corner, where the types
/// force Card(B) = 1; is_elementary handles that case directly).
struct Decomposition {
  AlphabetPtr mid;  // B
  Morphism alpha;   // B* -> C*
  Morphism beta;    // A* -> B*
};

struct ElementaryOptions {
  int64_t node_limit = 10000000;  // DFS nodes before ResourceExhausted
};

/// Non-elementary witness: a decomposition with Card(B) = Card(A) - 1
/// (padded with letters alpha maps to epsilon when fewer pieces suffice).
/// nullopt iff sigma is elementary. Erasing morphisms take the shortcut of
/// dropping erased letters.
std::optional<Decomposition> find_decomposition(const Morphism& sigma,
                                                const ElementaryOptions& opts = {});

bool is_elementary(const Morphism& sigma, const ElementaryOptions& opts = {});

enum class RankShortcut { Elementary, Inconclusive };

/// Full column rank of the incidence matrix forces elementarity; anything
/// less is inconclusive (Thue-Morse is elementary with rank 1).
RankShortcut rank_shortcut(const Morphism& sigma);

struct DecompositionNotFound : std::runtime_error {
  int step;
  explicit DecompositionNotFound(int k)
      : std::runtime_error("descent chain: no decomposition at step " + std::to_string(k)),
        step(k) {}
};

struct DescentStep {
  int level;          // n_k
  Morphism composed;  // sigma_[n_k, n_{k-1}) o alpha_{k-1}
  Decomposition dec;  // B_k, alpha_k, beta_k
};

struct DescentChain {
  int top_level;  // m
  std::vector<int> flagged;  // descending: n_1 > n_2 > ... > n_K
  std::vector<DescentStep> steps;
};

/// The alphabet-descent construction: starting from the identity on A_m,
/// composes each flagged-level telescope with the previous alpha and
/// decomposes it, producing strictly decreasing alphabets. Each flagged level
/// is expected to be certified non-recognizable (aperiodic) or
/// non-representable by the caller; a missing decomposition throws
/// DecompositionNotFound.
DescentChain build_descent_chain(const MorphismSequence& seq, std::vector<int> flagged,
                                 int m, const ElementaryOptions& opts = {});

}  // namespace sadic
