#include "sadic/elementary.hpp"

#include <algorithm>
#include <functional>

namespace sadic {

namespace {

// Fresh tokens not colliding with the given ones.
std::vector<std::string> fresh_tokens(const std::vector<std::string>& taken, int count,
                                      const std::string& stem) {
  std::vector<std::string> out;
  int i = 1;
  while (static_cast<int>(out.size()) < count) {
    std::string tok = stem + std::to_string(i++);
    bool clash = std::find(taken.begin(), taken.end(), tok) != taken.end();
    if (!clash) out.push_back(tok);
  }
  return out;
}

Decomposition erasing_shortcut(const Morphism& sigma) {
  const AlphabetPtr& a = sigma.domain();
  const int target = a->size() - 1;
  std::vector<int32_t> productive;
  for (int32_t c = 0; c < a->size(); ++c)
    if (!sigma.image(c).empty()) productive.push_back(c);

  std::vector<std::string> tokens;
  for (int32_t c : productive) tokens.push_back(a->letter(c));
  const int pads = std::max(0, target - static_cast<int>(tokens.size()));
  for (auto& t : fresh_tokens(tokens, pads, "pad")) tokens.push_back(t);
  if (tokens.empty()) tokens = fresh_tokens({}, 1, "pad");  // single-letter corner
  AlphabetPtr b = make_alphabet(tokens);

  std::vector<Word> alpha_images;
  for (size_t i = 0; i < productive.size(); ++i)
    alpha_images.push_back(sigma.image(productive[i]));
  while (static_cast<int>(alpha_images.size()) < b->size())
    alpha_images.emplace_back(sigma.codomain(), std::vector<int32_t>{});

  std::vector<Word> beta_images;
  for (int32_t c = 0; c < a->size(); ++c) {
    if (sigma.image(c).empty()) {
      beta_images.emplace_back(b, std::vector<int32_t>{});
    } else {
      auto pos = std::find(productive.begin(), productive.end(), c) - productive.begin();
      beta_images.emplace_back(b, std::vector<int32_t>{static_cast<int32_t>(pos)});
    }
  }
  return Decomposition{b, Morphism(b, sigma.codomain(), std::move(alpha_images)),
                       Morphism(a, b, std::move(beta_images))};
}

}  // namespace

std::optional<Decomposition> find_decomposition(const Morphism& sigma,
                                                const ElementaryOptions& opts) {
  const AlphabetPtr& a = sigma.domain();
  if (is_erasing(sigma)) return erasing_shortcut(sigma);
  const int limit = a->size() - 1;
  if (limit == 0) return std::nullopt;  // non-erasing single letter

  // DFS over left-to-right factorizations of every image into pieces from a
  // global set of at most `limit` non-empty words. Letters with the longest
  // images first: they constrain the piece set fastest.
  std::vector<int32_t> order(a->size());
  for (int32_t i = 0; i < a->size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int32_t l, int32_t r) {
    return sigma.image(l).size() > sigma.image(r).size();
  });

  std::vector<Word> pieces;
  std::vector<std::vector<int>> factorization(a->size());
  int64_t nodes = 0;

  std::function<bool(size_t, int64_t)> dfs = [&](size_t li, int64_t pos) -> bool {
    if (++nodes > opts.node_limit)
      throw ResourceExhausted("find_decomposition: node limit exceeded");
    if (li == order.size()) return true;
    const Word& target = sigma.image(order[li]);
    if (pos == target.size()) return dfs(li + 1, 0);
    auto try_piece = [&](int idx) -> bool {
      factorization[order[li]].push_back(idx);
      const bool ok = dfs(li, pos + pieces[idx].size());
      if (!ok) factorization[order[li]].pop_back();
      return ok;
    };
    for (size_t i = 0; i < pieces.size(); ++i) {
      const Word& s = pieces[i];
      if (pos + s.size() > target.size()) continue;
      if (target.sub(pos, s.size()) == s && try_piece(static_cast<int>(i))) return true;
    }
    if (static_cast<int>(pieces.size()) < limit) {
      for (int64_t len = 1; pos + len <= target.size(); ++len) {
        pieces.push_back(target.sub(pos, len));
        if (try_piece(static_cast<int>(pieces.size()) - 1)) return true;
        pieces.pop_back();
      }
    }
    return false;
  };

  if (!dfs(0, 0)) return std::nullopt;

  std::vector<std::string> tokens =
      fresh_tokens(std::vector<std::string>{}, limit, "p");
  AlphabetPtr b = make_alphabet(tokens);
  std::vector<Word> alpha_images;
  for (int i = 0; i < limit; ++i) {
    if (i < static_cast<int>(pieces.size()))
      alpha_images.push_back(pieces[i]);
    else
      alpha_images.emplace_back(sigma.codomain(), std::vector<int32_t>{});
  }
  std::vector<Word> beta_images;
  for (int32_t c = 0; c < a->size(); ++c) {
    std::vector<int32_t> syms(factorization[c].begin(), factorization[c].end());
    beta_images.emplace_back(b, std::move(syms));
  }
  Decomposition dec{b, Morphism(b, sigma.codomain(), std::move(alpha_images)),
                    Morphism(a, b, std::move(beta_images))};
  if (!(compose(dec.alpha, dec.beta) == sigma))
    throw std::logic_error("find_decomposition: replay check failed");
  return dec;
}

bool is_elementary(const Morphism& sigma, const ElementaryOptions& opts) {
  if (is_erasing(sigma)) return false;
  if (sigma.domain()->size() == 1) return true;
  return !find_decomposition(sigma, opts).has_value();
}

RankShortcut rank_shortcut(const Morphism& sigma) {
  return rational_rank(incidence_matrix(sigma)) == sigma.domain()->size()
             ? RankShortcut::Elementary
             : RankShortcut::Inconclusive;
}

DescentChain build_descent_chain(const MorphismSequence& seq, std::vector<int> flagged,
                                 int m, const ElementaryOptions& opts) {
  std::sort(flagged.begin(), flagged.end(), std::greater<int>());
  if (std::adjacent_find(flagged.begin(), flagged.end()) != flagged.end())
    throw std::invalid_argument("build_descent_chain: duplicate flagged level");
  if (!flagged.empty() && (flagged.front() >= m || flagged.back() < 0))
    throw std::invalid_argument("build_descent_chain: flagged levels must satisfy "
                                "0 <= n_K < ... < n_1 < m");

  DescentChain chain;
  chain.top_level = m;
  chain.flagged = flagged;

  Morphism alpha = identity_morphism(seq.alphabet_at(m));
  int upper = m;
  for (size_t k = 0; k < flagged.size(); ++k) {
    const int level = flagged[k];
    Morphism composed = compose(telescope(seq, level, upper), alpha);
    auto dec = find_decomposition(composed, opts);
    if (!dec) throw DecompositionNotFound(static_cast<int>(k) + 1);
    alpha = dec->alpha;
    upper = level;
    chain.steps.push_back(DescentStep{level, std::move(composed), std::move(*dec)});
  }
  return chain;
}

}  // namespace sadic
