#include "sadic/sequence.hpp"

#include <map>

namespace sadic {

MorphismSequence::MorphismSequence(std::vector<Morphism> preperiod,
                                   std::vector<Morphism> cycle, bool truncated_family)
    : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)),
      truncated_family_(truncated_family) {
  if (cycle_.empty()) throw std::invalid_argument("sequence cycle must be non-empty");
  auto check_link = [](const Morphism& outer, const Morphism& inner) {
    if (!same_alphabet(outer.domain(), inner.codomain()))
      throw std::invalid_argument("sequence levels do not chain: domain of sigma_n "
                                  "must equal codomain of sigma_{n+1}");
  };
  for (size_t i = 0; i + 1 < preperiod_.size(); ++i)
    check_link(preperiod_[i], preperiod_[i + 1]);
  if (!preperiod_.empty()) check_link(preperiod_.back(), cycle_.front());
  for (size_t i = 0; i + 1 < cycle_.size(); ++i) check_link(cycle_[i], cycle_[i + 1]);
  check_link(cycle_.back(), cycle_.front());
}

const Morphism& MorphismSequence::morphism_at(int n) const {
  if (n < 0) throw std::invalid_argument("negative level");
  if (n < preperiod_size()) return preperiod_[n];
  return cycle_[(n - preperiod_size()) % cycle_size()];
}

const AlphabetPtr& MorphismSequence::alphabet_at(int n) const {
  return morphism_at(n).codomain();
}

Morphism telescope(const MorphismSequence& seq, int n, int m) {
  if (n < 0 || n > m) throw std::invalid_argument("telescope: need 0 <= n <= m");
  if (n == m) return identity_morphism(seq.alphabet_at(n));
  Morphism result = seq.morphism_at(n);
  for (int i = n + 1; i < m; ++i) result = compose(result, seq.morphism_at(i));
  return result;
}

int alphabet_rank(const MorphismSequence& seq) {
  int r = seq.cycle().front().codomain()->size();
  for (const Morphism& s : seq.cycle()) r = std::min(r, s.codomain()->size());
  return r;
}

namespace {

// Boolean occurrence matrix of sigma: occurs[b][a] = b occurs in sigma(a).
std::vector<std::vector<bool>> occurrence_matrix(const Morphism& sigma) {
  std::vector<std::vector<bool>> m(sigma.codomain()->size(),
                                   std::vector<bool>(sigma.domain()->size(), false));
  for (int32_t a = 0; a < sigma.domain()->size(); ++a) {
    const Word& w = sigma.image(a);
    for (int64_t i = 0; i < w.size(); ++i) m[w.at(i)][a] = true;
  }
  return m;
}

bool all_true(const std::vector<std::vector<bool>>& m) {
  for (const auto& row : m)
    for (bool b : row)
      if (!b) return false;
  return true;
}

}  // namespace

Tristate is_primitive_sequence(const MorphismSequence& seq, int n, int horizon) {
  if (horizon < n + 1)
    throw std::invalid_argument("is_primitive_sequence: horizon must be > n");
  // occ[b][a]: b in A_n occurs in sigma_[n,m)(a), a in A_m. Extend one level
  // at a time: occ'[b][a] = OR over c in sigma_m(a) of occ[b][c].
  std::vector<std::vector<bool>> occ = occurrence_matrix(seq.morphism_at(n));
  std::map<std::pair<int, std::vector<std::vector<bool>>>, int> seen;
  for (int m = n + 1; m <= horizon; ++m) {
    // Loop invariant: occ is the occurrence matrix of sigma_[n,m).
    if (all_true(occ)) return Tristate::Yes;
    if (m >= seq.preperiod_size()) {
      int phase = (m - seq.preperiod_size()) % seq.cycle_size();
      if (!seen.emplace(std::make_pair(phase, occ), m).second) return Tristate::No;
    }
    if (m == horizon) break;
    const Morphism& next = seq.morphism_at(m);
    std::vector<std::vector<bool>> grown(
        occ.size(), std::vector<bool>(next.domain()->size(), false));
    for (int32_t a = 0; a < next.domain()->size(); ++a) {
      const Word& w = next.image(a);
      for (int64_t i = 0; i < w.size(); ++i) {
        const int32_t c = w.at(i);
        for (size_t b = 0; b < occ.size(); ++b)
          if (occ[b][c]) grown[b][a] = true;
      }
    }
    occ = std::move(grown);
  }
  return Tristate::Unknown;
}

MorphismSequence constant_sequence(const Morphism& sigma) {
  if (!same_alphabet(sigma.domain(), sigma.codomain()))
    throw std::invalid_argument("constant_sequence: not an endomorphism");
  return MorphismSequence({}, {sigma});
}

}  // namespace sadic
