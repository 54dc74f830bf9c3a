#pragma once

#include <set>

#include "sadic/word.hpp"

namespace sadic {

/// A length-bounded, factor-closed set of non-empty words. Inserting a word
/// inserts all of its factors of length <= max_len, so the closure invariant
/// holds by construction.
class FactorBag {
 public:
  FactorBag() : max_len_(0) {}
  explicit FactorBag(int64_t max_len) : max_len_(max_len) {
    if (max_len < 1) throw std::invalid_argument("FactorBag max_len must be >= 1");
  }

  int64_t max_len() const { return max_len_; }
  const std::set<Word>& words() const { return words_; }
  int64_t size() const { return static_cast<int64_t>(words_.size()); }

  bool contains(const Word& z) const { return words_.count(z) != 0; }

  /// Inserts every non-empty factor of z of length <= max_len.
  /// Returns true iff anything new was added.
  bool insert_factors(const Word& z) {
    bool grew = false;
    const int64_t n = z.size();
    for (int64_t i = 0; i < n; ++i) {
      // Extend one letter at a time; skip starts whose longest window is
      // already known (cheap dedup for periodic tails).
      for (int64_t len = 1; len <= max_len_ && i + len <= n; ++len)
        grew |= words_.insert(z.sub(i, len)).second;
    }
    return grew;
  }

  bool insert_all(const FactorBag& other) {
    bool grew = false;
    for (const Word& w : other.words_)
      if (w.size() <= max_len_) grew |= words_.insert(w).second;
    return grew;
  }

  /// All stored factors of z (length <= max_len) present? Used as the sound
  /// oracle filter for words longer than max_len.
  bool all_factors_present(const Word& z) const {
    const int64_t n = z.size();
    if (n <= max_len_) return contains(z) || z.empty();
    for (int64_t i = 0; i + max_len_ <= n; ++i)
      if (!contains(z.sub(i, max_len_))) return false;
    return true;
  }

  friend bool operator==(const FactorBag& a, const FactorBag& b) {
    return a.max_len_ == b.max_len_ && a.words_ == b.words_;
  }

 private:
  int64_t max_len_;
  std::set<Word> words_;
};

}  // namespace sadic
