#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sadic/alphabet.hpp"

namespace sadic {

/// A finite word over an alphabet, stored as letter indices. The empty word
/// is allowed. Comparison is lexicographic in alphabet order, with a proper
/// prefix ordered before its extensions.
class Word {
 public:
  Word() = default;
  Word(AlphabetPtr alphabet, std::vector<int32_t> symbols);

  /// Parses space-separated tokens ("a b a"); empty string gives epsilon.
  static Word parse(const AlphabetPtr& alphabet, const std::string& tokens);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int64_t size() const { return static_cast<int64_t>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  int32_t at(int64_t i) const { return symbols_.at(static_cast<size_t>(i)); }
  const std::vector<int32_t>& symbols() const { return symbols_; }

  const std::string& token_at(int64_t i) const { return alphabet_->letter(at(i)); }

  Word sub(int64_t from, int64_t len) const;
  Word prefix(int64_t len) const { return sub(0, len); }
  Word suffix(int64_t len) const { return sub(size() - len, len); }

  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  void append(const Word& w);
  void push_back(int32_t sym) { symbols_.push_back(sym); }
  void pop_back() { symbols_.pop_back(); }

  /// Letters joined with spaces ("a b a"); "" for epsilon.
  std::string str() const;
  /// Compact display: concatenated when all alphabet tokens are single chars,
  /// dot-joined otherwise.
  std::string display() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<int32_t> symbols_;
};

Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, int64_t times);

/// Length of the shortest word z with w = z^k (the primitive root).
int64_t primitive_root_length(const Word& w);
Word primitive_root(const Word& w);

}  // namespace sadic
