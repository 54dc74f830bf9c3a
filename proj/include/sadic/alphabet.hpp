#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sadic {

/// A finite ordered alphabet of letter tokens. Tokens are non-empty strings
/// without whitespace; order is the order of construction and is used for
/// lexicographic comparisons everywhere else.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
      const std::string& tok = letters_[i];
      if (tok.empty()) throw std::invalid_argument("empty letter token");
      for (char c : tok)
        if (c == ' ' || c == '\t' || c == '\n' || c == ',')
          throw std::invalid_argument("letter token contains whitespace or comma: " + tok);
      if (!index_.emplace(tok, i).second)
        throw std::invalid_argument("duplicate letter token: " + tok);
    }
  }

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter(int i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const { return letters_; }

  bool contains(const std::string& tok) const { return index_.count(tok) != 0; }

  int index_of(const std::string& tok) const {
    auto it = index_.find(tok);
    if (it == index_.end()) throw std::invalid_argument("letter not in alphabet: " + tok);
    return it->second;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

/// Convenience: one single-char token per character of `chars`.
inline AlphabetPtr make_alphabet_chars(const std::string& chars) {
  std::vector<std::string> v;
  for (char c : chars) v.emplace_back(1, c);
  return make_alphabet(std::move(v));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace sadic
