#include "sadic/word.hpp"

#include <algorithm>
#include <sstream>

namespace sadic {

Word::Word(AlphabetPtr alphabet, std::vector<int32_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
  for (int32_t s : symbols_)
    if (s < 0 || s >= alphabet_->size())
      throw std::invalid_argument("letter index out of range");
}

Word Word::parse(const AlphabetPtr& alphabet, const std::string& tokens) {
  std::vector<int32_t> syms;
  std::istringstream in(tokens);
  std::string tok;
  while (in >> tok) syms.push_back(alphabet->index_of(tok));
  return Word(alphabet, std::move(syms));
}

Word Word::sub(int64_t from, int64_t len) const {
  if (from < 0 || len < 0 || from + len > size())
    throw std::out_of_range("word subrange out of range");
  return Word(alphabet_, std::vector<int32_t>(symbols_.begin() + from,
                                              symbols_.begin() + from + len));
}

bool Word::starts_with(const Word& w) const {
  if (w.size() > size()) return false;
  return std::equal(w.symbols_.begin(), w.symbols_.end(), symbols_.begin());
}

bool Word::ends_with(const Word& w) const {
  if (w.size() > size()) return false;
  return std::equal(w.symbols_.rbegin(), w.symbols_.rend(), symbols_.rbegin());
}

void Word::append(const Word& w) {
  if (!same_alphabet(alphabet_, w.alphabet_))
    throw std::invalid_argument("appending word over a different alphabet");
  symbols_.insert(symbols_.end(), w.symbols_.begin(), w.symbols_.end());
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_->letter(symbols_[i]);
  }
  return out;
}

std::string Word::display() const {
  bool single = true;
  for (const auto& tok : alphabet_->letters())
    if (tok.size() != 1) single = false;
  std::string out;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (!single && i) out += '.';
    out += alphabet_->letter(symbols_[i]);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet_, b.alphabet_))
    throw std::invalid_argument("comparing words over different alphabets");
  return a.symbols_ == b.symbols_;
}

bool operator<(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet_, b.alphabet_))
    throw std::invalid_argument("comparing words over different alphabets");
  return std::lexicographical_compare(a.symbols_.begin(), a.symbols_.end(),
                                      b.symbols_.begin(), b.symbols_.end());
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word repeat(const Word& w, int64_t times) {
  Word out(w.alphabet(), {});
  for (int64_t i = 0; i < times; ++i) out.append(w);
  return out;
}

int64_t primitive_root_length(const Word& w) {
  const int64_t n = w.size();
  if (n == 0) return 0;
  for (int64_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int64_t i = d; i < n && ok; ++i)
      if (w.at(i) != w.at(i - d)) ok = false;
    if (ok) return d;
  }
  return n;
}

Word primitive_root(const Word& w) { return w.prefix(primitive_root_length(w)); }

}  // namespace sadic
