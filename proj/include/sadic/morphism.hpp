#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sadic/epp.hpp"
#include "sadic/word.hpp"

namespace sadic {

/// A monoid morphism A* -> B*, given by one image word per domain letter.
class Morphism {
 public:
  Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  const Word& image(int32_t letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

Morphism identity_morphism(const AlphabetPtr& alphabet);

Word apply(const Morphism& sigma, const Word& z);
Morphism compose(const Morphism& sigma, const Morphism& tau);  // sigma o tau

bool is_erasing(const Morphism& sigma);
std::set<int32_t> productive_letters(const Morphism& sigma);

/// Occurrence counts: rows indexed by codomain letters, columns by domain
/// letters; entry(b, a) = number of occurrences of b in sigma(a).
struct IncidenceMatrix {
  AlphabetPtr rows;  // codomain
  AlphabetPtr cols;  // domain
  std::vector<std::vector<int64_t>> entries;  // entries[row][col]

  int64_t at(int row, int col) const { return entries.at(row).at(col); }
};

IncidenceMatrix incidence_matrix(const Morphism& sigma);

/// Exact rank over the rationals (fraction-free elimination, big integers).
int rational_rank(const IncidenceMatrix& m);

IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b);

enum class Tristate { Yes, No, Unknown };

/// Primitivity of an endomorphism, checked up to `horizon` powers of the
/// incidence matrix. No is returned only when provably never positive
/// (a letter's reachable-letter set closes without covering the alphabet).
Tristate is_primitive_morphism(const Morphism& sigma, int horizon);

/// Image of an eventually periodic point. Empty when a tail erases entirely
/// (then the image point is undefined). Alignment: the image of the letter at
/// index 0 starts at image index 0; the result is returned in normal form.
std::optional<Epp> apply_epp(const Morphism& sigma, const Epp& p);

/// Signed length of sigma(p restricted to [0, t)): sum of image lengths for
/// t > 0, negated sum over [t, 0) for t < 0. This is the image-index where
/// the image of the letter p_t starts.
int64_t signed_image_length(const Morphism& sigma, const Epp& p, int64_t t);

}  // namespace sadic
