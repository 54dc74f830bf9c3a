#include "sadic/morphism.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sadic {

using boost::multiprecision::cpp_int;

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_->size())
    throw std::invalid_argument("morphism needs one image per domain letter");
  for (const Word& w : images_)
    if (!same_alphabet(w.alphabet(), codomain_))
      throw std::invalid_argument("morphism image over wrong alphabet");
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (!same_alphabet(a.domain_, b.domain_) || !same_alphabet(a.codomain_, b.codomain_))
    return false;
  return a.images_ == b.images_;
}

Morphism identity_morphism(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (int32_t i = 0; i < alphabet->size(); ++i)
    images.emplace_back(alphabet, std::vector<int32_t>{i});
  return Morphism(alphabet, alphabet, std::move(images));
}

Word apply(const Morphism& sigma, const Word& z) {
  if (!same_alphabet(z.alphabet(), sigma.domain()))
    throw std::invalid_argument("apply: word not over the morphism domain");
  Word out(sigma.codomain(), {});
  for (int64_t i = 0; i < z.size(); ++i) out.append(sigma.image(z.at(i)));
  return out;
}

Morphism compose(const Morphism& sigma, const Morphism& tau) {
  if (!same_alphabet(sigma.domain(), tau.codomain()))
    throw std::invalid_argument("compose: domain of left must equal codomain of right");
  std::vector<Word> images;
  images.reserve(tau.domain()->size());
  for (int32_t a = 0; a < tau.domain()->size(); ++a)
    images.push_back(apply(sigma, tau.image(a)));
  return Morphism(tau.domain(), sigma.codomain(), std::move(images));
}

bool is_erasing(const Morphism& sigma) {
  for (const Word& w : sigma.images())
    if (w.empty()) return true;
  return false;
}

std::set<int32_t> productive_letters(const Morphism& sigma) {
  std::set<int32_t> out;
  for (int32_t a = 0; a < sigma.domain()->size(); ++a)
    if (!sigma.image(a).empty()) out.insert(a);
  return out;
}

IncidenceMatrix incidence_matrix(const Morphism& sigma) {
  IncidenceMatrix m;
  m.rows = sigma.codomain();
  m.cols = sigma.domain();
  m.entries.assign(m.rows->size(), std::vector<int64_t>(m.cols->size(), 0));
  for (int32_t a = 0; a < sigma.domain()->size(); ++a) {
    const Word& w = sigma.image(a);
    for (int64_t i = 0; i < w.size(); ++i) ++m.entries[w.at(i)][a];
  }
  return m;
}

int rational_rank(const IncidenceMatrix& m) {
  const int nr = m.rows->size();
  const int nc = m.cols->size();
  std::vector<std::vector<cpp_int>> a(nr, std::vector<cpp_int>(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) a[r][c] = m.entries[r][c];

  // Fraction-free Gaussian elimination (Bareiss); exact over the integers.
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int c = col + 1; c < nc; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (!same_alphabet(a.cols, b.rows))
    throw std::invalid_argument("matrix_product: dimension mismatch");
  IncidenceMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.entries.assign(a.rows->size(), std::vector<int64_t>(b.cols->size(), 0));
  for (int i = 0; i < a.rows->size(); ++i)
    for (int k = 0; k < a.cols->size(); ++k) {
      if (a.entries[i][k] == 0) continue;
      for (int j = 0; j < b.cols->size(); ++j)
        out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return out;
}

Tristate is_primitive_morphism(const Morphism& sigma, int horizon) {
  if (!same_alphabet(sigma.domain(), sigma.codomain()))
    throw std::invalid_argument("is_primitive_morphism: not an endomorphism");
  if (horizon < 1) throw std::invalid_argument("is_primitive_morphism: horizon < 1");
  const int n = sigma.domain()->size();

  // Boolean occurrence matrix and its powers.
  std::vector<std::vector<bool>> one(n, std::vector<bool>(n, false));
  for (int32_t a = 0; a < n; ++a) {
    const Word& w = sigma.image(a);
    for (int64_t i = 0; i < w.size(); ++i) one[w.at(i)][a] = true;
  }
  auto all_positive = [n](const std::vector<std::vector<bool>>& m) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!m[r][c]) return false;
    return true;
  };
  auto bool_mul = [n](const std::vector<std::vector<bool>>& x,
                      const std::vector<std::vector<bool>>& y) {
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k)
        if (x[r][k])
          for (int c = 0; c < n; ++c)
            if (y[k][c]) out[r][c] = true;
    return out;
  };

  auto power = one;
  for (int step = 1; step <= horizon; ++step) {
    if (all_positive(power)) return Tristate::Yes;
    if (step < horizon) power = bool_mul(one, power);
  }

  // Reachable-letter closure per letter: if it closes without covering the
  // alphabet, no power can be positive in that column.
  for (int32_t a = 0; a < n; ++a) {
    std::set<int32_t> reach;
    std::vector<int32_t> stack{a};
    std::set<int32_t> expanded;
    while (!stack.empty()) {
      int32_t x = stack.back();
      stack.pop_back();
      if (!expanded.insert(x).second) continue;
      const Word& w = sigma.image(x);
      for (int64_t i = 0; i < w.size(); ++i)
        if (reach.insert(w.at(i)).second) stack.push_back(w.at(i));
    }
    if (static_cast<int>(reach.size()) < n) return Tristate::No;
  }
  return Tristate::Unknown;
}

int64_t signed_image_length(const Morphism& sigma, const Epp& p, int64_t t) {
  int64_t sum = 0;
  if (t >= 0) {
    for (int64_t i = 0; i < t; ++i) sum += sigma.image(p.letter_at(i)).size();
    return sum;
  }
  for (int64_t i = t; i < 0; ++i) sum += sigma.image(p.letter_at(i)).size();
  return -sum;
}

std::optional<Epp> apply_epp(const Morphism& sigma, const Epp& p) {
  if (!same_alphabet(p.alphabet(), sigma.domain()))
    throw std::invalid_argument("apply_epp: point not over the morphism domain");
  Word u = apply(sigma, p.left);
  Word v = apply(sigma, p.right);
  if (u.empty() || v.empty()) return std::nullopt;
  Word w = apply(sigma, p.center);
  const int64_t t = signed_image_length(sigma, p, p.origin);
  return epp_normalize(Epp(std::move(u), std::move(w), std::move(v), t));
}

}  // namespace sadic
