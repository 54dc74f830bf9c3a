#include "sadic/epp.hpp"

#include <numeric>

namespace sadic {

namespace {

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

Epp::Epp(Word u, Word w, Word v, int64_t t)
    : left(std::move(u)), center(std::move(w)), right(std::move(v)), origin(t) {
  if (left.empty() || right.empty())
    throw std::invalid_argument("EPP tail periods must be non-empty");
  if (!same_alphabet(left.alphabet(), center.alphabet()) ||
      !same_alphabet(left.alphabet(), right.alphabet()))
    throw std::invalid_argument("EPP words must share one alphabet");
}

int32_t Epp::letter_at(int64_t i) const {
  const int64_t t = origin;
  if (i >= t && i < t + center.size()) return center.at(i - t);
  if (i < t) {
    const int64_t m = left.size();
    int64_t r = (i - t) % m;
    if (r < 0) r += m;
    return left.at(r);
  }
  const int64_t m = right.size();
  return right.at((i - t - center.size()) % m);
}

Word Epp::window(int64_t from, int64_t len) const {
  Word out(alphabet(), {});
  for (int64_t i = 0; i < len; ++i) out.push_back(letter_at(from + i));
  return out;
}

Epp periodic_point(const Word& z) {
  if (z.empty()) throw std::invalid_argument("periodic point needs a non-empty word");
  return Epp(z, Word(z.alphabet(), {}), z, 0);
}

Epp epp_normalize(const Epp& p) {
  Word u = primitive_root(p.left);
  Word v = primitive_root(p.right);
  Word w = p.center;
  int64_t t = p.origin;
  for (;;) {
    if (w.size() >= u.size() && w.starts_with(u)) {
      w = w.sub(u.size(), w.size() - u.size());
      t += u.size();
      continue;
    }
    if (w.size() >= v.size() && w.ends_with(v)) {
      w = w.sub(0, w.size() - v.size());
      continue;
    }
    break;
  }
  return Epp(std::move(u), std::move(w), std::move(v), t);
}

Epp epp_shift(const Epp& p, int64_t k) {
  return Epp(p.left, p.center, p.right, p.origin - k);
}

int64_t epp_equality_window(const Epp& p, const Epp& q) {
  int64_t n = p.center.size() + q.center.size();
  n += std::llabs(p.origin) + std::llabs(q.origin);
  n += 2 * lcm64(p.left.size(), q.left.size());
  n += 2 * lcm64(p.right.size(), q.right.size());
  return n;
}

bool epp_equal(const Epp& p, const Epp& q) {
  if (!same_alphabet(p.alphabet(), q.alphabet()))
    throw std::invalid_argument("epp_equal: alphabet mismatch");
  const int64_t n = epp_equality_window(p, q);
  for (int64_t i = -n; i < n; ++i)
    if (p.letter_at(i) != q.letter_at(i)) return false;
  return true;
}

bool epp_is_periodic(const Epp& p) {
  const Epp n = epp_normalize(p);
  return epp_equal(epp_shift(n, n.left.size()), n);
}

FactorBag word_factors(const Word& z, int64_t len) {
  FactorBag bag(len);
  bag.insert_factors(z);
  return bag;
}

FactorBag epp_factors(const Epp& p, int64_t len) {
  if (len < 1) throw std::invalid_argument("epp_factors: len must be >= 1");
  // The window covering the center plus len + |tail| letters each side sees
  // every factor of length <= len.
  const int64_t from = p.origin - len - p.left.size();
  const int64_t to = p.origin + p.center.size() + len + p.right.size();
  return word_factors(p.window(from, to - from), len);
}

Epp left_limit_point(const Epp& p) { return periodic_point(primitive_root(p.left)); }
Epp right_limit_point(const Epp& p) { return periodic_point(primitive_root(p.right)); }

bool epp_in_orbit(const Epp& p, const Epp& q, int64_t* shift_out) {
  if (!same_alphabet(p.alphabet(), q.alphabet()))
    throw std::invalid_argument("epp_in_orbit: alphabet mismatch");
  const Epp pn = epp_normalize(p);
  const Epp qn = epp_normalize(q);
  // If p = T^k q for an aperiodic p, the Fine-Wilf overlap argument bounds k
  // by the centers, origins and the lcms of all tail-period pairs; periodic
  // matches are found at small k anyway.
  int64_t bound = pn.center.size() + qn.center.size() + std::llabs(pn.origin) +
                  std::llabs(qn.origin);
  bound += 2 * lcm64(pn.left.size(), qn.left.size());
  bound += 2 * lcm64(pn.right.size(), qn.right.size());
  bound += 2 * lcm64(pn.left.size(), qn.right.size());
  bound += 2 * lcm64(pn.right.size(), qn.left.size());
  for (int64_t k = -bound; k <= bound; ++k) {
    if (epp_equal(pn, epp_shift(qn, k))) {
      if (shift_out) *shift_out = k;
      return true;
    }
  }
  return false;
}

}  // namespace sadic
