#pragma once

#include "sadic/factor_bag.hpp"
#include "sadic/word.hpp"

namespace sadic {

/// An eventually periodic bi-infinite point  ... u u [w] v v ...  with the
/// center w occupying indices [origin, origin + |w|), copies of u tiling
/// leftwards from origin and copies of v tiling rightwards from origin + |w|.
/// u and v are non-empty; w may be empty.
struct Epp {
  Word left;    // u
  Word center;  // w
  Word right;   // v
  int64_t origin = 0;  // t

  Epp() = default;
  Epp(Word u, Word w, Word v, int64_t t);

  const AlphabetPtr& alphabet() const { return left.alphabet(); }

  /// Letter at an arbitrary index, per the tiling above.
  int32_t letter_at(int64_t i) const;

  /// The factor at indices [from, from + len).
  Word window(int64_t from, int64_t len) const;
};

/// Purely periodic point z^inf with index 0 holding the first letter of z.
Epp periodic_point(const Word& z);

/// Normal form: primitive tail periods, center absorbing no aligned copy of
/// either tail. Idempotent; denotes the same point.
Epp epp_normalize(const Epp& p);

/// T^k(p): same words, origin shifted by -k.
Epp epp_shift(const Epp& p, int64_t k);

/// Exact equality as functions Z -> A, decided on the window [-N, N) with
/// N = |w_p| + |w_q| + |t_p| + |t_q| + 2 lcm(|u_p|,|u_q|) + 2 lcm(|v_p|,|v_q|).
bool epp_equal(const Epp& p, const Epp& q);

/// The window bound N above (exposed for the brute-force cross-check tests).
int64_t epp_equality_window(const Epp& p, const Epp& q);

/// True iff T^n(p) = p for some n >= 1. Decided after normalization by
/// testing the shift by the (primitive) left period.
bool epp_is_periodic(const Epp& p);

/// All factors of p of length <= len.
FactorBag epp_factors(const Epp& p, int64_t len);

/// All non-empty factors of a finite word, length <= len.
FactorBag word_factors(const Word& z, int64_t len);

/// The two tail limit points of the orbit closure of p: (root of u)^inf
/// and (root of v)^inf.
Epp left_limit_point(const Epp& p);
Epp right_limit_point(const Epp& p);

/// True iff p = T^k(q) for some integer k (exact orbit membership).
/// Outputs the witness shift when found.
bool epp_in_orbit(const Epp& p, const Epp& q, int64_t* shift_out = nullptr);

}  // namespace sadic
