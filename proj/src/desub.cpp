#include "sadic/desub.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sadic {

namespace {

// All words over the erased letters of sigma, lengths 0..bound, by length
// then lexicographically. Always contains the empty word.
std::vector<Word> erased_runs(const Morphism& sigma, int bound) {
  std::vector<int32_t> erased;
  for (int32_t a = 0; a < sigma.domain()->size(); ++a)
    if (sigma.image(a).empty()) erased.push_back(a);
  std::vector<Word> out{Word(sigma.domain(), {})};
  if (erased.empty()) return out;
  size_t first = 0;
  for (int len = 1; len <= bound; ++len) {
    size_t last = out.size();
    for (size_t i = first; i < last; ++i)
      for (int32_t e : erased) {
        Word w = out[i];
        w.push_back(e);
        out.push_back(std::move(w));
      }
    first = last;
  }
  return out;
}

bool image_matches(const Word& img, int64_t img_from, const Word& y, int64_t y_from,
                   int64_t count) {
  for (int64_t i = 0; i < count; ++i)
    if (img.at(img_from + i) != y.at(y_from + i)) return false;
  return true;
}

}  // namespace

std::vector<RepFragment> enumerate_fragments(const Word& y_window, const Morphism& sigma,
                                             const FactorSet* oracle,
                                             const FragmentOptions& opts) {
  if (y_window.empty())
    throw std::invalid_argument("enumerate_fragments: empty window");
  if (!same_alphabet(y_window.alphabet(), sigma.codomain()))
    throw std::invalid_argument("enumerate_fragments: window not over the codomain");

  const AlphabetPtr& dom = sigma.domain();
  std::vector<int32_t> productive;
  for (int32_t a = 0; a < dom->size(); ++a)
    if (!sigma.image(a).empty()) productive.push_back(a);
  const std::vector<Word> runs = erased_runs(sigma, opts.erased_run);

  // Sound incremental oracle filter: on append, only the newest window of
  // bag-length needs checking; factor closure covers the rest.
  auto grow_ok = [&](const Word& w) {
    if (!oracle) return true;
    if (w.size() <= oracle->max_len) return oracle->bag.contains(w);
    return oracle->bag.contains(w.suffix(oracle->max_len));
  };
  auto full_ok = [&](const Word& w) { return !oracle || passes_filter(*oracle, w); };

  std::vector<RepFragment> out;
  const int64_t n = y_window.size();
  Word current(dom, {});
  int64_t current_k = 0;

  auto emit = [&](const Word& w) {
    out.push_back(RepFragment{w, current_k, {current_k, current_k + n}});
    if (static_cast<int64_t>(out.size()) > opts.max_fragments)
      throw ResourceExhausted("enumerate_fragments: fragment budget exceeded");
  };

  std::function<void(int64_t)> extend = [&](int64_t pos) {
    if (pos == n) {
      for (const Word& r : runs) {
        Word w = concat(current, r);
        if (full_ok(w)) emit(w);
      }
      return;
    }
    for (int32_t b : productive) {
      const Word& img = sigma.image(b);
      const int64_t remain = n - pos;
      const int64_t covered = std::min<int64_t>(img.size(), remain);
      if (!image_matches(img, 0, y_window, pos, covered)) continue;
      current.push_back(b);
      if (grow_ok(current)) extend(pos + covered);
      current.pop_back();
    }
  };

  for (const Word& lead : runs) {
    for (int32_t a : productive) {
      const Word& img = sigma.image(a);
      for (int64_t k = 0; k < img.size(); ++k) {
        const int64_t covered = std::min<int64_t>(img.size() - k, n);
        if (!image_matches(img, k, y_window, 0, covered)) continue;
        current = lead;
        current.push_back(a);
        if (!full_ok(current)) continue;
        current_k = k;
        extend(covered);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerifyResult verify_certificate(const NonRecognizabilityCertificate& c,
                                const FactorSet* lang_x, const FactorSet* lang_y,
                                int64_t radius, bool aperiodic_mode) {
  (void)lang_y;  // the definition constrains the represented points only
  const Morphism& sigma = c.sigma;
  if (!same_alphabet(c.r1.x.alphabet(), sigma.domain()) ||
      !same_alphabet(c.r2.x.alphabet(), sigma.domain()) ||
      !same_alphabet(c.image.alphabet(), sigma.codomain()))
    throw std::invalid_argument("verify_certificate: alphabet mismatch");

  for (const CenteredRep* r : {&c.r1, &c.r2}) {
    const Word& img0 = sigma.image(r->x.letter_at(0));
    if (r->k < 0 || r->k >= img0.size())
      return {false, "representation not centered"};
  }
  for (const CenteredRep* r : {&c.r1, &c.r2}) {
    auto img = apply_epp(sigma, r->x);
    if (!img) return {false, "image undefined"};
    if (!epp_equal(epp_shift(*img, r->k), c.image))
      return {false, "image mismatch"};
  }
  if (c.r1.k == c.r2.k && epp_equal(c.r1.x, c.r2.x)) return {false, kReasonRepsEqual};
  if (aperiodic_mode && epp_is_periodic(c.image)) return {false, kReasonImagePeriodic};
  if (lang_x) {
    if (radius > lang_x->max_len)
      return {false, kReasonMembership, "oracle shorter than the radius"};
    int side = 0;
    for (const CenteredRep* r : {&c.r1, &c.r2}) {
      ++side;
      const FactorBag factors = epp_factors(r->x, radius);
      for (const Word& w : factors.words())
        if (member(*lang_x, w) == Membership::NotSeen)
          return {false, kReasonMembership,
                  "representation " + std::to_string(side) + ", factor " + w.str()};
    }
  }
  return {true, "", ""};
}

CenteredRep recenter(const Morphism& sigma, const Epp& x, int64_t s) {
  // Find the letter index c whose image covers position s of sigma(x):
  // P_c <= s < P_{c+1} with P the signed image-length prefix sums. The walk
  // is bounded: past the center, a whole tail period must contribute at
  // least one letter, or the image point does not exist at all.
  const int64_t guard = x.center.size() + std::llabs(x.origin) +
                        (std::llabs(s) + 2) * (x.left.size() + x.right.size() + 1) + 8;
  int64_t c = 0;
  int64_t p = 0;
  if (s >= 0) {
    for (;;) {
      if (c > guard)
        throw std::invalid_argument("recenter: the right tail of x erases entirely");
      const int64_t len = sigma.image(x.letter_at(c)).size();
      if (len > 0 && s < p + len) break;
      p += len;
      ++c;
    }
  } else {
    while (p > s) {
      if (-c > guard)
        throw std::invalid_argument("recenter: the left tail of x erases entirely");
      --c;
      p -= sigma.image(x.letter_at(c)).size();
    }
  }
  return CenteredRep{epp_shift(x, c), s - p};
}

std::optional<CenteredRep> find_representation(const Morphism& sigma, const Epp& x,
                                               const Epp& y) {
  auto img = apply_epp(sigma, x);
  if (!img) return std::nullopt;
  int64_t d = 0;
  if (!epp_in_orbit(y, *img, &d)) return std::nullopt;
  return recenter(sigma, x, d);
}

namespace {

std::string epp_key(const Epp& p) {
  std::ostringstream os;
  os << p.left.str() << '|' << p.center.str() << '|' << p.right.str() << '|' << p.origin;
  return os.str();
}

// Coarse equal-point fingerprint: equal points agree on any fixed window and
// have equal primitive tail period lengths. Buckets are re-checked exactly.
std::string epp_fingerprint(const Epp& p) {
  std::ostringstream os;
  os << p.left.size() << '|' << p.right.size() << '|' << p.window(-32, 64).str();
  return os.str();
}

struct Candidate {
  Epp x;  // normalized
  Epp y;  // normalized T^s(sigma(x))
  int64_t s = 0;
};

// What a fragment claims that its window can actually verify: the piece
// boundaries strictly inside the window and the letters of pieces lying
// fully inside it. Fragments differing only in partially visible boundary
// pieces (or in the window-invisible offset into the first image) are
// shadows of the same local parse and witness nothing.
struct FragmentCore {
  std::vector<int64_t> cuts;
  std::vector<std::pair<int64_t, int32_t>> visible;

  bool operator<(const FragmentCore& o) const {
    if (cuts != o.cuts) return cuts < o.cuts;
    return visible < o.visible;
  }
  bool operator==(const FragmentCore& o) const {
    return cuts == o.cuts && visible == o.visible;
  }
};

FragmentCore core_of(const Morphism& sigma, const RepFragment& frag, int64_t window_len) {
  FragmentCore core;
  int64_t pos = -frag.k;
  for (int64_t i = 0; i < frag.window.size(); ++i) {
    const int64_t len = sigma.image(frag.window.at(i)).size();
    if (len == 0) continue;  // erased letters are invisible to the window
    if (pos > 0 && pos < window_len) core.cuts.push_back(pos);
    if (pos > 0 && pos + len < window_len)
      core.visible.emplace_back(pos, frag.window.at(i));
    pos += len;
  }
  return core;
}

Word strip_erased(const Morphism& sigma, const Word& w) {
  Word out(w.alphabet(), {});
  for (int64_t i = 0; i < w.size(); ++i)
    if (!sigma.image(w.at(i)).empty()) out.push_back(w.at(i));
  return out;
}

// Periodic-closure candidates of a fragment: extend the fragment window to
// the eventually periodic points whose tails repeat a prefix/suffix of it.
std::vector<Candidate> closure_candidates(const Morphism& sigma, const RepFragment& frag) {
  std::vector<Candidate> out;
  std::set<std::string> seen;
  const Word& w = frag.window;
  for (int64_t ul = 1; ul <= w.size(); ++ul) {
    const Word u = w.prefix(ul);
    if (apply(sigma, u).empty()) continue;
    for (int64_t vl = 1; vl <= w.size(); ++vl) {
      const Word v = w.suffix(vl);
      if (apply(sigma, v).empty()) continue;
      Epp x = epp_normalize(Epp(u, w, v, 0));
      if (!seen.insert(epp_key(x)).second) continue;
      auto img = apply_epp(sigma, x);
      if (!img) continue;
      out.push_back(Candidate{std::move(x), epp_normalize(epp_shift(*img, frag.k)), frag.k});
    }
  }
  return out;
}

// Enumerates all words of the given length over the alphabet, calling fn for
// each, in lexicographic order.
void for_each_word(const AlphabetPtr& alphabet, int64_t length,
                   const std::function<void(const Word&)>& fn) {
  Word w(alphabet, {});
  std::function<void()> rec = [&]() {
    if (w.size() == length) {
      fn(w);
      return;
    }
    for (int32_t a = 0; a < alphabet->size(); ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

// --- synchronized pair-parse search over the full shift (non-erasing) ---

struct ParseStates {
  // state = position inside a letter image: (letter, pos), pos < |image|
  std::vector<int32_t> letter;
  std::vector<int64_t> pos;
  std::vector<int32_t> emit;          // emitted codomain letter
  std::vector<std::vector<int>> next; // successor states
  std::vector<int> starts;            // all states (any (a, k)) are starts

  explicit ParseStates(const Morphism& sigma) {
    const int n = sigma.domain()->size();
    std::vector<std::vector<int>> id(n);
    for (int32_t a = 0; a < n; ++a) {
      const Word& img = sigma.image(a);
      id[a].resize(img.size());
      for (int64_t p = 0; p < img.size(); ++p) {
        id[a][p] = static_cast<int>(letter.size());
        letter.push_back(a);
        pos.push_back(p);
        emit.push_back(img.at(p));
      }
    }
    std::vector<int> initials;
    for (int32_t a = 0; a < n; ++a)
      if (!sigma.image(a).empty()) initials.push_back(id[a][0]);
    next.resize(letter.size());
    for (size_t s = 0; s < letter.size(); ++s) {
      const Word& img = sigma.image(letter[s]);
      if (pos[s] + 1 < img.size())
        next[s] = {id[letter[s]][pos[s] + 1]};
      else
        next[s] = initials;
      starts.push_back(static_cast<int>(s));
    }
  }
};

// Pair of synchronized parses. `real` is set once the two parses provably
// have different cores: an interior cut one side lacks, or letters differing
// on a piece lying fully inside the window. `pending` tracks a letter
// difference whose pieces have not closed yet.
struct PairNode {
  int s1, s2;
  bool real, pending;
  bool operator<(const PairNode& o) const {
    if (s1 != o.s1) return s1 < o.s1;
    if (s2 != o.s2) return s2 < o.s2;
    if (real != o.real) return real < o.real;
    return pending < o.pending;
  }
};

// Finds up to `max_texts` distinct windows of the given length admitting two
// fragments with distinct cores, by BFS over synchronized parse pairs.
std::vector<Word> ambiguous_windows_by_pair_search(const Morphism& sigma, int64_t length,
                                                   int64_t state_budget,
                                                   int64_t max_texts, bool* truncated) {
  const ParseStates ps(sigma);
  using Layer = std::map<PairNode, std::vector<PairNode>>;  // node -> predecessors
  std::vector<Layer> layers(length);

  int64_t states_used = 0;
  auto bump = [&]() {
    if (++states_used > state_budget)
      throw ResourceExhausted("pair-parse search: state budget exceeded");
  };

  for (int s1 : ps.starts)
    for (int s2 : ps.starts)
      if (ps.emit[s1] == ps.emit[s2]) {
        layers[0].emplace(PairNode{s1, s2, false, false}, std::vector<PairNode>{});
        bump();
      }
  auto at_end = [&](int s) {
    return ps.pos[s] + 1 == sigma.image(ps.letter[s]).size();
  };
  for (int64_t t = 1; t < length; ++t) {
    for (const auto& [node, preds] : layers[t - 1]) {
      (void)preds;
      const bool end1 = at_end(node.s1);
      const bool end2 = at_end(node.s2);
      for (int u1 : ps.next[node.s1])
        for (int u2 : ps.next[node.s2]) {
          if (ps.emit[u1] != ps.emit[u2]) continue;
          PairNode nn{u1, u2, node.real, node.pending};
          if (end1 != end2) {  // interior cut on one side only
            nn.real = true;
            nn.pending = false;
          } else if (end1 && end2) {  // synchronized interior cut at t
            if (nn.pending) nn.real = true;
            nn.pending = ps.letter[u1] != ps.letter[u2];
          }
          auto [it, fresh] = layers[t].emplace(nn, std::vector<PairNode>{});
          if (fresh) bump();
          it->second.push_back(node);
        }
    }
  }

  // Reconstruct distinct ambiguous texts from final nodes with real
  // divergence (an unclosed letter difference is not window-visible).
  std::set<std::string> seen;
  std::vector<Word> texts;
  std::vector<int32_t> emitted(length);
  std::function<void(int64_t, const PairNode&)> back = [&](int64_t t, const PairNode& node) {
    if (static_cast<int64_t>(texts.size()) >= max_texts) {
      *truncated = true;
      return;
    }
    emitted[t] = ps.emit[node.s1];
    if (t == 0) {
      Word w(sigma.codomain(), std::vector<int32_t>(emitted.begin(), emitted.end()));
      if (seen.insert(w.str()).second) texts.push_back(std::move(w));
      return;
    }
    for (const PairNode& prev : layers[t].at(node))
      back(t - 1, prev);
  };
  for (const auto& [node, preds] : layers[length - 1]) {
    (void)preds;
    if (node.real) back(length - 1, node);
  }
  std::sort(texts.begin(), texts.end());
  return texts;
}

}  // namespace

Verdict audit_recognizability(const Morphism& sigma, const FactorSet* lang_x,
                              const FactorSet* lang_y, int64_t radius,
                              bool aperiodic_mode, const AuditOptions& opts) {
  if (radius < 1) throw std::invalid_argument("audit_recognizability: radius must be >= 1");
  const int64_t window_len = 2 * radius;
  if (lang_y && lang_y->max_len < window_len)
    throw std::invalid_argument("audit_recognizability: lang_y max_len below 2*radius");

  Verdict verdict;
  verdict.radius = radius;

  // Certification attempt for one ambiguous window; returns true when a
  // certificate was accepted. A "group" is one unit of ambiguity to explain:
  // all fragment pairs across two distinct cores, or one erased-variant
  // pair. A group is explained when some cross pair matches on a point the
  // verifier rejects only for periodicity; it stays open (and the window
  // becomes evidence) when nothing matches or a matching aperiodic witness
  // is rejected, typically on membership.
  auto process_window = [&](const Word& window,
                            const std::vector<RepFragment>& frags,
                            const std::vector<std::vector<std::pair<size_t, size_t>>>&
                                groups) -> bool {
    std::vector<std::vector<Candidate>> cands(frags.size());
    std::vector<bool> have(frags.size(), false);
    auto candidates_of = [&](size_t i) -> const std::vector<Candidate>& {
      if (!have[i]) {
        cands[i] = closure_candidates(sigma, frags[i]);
        have[i] = true;
      }
      return cands[i];
    };

    bool window_open = false;
    int64_t budget = opts.max_candidate_pairs;
    for (const auto& group : groups) {
      bool matched_any = false, group_open = false;
      for (const auto& [i, j] : group) {
        const auto& ca = candidates_of(i);
        const auto& cb = candidates_of(j);
        std::map<std::string, std::vector<size_t>> buckets;
        for (size_t b = 0; b < cb.size(); ++b)
          buckets[epp_fingerprint(cb[b].y)].push_back(b);
        for (size_t a = 0; a < ca.size() && !group_open; ++a) {
          auto it = buckets.find(epp_fingerprint(ca[a].y));
          if (it == buckets.end()) continue;
          for (size_t b : it->second) {
            if (--budget < 0) {
              group_open = true;  // budget out: cannot claim the group explained
              break;
            }
            ++verdict.candidates_tried;
            if (!epp_equal(ca[a].y, cb[b].y)) continue;
            matched_any = true;
            NonRecognizabilityCertificate cert{sigma,
                                               recenter(sigma, ca[a].x, ca[a].s),
                                               recenter(sigma, cb[b].x, cb[b].s),
                                               ca[a].y};
            VerifyResult res =
                verify_certificate(cert, lang_x, lang_y, radius, aperiodic_mode);
            if (res.accepted) {
              verdict.kind = Verdict::Kind::CertifiedNonrecognizable;
              verdict.certificate = std::move(cert);
              return true;
            }
            if (res.reason == kReasonImagePeriodic) {
              ++verdict.rejected_periodic;
            } else if (res.reason == kReasonMembership) {
              group_open = true;
              ++verdict.rejected_membership;
            } else if (res.reason != kReasonRepsEqual) {
              group_open = true;  // exactness failures never explain a group
            }
          }
        }
        if (group_open) break;
      }
      if (!matched_any || group_open) window_open = true;
    }
    if (window_open && static_cast<int64_t>(verdict.evidence.size()) < opts.max_evidence)
      verdict.evidence.push_back(AmbiguousWindow{window, frags});
    return false;
  };

  auto scan_window = [&](const Word& window) -> bool {
    ++verdict.windows_scanned;
    std::vector<RepFragment> frags =
        enumerate_fragments(window, sigma, lang_x, opts.fragment);
    if (frags.size() < 2) return false;
    // A pair of fragments witnesses ambiguity only when the window can tell
    // the two parses apart: different cores, or identical parses differing
    // purely in invisible erased letters.
    std::vector<FragmentCore> cores;
    cores.reserve(frags.size());
    for (const RepFragment& f : frags)
      cores.push_back(core_of(sigma, f, window.size()));
    std::map<FragmentCore, std::vector<size_t>> classes;
    for (size_t i = 0; i < frags.size(); ++i) classes[cores[i]].push_back(i);

    std::vector<std::vector<std::pair<size_t, size_t>>> groups;
    for (auto ia = classes.begin(); ia != classes.end(); ++ia)
      for (auto ib = std::next(ia); ib != classes.end(); ++ib) {
        std::vector<std::pair<size_t, size_t>> cross;
        for (size_t i : ia->second)
          for (size_t j : ib->second) cross.emplace_back(i, j);
        groups.push_back(std::move(cross));
      }
    for (const auto& [core, members] : classes) {
      (void)core;
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
          if (strip_erased(sigma, frags[members[a]].window) ==
              strip_erased(sigma, frags[members[b]].window))
            groups.push_back({{members[a], members[b]}});
    }
    if (groups.empty()) return false;
    ++verdict.ambiguous_windows;
    return process_window(window, frags, groups);
  };

  bool certified = false;
  if (lang_y) {
    for (const Word& w : lang_y->bag.words()) {
      if (w.size() != window_len) continue;
      if ((certified = scan_window(w))) break;
    }
  } else {
    // Full shift: enumerate outright when small, otherwise search parse
    // pairs directly.
    double count = 1;
    for (int64_t i = 0; i < window_len && count <= 1e18; ++i)
      count *= sigma.codomain()->size();
    if (count <= static_cast<double>(opts.full_shift_window_budget)) {
      bool stop = false;
      for_each_word(sigma.codomain(), window_len, [&](const Word& w) {
        if (!stop && scan_window(w)) stop = true;
      });
      certified = stop;
    } else {
      if (is_erasing(sigma))
        throw ResourceExhausted(
            "audit_recognizability: full-shift scan too large for an erasing morphism");
      bool truncated = false;
      std::vector<Word> texts = ambiguous_windows_by_pair_search(
          sigma, window_len, opts.pair_state_budget, opts.max_ambiguous_texts,
          &truncated);
      for (const Word& w : texts)
        if ((certified = scan_window(w))) break;
      if (!certified && truncated && verdict.evidence.empty())
        // More ambiguous windows exist than were reconstructed; stay honest.
        verdict.evidence.push_back(
            AmbiguousWindow{texts.empty() ? Word(sigma.codomain(), {}) : texts.back(), {}});
    }
  }

  if (!certified)
    verdict.kind = verdict.evidence.empty() ? Verdict::Kind::NoViolation
                                            : Verdict::Kind::Evidence;
  return verdict;
}

NonRecognizabilityCertificate lift_certificate(const MorphismSequence& seq, int n, int m,
                                               const NonRecognizabilityCertificate& cert,
                                               const CenteredRep& rep1,
                                               const CenteredRep& rep2) {
  if (n < 0 || m <= n) throw std::invalid_argument("lift_certificate: need m > n >= 0");
  const Morphism& sigma_n = seq.morphism_at(n);
  if (!(cert.sigma == sigma_n))
    throw std::invalid_argument("lift_certificate: certificate is not at level n");

  VerifyResult base = verify_certificate(cert, nullptr, nullptr, 1, false);
  if (!base.accepted)
    throw std::invalid_argument("lift_certificate: input certificate rejected: " +
                                base.reason);

  const Morphism tau = telescope(seq, n + 1, m);
  auto check_rep = [&](const CenteredRep& r, const Epp& y) {
    const Word& img0 = tau.image(r.x.letter_at(0));
    if (r.k < 0 || r.k >= img0.size())
      throw std::invalid_argument("lift_certificate: representation not centered");
    auto img = apply_epp(tau, r.x);
    if (!img || !epp_equal(epp_shift(*img, r.k), y))
      throw std::invalid_argument(
          "lift_certificate: representation does not produce the certificate point");
  };
  check_rep(rep1, cert.r1.x);
  check_rep(rep2, cert.r2.x);

  // New offsets |sigma_n(y_[-k,0))| + l, exactly as in the constructive proof.
  auto lifted_offset = [&](const CenteredRep& outer, const CenteredRep& inner) {
    const Word seg = inner.x.window(-outer.k, outer.k);
    return apply(sigma_n, seg).size() + inner.k;
  };
  NonRecognizabilityCertificate out{telescope(seq, n, m),
                                    CenteredRep{rep1.x, lifted_offset(rep1, cert.r1)},
                                    CenteredRep{rep2.x, lifted_offset(rep2, cert.r2)},
                                    cert.image};
  VerifyResult check = verify_certificate(out, nullptr, nullptr, 1, false);
  if (!check.accepted)
    throw std::logic_error("lift_certificate: lifted certificate rejected: " + check.reason);
  return out;
}

}  // namespace sadic
