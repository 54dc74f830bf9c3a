#include "sadic/model.hpp"

#include <algorithm>

namespace sadic {

namespace {

// Generators plus the tail limit points of each.
std::vector<Epp> points_of(const ShiftModel& model) {
  std::vector<Epp> out;
  for (const Epp& g : model.generators) {
    out.push_back(epp_normalize(g));
    out.push_back(left_limit_point(g));
    out.push_back(right_limit_point(g));
  }
  return out;
}

}  // namespace

bool model_membership(const ShiftModel& model, const Epp& p) {
  for (const Epp& g : model.generators) {
    if (epp_in_orbit(p, g)) return true;
    if (epp_in_orbit(p, left_limit_point(g))) return true;
    if (epp_in_orbit(p, right_limit_point(g))) return true;
  }
  return false;
}

ModelValidation validate_model(const MorphismSequence& seq, const ShiftModel& model,
                               int64_t len, int horizon, const LanguageOptions& lopts) {
  ModelValidation v;
  v.len = len;
  v.horizon = horizon;
  const FactorSet lang = level_language(seq, model.level, len, horizon, lopts);

  FactorBag realized(len);
  for (const Epp& p : points_of(model)) realized.insert_all(epp_factors(p, len));

  for (const Word& w : realized.words())
    if (member(lang, w) == Membership::NotSeen) {
      v.missing_from_language = w;
      return v;
    }
  for (const Word& w : lang.bag.words())
    if (!realized.contains(w)) {
      v.missing_from_model = w;
      return v;
    }
  v.pass = true;
  return v;
}

RepresentabilityVerdict decide_representability(const MorphismSequence& seq, int n,
                                                const ShiftModel& model_n,
                                                const ShiftModel& model_next) {
  const Morphism& sigma_n = seq.morphism_at(n);
  std::vector<Epp> represented;
  for (const Epp& x : points_of(model_next))
    if (auto img = apply_epp(sigma_n, x)) represented.push_back(std::move(*img));

  for (const Epp& p : points_of(model_n)) {
    bool covered = false;
    for (const Epp& img : represented)
      if (epp_in_orbit(p, img)) {
        covered = true;
        break;
      }
    if (!covered)
      return RepresentabilityVerdict{RepresentabilityVerdict::Kind::NotRepresentable, p, 0};
  }
  return RepresentabilityVerdict{RepresentabilityVerdict::Kind::RepresentableModel,
                                 std::nullopt, 0};
}

RepresentabilityVerdict check_representable_via_nonerasing(const MorphismSequence& seq,
                                                           int n, int horizon) {
  if (horizon <= n)
    throw std::invalid_argument("check_representable_via_nonerasing: horizon must be > n");
  // erased[a]: sigma_[n,m)(a) = epsilon; grown one level at a time, so the
  // telescoped words are never materialized.
  const Morphism& first = seq.morphism_at(n);
  std::vector<bool> erased(first.domain()->size());
  for (int32_t a = 0; a < first.domain()->size(); ++a)
    erased[a] = first.image(a).empty();
  for (int m = n + 1;; ++m) {
    bool any = false;
    for (bool e : erased) any |= e;
    if (!any)
      return RepresentabilityVerdict{RepresentabilityVerdict::Kind::RepresentableNonErasing,
                                     std::nullopt, m};
    if (m == horizon) break;
    const Morphism& next = seq.morphism_at(m);
    std::vector<bool> grown(next.domain()->size());
    for (int32_t a = 0; a < next.domain()->size(); ++a) {
      const Word& img = next.image(a);
      bool e = true;
      for (int64_t i = 0; i < img.size() && e; ++i) e = erased[img.at(i)];
      grown[a] = e;
    }
    erased = std::move(grown);
  }
  return RepresentabilityVerdict{RepresentabilityVerdict::Kind::Unknown, std::nullopt,
                                 horizon};
}

AuditReport audit_sequence(const MorphismSequence& seq,
                           const std::map<int, ShiftModel>& models,
                           const SequenceAuditOptions& opts) {
  AuditReport report;
  report.rank_finite = !seq.truncated_family();
  if (report.rank_finite) report.rank = alphabet_rank(seq);

  // The window scan needs words of length 2*radius; widen silently.
  const int64_t len = std::max(opts.len, 2 * opts.radius);
  const int levels = seq.distinct_levels();
  for (int n = 0; n < levels; ++n) {
    LevelReport lr;
    lr.level = n;
    const FactorSet lang_y = level_language(seq, n, len, n + opts.depth, opts.language);
    const FactorSet lang_x =
        level_language(seq, n + 1, len, n + 1 + opts.depth, opts.language);
    lr.recognizability = audit_recognizability(seq.morphism_at(n), &lang_x, &lang_y,
                                               opts.radius, opts.aperiodic, opts.audit);
    lr.representability = check_representable_via_nonerasing(seq, n, n + opts.depth);
    auto here = models.find(n);
    if (here != models.end())
      lr.model_check =
          validate_model(seq, here->second, opts.model_len, n + opts.depth, opts.language);
    if (lr.representability.kind == RepresentabilityVerdict::Kind::Unknown) {
      auto next = models.find(n + 1);
      if (here != models.end() && next != models.end())
        lr.representability = decide_representability(seq, n, here->second, next->second);
    }
    if (lr.recognizability.kind == Verdict::Kind::CertifiedNonrecognizable)
      ++report.nonrec_certified;
    if (lr.representability.kind == RepresentabilityVerdict::Kind::NotRepresentable)
      ++report.nonrep_certified;
    report.levels.push_back(std::move(lr));
  }

  if (report.rank_finite) {
    // The bound on non-recognizable levels concerns aperiodic points; the
    // audit counts certified levels only in aperiodic mode.
    report.bound_nonrec_ok =
        !opts.aperiodic || report.nonrec_certified <= report.rank - 2;
    report.bound_nonrep_ok = report.nonrep_certified <= report.rank - 1;
  }
  report.internal_inconsistency = !(report.bound_nonrec_ok && report.bound_nonrep_ok);
  return report;
}

}  // namespace sadic
