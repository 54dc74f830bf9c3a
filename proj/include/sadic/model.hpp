#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sadic/desub.hpp"

namespace sadic {

/// A shift model: finitely many eventually periodic generators; the modeled
/// shift is the union of their orbit closures (all shifts plus the two tail
/// limit points of each generator).
struct ShiftModel {
  int level = 0;
  std::vector<Epp> generators;
};

/// Exact membership of p in the modeled shift.
bool model_membership(const ShiftModel& model, const Epp& p);

/// Bounded-precision consistency check of a model against the level language:
/// (a) every generator/limit factor of length <= len must be in the language,
/// (b) every language word of length <= len must occur in some generator or
/// limit. A failed inclusion reports the offending word. This is a
/// consistency check at (len, horizon), not a proof of the model.
struct ModelValidation {
  bool pass = false;
  int64_t len = 0;
  int horizon = 0;
  std::optional<Word> missing_from_language;  // (a) failed
  std::optional<Word> missing_from_model;     // (b) failed
};

ModelValidation validate_model(const MorphismSequence& seq, const ShiftModel& model,
                               int64_t len, int horizon,
                               const LanguageOptions& lopts = {});

struct RepresentabilityVerdict {
  enum class Kind { RepresentableNonErasing, RepresentableModel, NotRepresentable, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Epp> witness;  // uncovered point for NotRepresentable
  int horizon = 0;             // telescoping depth used (non-erasing / unknown)
};

/// Exact decision within the two models: the represented set is the set of
/// shifts of defined sigma_n-images of model_next's generators and limits;
/// every generator and limit of model_n must land in it.
RepresentabilityVerdict decide_representability(const MorphismSequence& seq, int n,
                                                const ShiftModel& model_n,
                                                const ShiftModel& model_next);

/// Representability via a non-erasing telescope sigma_[n,m), n < m <= horizon.
/// Unknown at every horizon when the level is truly non-representable (the
/// telescopes stay erasing forever).
RepresentabilityVerdict check_representable_via_nonerasing(const MorphismSequence& seq,
                                                           int n, int horizon);

struct LevelReport {
  int level = 0;
  Verdict recognizability;
  RepresentabilityVerdict representability;
  // Bounded-precision validation of the supplied model at this level, when
  // one was given. NOT_REPRESENTABLE verdicts are exact only relative to the
  // models; reports must carry this.
  std::optional<ModelValidation> model_check;
};

struct AuditReport {
  bool rank_finite = true;  // false for truncated families: no cycle bound applies
  int rank = 0;
  std::vector<LevelReport> levels;
  int nonrec_certified = 0;
  int nonrep_certified = 0;
  bool bound_nonrec_ok = true;  // nonrec_certified <= rank - 2
  bool bound_nonrep_ok = true;  // nonrep_certified <= rank - 1
  bool internal_inconsistency = false;
};

struct SequenceAuditOptions {
  int64_t radius = 4;
  int64_t len = 0;        // window/factor length; 0 = 2 * radius
  int depth = 8;          // telescoping depth beyond each level
  int64_t model_len = 2;  // length at which supplied models are validated
  bool aperiodic = true;
  AuditOptions audit;
  LanguageOptions language;
};

/// Per-level recognizability and representability audit over the preperiod
/// plus one cycle, with the alphabet-rank bound checks. Any bound violation is
/// an internal inconsistency: it cannot happen with sound certificates.
AuditReport audit_sequence(const MorphismSequence& seq,
                           const std::map<int, ShiftModel>& models,
                           const SequenceAuditOptions& opts = {});

}  // namespace sadic
