#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/language.hpp"
#include "sadic/sequence.hpp"

namespace sadic {

/// Raised when a configurable search budget is exhausted. Callers never get a
/// wrong answer instead of this.
struct ResourceExhausted : std::runtime_error {
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Finite-window shadow of a centered representation: the window parses the
/// target as sigma(window)[k .. k + |target|). k lies inside the image of the
/// first productive letter; erased letters appear only as boundary runs.
struct RepFragment {
  Word window;
  int64_t k = 0;
  std::pair<int64_t, int64_t> span;  // [k, k + |target|) inside sigma(window)

  friend bool operator==(const RepFragment& a, const RepFragment& b) {
    return a.k == b.k && a.span == b.span && a.window == b.window;
  }
  friend bool operator<(const RepFragment& a, const RepFragment& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.window < b.window;
  }
};

struct FragmentOptions {
  int erased_run = 8;              // bound E on boundary erased runs
  int64_t max_fragments = 100000;  // ResourceExhausted beyond this
};

/// All minimal fragments of y_window under sigma, filtered by the oracle
/// (nullptr = full shift), in (k, window) lexicographic order.
std::vector<RepFragment> enumerate_fragments(const Word& y_window, const Morphism& sigma,
                                             const FactorSet* oracle,
                                             const FragmentOptions& opts = {});

/// A centered sigma-representation (x, k) of y = T^k(sigma(x)).
struct CenteredRep {
  Epp x;
  int64_t k = 0;
};

/// Two distinct centered representations of one image point.
struct NonRecognizabilityCertificate {
  Morphism sigma;
  CenteredRep r1;
  CenteredRep r2;
  Epp image;  // y
};

struct VerifyResult {
  bool accepted = false;
  std::string reason;  // empty iff accepted
  std::string detail;  // which representation / factor failed, for reports
};

inline constexpr const char* kReasonImagePeriodic = "image periodic";
inline constexpr const char* kReasonMembership = "unverified membership";
inline constexpr const char* kReasonRepsEqual = "representations equal";

/// Exact verification per the recognizability definition: centering, exact
/// image equality, distinctness, bounded-radius membership of both points in
/// lang_x (nullptr = full shift, no membership obligation), and aperiodicity
/// of the image when aperiodic_mode is set. lang_y is carried for reporting
/// symmetry; the definition constrains only the represented points.
VerifyResult verify_certificate(const NonRecognizabilityCertificate& c,
                                const FactorSet* lang_x, const FactorSet* lang_y,
                                int64_t radius, bool aperiodic_mode);

struct AmbiguousWindow {
  Word window;
  std::vector<RepFragment> fragments;
};

struct Verdict {
  enum class Kind { NoViolation, Evidence, CertifiedNonrecognizable };
  Kind kind = Kind::NoViolation;
  int64_t radius = 0;
  std::optional<NonRecognizabilityCertificate> certificate;
  std::vector<AmbiguousWindow> evidence;
  // scan statistics (reported by the CLI, asserted by the falsification tests)
  int64_t windows_scanned = 0;
  int64_t ambiguous_windows = 0;
  int64_t candidates_tried = 0;
  int64_t rejected_membership = 0;
  int64_t rejected_periodic = 0;
};

struct AuditOptions {
  FragmentOptions fragment;
  int64_t full_shift_window_budget = 4096;  // enumerate windows up to this count
  int64_t pair_state_budget = 200000;       // pair-parse BFS states
  int64_t max_ambiguous_texts = 64;         // texts reconstructed from the BFS
  int64_t max_candidate_pairs = 4096;       // certificate attempts per window
  int64_t max_evidence = 32;                // windows kept in the verdict
};

/// Scans every window of length 2*radius in lang_y (nullptr = full shift; a
/// synchronized pair-parse search replaces enumeration when the full shift is
/// too large). Ambiguity is upgraded to a certificate when a periodic-closure
/// candidate verifies; in aperiodic mode, ambiguity whose matching closures
/// are all periodic is discounted (phase-shifted parses of purely periodic
/// windows witness nothing about aperiodic points).
Verdict audit_recognizability(const Morphism& sigma, const FactorSet* lang_x,
                              const FactorSet* lang_y, int64_t radius,
                              bool aperiodic_mode, const AuditOptions& opts = {});

/// Converts an arbitrary representation y = T^s(sigma(x)) into the centered
/// one: shifts x to the letter whose image covers position s.
CenteredRep recenter(const Morphism& sigma, const Epp& x, int64_t s);

/// Finds the centered representation of y through the given point x, if the
/// orbit of sigma(x) contains y.
std::optional<CenteredRep> find_representation(const Morphism& sigma, const Epp& x,
                                               const Epp& y);

/// Constructive lift: from a certificate for sigma_n and centered
/// sigma_[n+1,m)-representations of its two points, builds the certificate
/// for sigma_[n,m). Inputs are re-verified exactly; the output re-verifies by
/// construction.
NonRecognizabilityCertificate lift_certificate(const MorphismSequence& seq, int n, int m,
                                               const NonRecognizabilityCertificate& cert,
                                               const CenteredRep& rep1,
                                               const CenteredRep& rep2);

}  // namespace sadic
