#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sadic/morphism.hpp"

namespace sadic {

/// An eventually periodic presentation of a sequence of morphisms
/// sigma_n : A_{n+1}* -> A_n*: a finite preperiod followed by a repeating
/// cycle. Families whose alphabets genuinely grow forever can only be
/// presented up to a truncation level; they carry the truncated_family flag
/// and no finite alphabet rank applies to them.
class MorphismSequence {
 public:
  MorphismSequence(std::vector<Morphism> preperiod, std::vector<Morphism> cycle,
                   bool truncated_family = false);

  const std::vector<Morphism>& preperiod() const { return preperiod_; }
  const std::vector<Morphism>& cycle() const { return cycle_; }
  bool truncated_family() const { return truncated_family_; }

  int preperiod_size() const { return static_cast<int>(preperiod_.size()); }
  int cycle_size() const { return static_cast<int>(cycle_.size()); }
  /// Number of structurally distinct levels: preperiod + one cycle.
  int distinct_levels() const { return preperiod_size() + cycle_size(); }

  /// sigma_n of the flattened infinite sequence.
  const Morphism& morphism_at(int n) const;
  /// A_n (the codomain of sigma_n).
  const AlphabetPtr& alphabet_at(int n) const;

 private:
  std::vector<Morphism> preperiod_;
  std::vector<Morphism> cycle_;
  bool truncated_family_;
};

/// sigma_[n,m) = sigma_n o ... o sigma_{m-1}; identity on A_n when n = m.
Morphism telescope(const MorphismSequence& seq, int n, int m);

/// Minimum alphabet size over the cycle part; equals liminf Card(A_n) for an
/// eventually periodic presentation. Meaningless for truncated families
/// (callers must check truncated_family()).
int alphabet_rank(const MorphismSequence& seq);

/// Primitivity of the sequence at level n, scanning n < m <= horizon.
/// No is returned only with a proof: the boolean occurrence matrix of
/// sigma_[n,m) revisits a state at the same cycle phase without ever being
/// positive, so no larger m can be positive either.
Tristate is_primitive_sequence(const MorphismSequence& seq, int n, int horizon);

MorphismSequence constant_sequence(const Morphism& sigma);

}  // namespace sadic
