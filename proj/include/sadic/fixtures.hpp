#pragma once

#include <map>
#include <string>
#include <vector>

#include "sadic/model.hpp"

namespace sadic::fixtures {

// The built-in examples. The two parametrized families take their parameter
// (K, respectively the truncation level N) at call time.

Morphism fibonacci();   // a -> ab, b -> a
Morphism thue_morse();  // a -> ab, b -> ba
Morphism ex34();        // a -> aa, b -> ab, c -> ba (codomain {a, b})
Morphism ex34_endo();   // the same images read as an endomorphism of {a, b, c}

/// The erasing three-level sequence: sigma_0: a->a, b->e; sigma_1: a->a,
/// b->bb, c->ab; sigma_n (n>=2): a->a, b->bb, c->cab.
MorphismSequence ex51();
std::map<int, ShiftModel> ex51_models();

/// The padding family with one chain letter per level: sigma_n: a_i ->
/// a_0 a_i a_0 (i <= n), a_{n+1} -> a_n for n <= K, then constant padding.
MorphismSequence ex75(int k);
std::map<int, ShiftModel> ex75_models(int k);
/// The two phase-shifted representations of the single-a_n point, 1 <= level <= K.
NonRecognizabilityCertificate ex75_certificate(int k, int level);

/// The ever-growing variant, truncated at level n (constant padding beyond);
/// flagged as a truncated family.
MorphismSequence ex76(int truncation);

std::vector<std::string> example_names();

}  // namespace sadic::fixtures
