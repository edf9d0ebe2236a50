#pragma once

#include "blwave/builder.hpp"

namespace blwave {

// Positive-measure F with both F and F + alpha inside the tested support.
struct SelfSimilarityWitness {
  IntervalSet f;  // maximal choice: e n (e - alpha)
  RationalPi alpha;
};

// Returns the maximal witness e n (e - alpha) when it has positive measure.
std::optional<SelfSimilarityWitness> partial_self_similarity(
    const IntervalSet& e, const RationalPi& alpha);

// True iff every mag2 value is exactly 1 (indicator modulus). When true the
// support measure must be exactly 2*pi; a violation throws std::logic_error
// (an indicator modulus of any other measure cannot come from a unit-norm
// wavelet).
bool msf_test(const FrequencyWavelet& w);

// Record that every probe at one level came back with empty overlap.
struct LevelRefutation {
  int level = 0;   // shifts were the odd multiples of 2^level * pi
  long probes = 0;
};

struct ClassLabel {
  enum class Kind { mk, m_infinity, inconclusive };
  Kind kind = Kind::inconclusive;
  int k = -1;                                    // for Kind::mk
  std::optional<SelfSimilarityWitness> witness;  // for Kind::mk
  std::vector<LevelRefutation> refuted;          // levels below the witness
  std::string note;
  std::string name() const;  // "M_2", "M_inf", "inconclusive"
};

// First-witness search: for level k = 1, 2, ..., max_k probe every shift
// alpha = 2^k q pi with odd q and |alpha| <= 2 sup|supp| (larger shifts
// cannot overlap), in (k, |q|, sign) order. A first witness at level k
// labels the wavelet M_{k-1}; an indicator modulus labels it M_inf without
// probing. The caller is responsible for passing a verified wavelet.
ClassLabel classify(const FrequencyWavelet& w, int max_k = 16);

}  // namespace blwave
