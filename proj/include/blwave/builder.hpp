#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "blwave/profiles.hpp"

namespace blwave {

// A band-limited candidate wavelet, stored on the frequency side as the
// squared modulus |psi-hat|^2 (exact step profile) and the phase theta in
// units of pi. The phase profile must cover the support of mag2.
struct FrequencyWavelet {
  StepProfile mag2;
  PhaseProfile phase;
  // Set when the support is contained in the n-th frequency skeleton; this
  // unlocks the window-condition checks and the closed-form dimension.
  std::optional<int> n;

  // Descriptor metadata, not used by the mathematics.
  std::string family;
  std::optional<int> param_n;
  std::optional<int> param_p;
  std::optional<std::uint64_t> seed;
  std::string notes;

  IntervalSet support() const { return mag2.support(); }
};

// Extends a squared bell profile given on the window [e, b) to all of S_n
// using the four magnitude conditions:
//   value 1 on +/-[a, e); 1 - bell2(x / 2^{n-1}) on [c, d);
//   1 - bell2(x + 2pi) on [-b, -e); bell2(x / 2^{n-1} + 2pi) on [-d, -c).
// Pre: bell2 supported in [e, b) with values in [0, 1].
StepProfile extend_bell(const SnGeometry& g, const StepProfile& bell2);

// Checks the phase functional equation on the triple intersection
// T = [e, b) n supp b n 2^{-(n-1)} supp b: for a.e. x in T,
//   theta(x) + theta(2^{n-1}(x - 2pi)) - theta(x - 2pi) - theta(2^{n-1} x)
// must be an odd multiple of pi. Returns the per-cell integers m, or the
// first violating cell. Throws if phase does not cover supp(mag2).
struct ThetaCell {
  Interval cell;
  long m;
};
struct ThetaWitness {
  bool valid = false;
  std::vector<ThetaCell> cells;      // when valid
  std::optional<Interval> violation; // first bad cell otherwise
};
ThetaWitness validate_theta(const SnGeometry& g, const StepProfile& mag2,
                            const PhaseProfile& phase);

enum class Family { Gamma, MsfA, MsfB, PsiN, WN, Shannon };
const char* family_name(Family f);                 // CLI-facing string
std::optional<Family> family_from_name(const std::string& s);

// Builds the named construction. p is used by MsfB only
// (1 <= p <= 2^{n-1} - 2); Shannon ignores n.
FrequencyWavelet build_family(Family f, int n, int p = 0);

// Wraps a user-supplied squared bell (on [e, b), values in [0, 1]) with the
// canonical phase: pi on the strict-interior cells of the window, 0 on the
// rest of the support.
FrequencyWavelet from_custom_bell(const SnGeometry& g,
                                  const StepProfile& bell2);

// Seeded candidate generator. All randomness is drawn from mt19937_64 via
// modular reduction of raw outputs, so a seed fixes the candidate across
// platforms and standard libraries.
//   valid: random step bell with values in [0, 1] and the canonical phase.
//   broken-iii: valid magnitudes, then one cell of [c, d) perturbed, which
//     breaks the reflected-sum magnitude condition (and the lattice sums).
//   broken-v: valid magnitudes with at least one strict bell cell, phase
//     identically 0, which breaks the phase equation on the strict cells.
// The marked_cell records the perturbed cell (broken-iii) or the first
// strict bell cell (broken-v).
enum class CandidateKind { Valid, BrokenIii, BrokenV };
struct Candidate {
  FrequencyWavelet w;
  std::optional<Interval> marked_cell;
};
Candidate random_candidate(const SnGeometry& g, std::uint64_t seed,
                           CandidateKind kind, bool even_bell = false);

}  // namespace blwave
