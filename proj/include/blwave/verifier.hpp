#pragma once

#include "blwave/builder.hpp"
#include "blwave/zero_sum.hpp"

namespace blwave {

// Cell data of the cancellation function
//   t_m(x) = sum_{j >= 0} psi-hat(2^j x) conj(psi-hat(2^j (x + 2m pi))),
// restricted to the (finitely many) cells where some term is nonzero.
struct TmCellTerms {
  Interval cell;
  std::vector<PhasedRadical> terms;
};
std::vector<TmCellTerms> tm_cell_data(const FrequencyWavelet& w, long m);

struct Eq2Witness {
  long m;
  Interval cell;
  double residual;
  bool exact;
};
struct Eq4Witness {
  int j;
  Interval cell;
  double residual;
  bool exact;
};

// The five window conditions for supp inside the n-th skeleton.
struct Thm32Report {
  bool i = false, ii = false, iii = false, iv = false, v = false;
  ThetaWitness theta;
  bool all() const { return i && ii && iii && iv && v; }
};

struct EvenBellReport {
  bool is_even = false;
  bool e5_holds = false;
  bool consistent() const { return is_even == e5_holds; }
};

struct VerificationReport {
  Rational norm_sq;
  bool norm_ok = false;
  bool eq1_ok = false;
  DyadicBands rho;  // eq-1 profile on the representative bands
  bool eq2_ok = false;
  std::vector<Eq2Witness> eq2_witnesses;
  bool eq3_ok = false;
  StepProfile eq3_profile;  // on [0, 2pi)
  bool eq4_ok = false;
  std::vector<Eq4Witness> eq4_witnesses;
  std::optional<Thm32Report> thm32;  // when supp fits a declared skeleton
  // True when some cell decision fell back to 200-bit floating evaluation.
  bool numeric_assisted = false;
  bool verdict() const {
    return norm_ok && eq1_ok && eq2_ok && eq3_ok && eq4_ok;
  }
};

// ||psi||^2 = integral of mag2 / 2pi, exact.
Rational check_norm(const FrequencyWavelet& w);

// Eq. (1): the full dyadic sum is 1 a.e.; checked as rho == 1 on the two
// representative bands. Throws std::domain_error when the support touches 0.
std::pair<bool, DyadicBands> check_eq1(const FrequencyWavelet& w);

// Eq. (2): t_m == 0 for odd m. Only negative m are enumerated; positive m
// follow from t_m(x) = conj(t_{-m}(x + 2m pi)).
std::pair<bool, std::vector<Eq2Witness>> check_eq2(const FrequencyWavelet& w,
                                                   bool& numeric_assisted);

// Eq. (3): translation lattice sum == 1 on [0, 2pi).
std::pair<bool, StepProfile> check_eq3(const FrequencyWavelet& w);

// Eq. (4): sum_k psi-hat(x+2k pi) conj(psi-hat(2^j (x+2k pi))) == 0, j >= 1.
std::pair<bool, std::vector<Eq4Witness>> check_eq4(const FrequencyWavelet& w,
                                                   bool& numeric_assisted);

// Window conditions (i)-(v). Requires w.n; throws std::domain_error listing
// the escaping pieces when the support is not inside the skeleton.
Thm32Report check_thm32(const FrequencyWavelet& w);

// Evenness of mag2 vs. the window reflection identity
// mag2(x) + mag2(2pi - x) = 1 on [e, b); the two must agree for verified
// skeleton wavelets.
EvenBellReport check_even_bell(const FrequencyWavelet& w);

VerificationReport verify(const FrequencyWavelet& w);

}  // namespace blwave
