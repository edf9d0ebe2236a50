#include "blwave/classes.hpp"

namespace blwave {

std::optional<SelfSimilarityWitness> partial_self_similarity(
    const IntervalSet& e, const RationalPi& alpha) {
  IntervalSet f = e.intersect(e.translate(-alpha));
  if (f.empty()) return std::nullopt;
  return SelfSimilarityWitness{std::move(f), alpha};
}

bool msf_test(const FrequencyWavelet& w) {
  if (w.mag2.empty()) return false;
  for (const auto& p : w.mag2.pieces())
    if (p.value != 1) return false;
  if (!(w.mag2.support().measure() == RationalPi{Rational(2)}))
    throw std::logic_error("indicator modulus with support measure != 2*pi");
  return true;
}

std::string ClassLabel::name() const {
  switch (kind) {
    case Kind::mk:
      return "M_" + std::to_string(k);
    case Kind::m_infinity:
      return "M_inf";
    default:
      return "inconclusive";
  }
}

ClassLabel classify(const FrequencyWavelet& w, int max_k) {
  ClassLabel label;
  if (msf_test(w)) {
    label.kind = ClassLabel::Kind::m_infinity;
    label.note = "indicator modulus";
    return label;
  }
  IntervalSet supp = w.support();
  if (supp.empty()) {
    label.note = "empty support";
    return label;
  }
  Rational bound = supp.sup_abs().coeff * 2;  // |2^k q| <= bound
  for (int k = 1; k <= max_k; ++k) {
    Rational scale = rat_pow2(Rational(1), k);
    if (scale > bound) {
      label.note = "all overlap-feasible levels refuted";
      return label;
    }
    long probes = 0;
    for (mpz_class q = 1; Rational(q) * scale <= bound; q += 2) {
      for (int sign : {1, -1}) {
        RationalPi alpha{scale * Rational(q) * sign};
        ++probes;
        if (auto wit = partial_self_similarity(supp, alpha)) {
          label.kind = ClassLabel::Kind::mk;
          label.k = k - 1;
          label.witness = std::move(wit);
          label.note = "support-overlap criterion";
          return label;
        }
      }
    }
    label.refuted.push_back({k, probes});
  }
  label.note = "no witness up to the requested level bound";
  return label;
}

}  // namespace blwave
