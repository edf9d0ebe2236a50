#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blwave/scalars.hpp"

namespace blwave {

// Half-open frequency interval [lo, hi). Using half-open pieces everywhere
// makes the almost-everywhere set identities exact set identities.
struct Interval {
  RationalPi lo, hi;

  bool empty() const { return hi <= lo; }
  RationalPi length() const { return empty() ? RationalPi() : hi - lo; }
  bool contains(const RationalPi& x) const { return lo <= x && x < hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

Interval intersect(const Interval& a, const Interval& b);

// Finite union of half-open intervals, kept sorted, disjoint and merged
// (adjacent pieces coalesce), so equality of sets is equality of piece lists.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from_pieces(std::vector<Interval> pieces);
  static IntervalSet single(const Interval& iv) { return from_pieces({iv}); }

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  RationalPi measure() const;
  bool contains(const RationalPi& x) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet difference(const IntervalSet& o) const;
  bool subset_of(const IntervalSet& o) const { return difference(o).empty(); }

  // Image sets: {2^j x}, {x + t}, {-x}.
  IntervalSet dilate_pow2(int j) const;
  IntervalSet translate(const RationalPi& t) const;
  IntervalSet negate() const;

  RationalPi inf() const;  // requires nonempty
  RationalPi sup() const;
  // Largest |x| over the closure; requires nonempty.
  RationalPi sup_abs() const;
  // Smallest positive |endpoint|; nullopt when a piece touches or crosses 0.
  std::optional<RationalPi> min_abs_gap() const;

  bool operator==(const IntervalSet& o) const { return pieces_ == o.pieces_; }

 private:
  std::vector<Interval> pieces_;
};

// The frequency skeleton: endpoints of S_n = +/-([a,b] u [c,d]) and the
// bell window [e, b).
struct SnGeometry {
  int n = 0;
  RationalPi a, b, c, d, e;

  static SnGeometry make(int n);  // n >= 2
  IntervalSet sn() const;         // the four pieces, half-open
  Interval bell_window() const { return {e, b}; }
};

// Rows of the admissibility table: the six pieces that partition S_n for
// n >= 3 (for n = 2, e = a and the split degenerates).
enum class SnPiece { AE, EB, CD, NegEA, NegBE, NegDC };
Interval sn_piece(const SnGeometry& g, SnPiece piece);
const char* sn_piece_name(SnPiece piece);
std::vector<SnPiece> all_sn_pieces();

// Integer translations ks (by 2k*pi) and dilations js (by 2^j) that map the
// given piece to a set meeting S_n on positive measure. Computed by exact
// interval intersection inside provable bounds, not hard-coded.
struct AdmissibleMoves {
  std::vector<long> ks;
  std::vector<int> js;
};
AdmissibleMoves admissible_moves(const SnGeometry& g, SnPiece piece);

// Wavelet-set test: does the set tile the line both under translations by
// 2*pi (partition of [0, 2pi) a.e.) and under dyadic dilations (partition of
// a representative band a.e.)? Total: malformed candidates return false with
// the excess/deficit measures, never an error.
struct WaveletSetVerdict {
  bool is_wavelet_set = false;
  bool translation_tiling = false;
  bool dilation_tiling = false;
  RationalPi measure;              // of the input set
  RationalPi translation_overlap;  // measure counted with multiplicity > 1
  RationalPi translation_gap;      // measure of [0,2pi) not covered
  RationalPi dilation_overlap;
  RationalPi dilation_gap;
};
WaveletSetVerdict wavelet_set_check(const IntervalSet& s);

// Named sets: "shannon", "journe", "lemarie" ignore n; "S_n", "W_n", "F_n"
// use it. Returns nullopt for unknown keys.
std::optional<IntervalSet> named_set(const std::string& key, int n);

IntervalSet shannon_set();
IntervalSet journe_set();
IntervalSet lemarie_set();
IntervalSet wn_set(const SnGeometry& g);  // support of the gamma_n family
IntervalSet fn_set(const SnGeometry& g);  // support of the psi_n family

}  // namespace blwave
