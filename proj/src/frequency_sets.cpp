#include "blwave/frequency_sets.hpp"

#include <algorithm>

namespace blwave {

Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.empty()) return Interval{RationalPi(), RationalPi()};
  return r;
}

IntervalSet IntervalSet::from_pieces(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& iv) { return iv.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalSet s;
  for (auto& iv : pieces) {
    if (!s.pieces_.empty() && iv.lo <= s.pieces_.back().hi) {
      if (iv.hi > s.pieces_.back().hi) s.pieces_.back().hi = iv.hi;
    } else {
      s.pieces_.push_back(iv);
    }
  }
  return s;
}

RationalPi IntervalSet::measure() const {
  RationalPi m;
  for (const auto& iv : pieces_) m = m + iv.length();
  return m;
}

bool IntervalSet::contains(const RationalPi& x) const {
  for (const auto& iv : pieces_)
    if (iv.contains(x)) return true;
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), o.pieces_.begin(), o.pieces_.end());
  return from_pieces(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_)
    for (const auto& q : o.pieces_) {
      Interval r = blwave::intersect(p, q);
      if (!r.empty()) out.push_back(r);
    }
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::difference(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    RationalPi cur = p.lo;
    for (const auto& q : o.pieces_) {
      if (q.hi <= cur || q.lo >= p.hi) continue;
      if (q.lo > cur) out.push_back({cur, q.lo});
      cur = std::max(cur, q.hi);
    }
    if (cur < p.hi) out.push_back({cur, p.hi});
  }
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::dilate_pow2(int j) const {
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({p.lo.scaled_pow2(j), p.hi.scaled_pow2(j)});
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::translate(const RationalPi& t) const {
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back({p.lo + t, p.hi + t});
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::negate() const {
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  // [lo, hi) maps to (-hi, -lo]; as a set of positive measure this is
  // [-hi, -lo) up to the endpoint, which half-open pieces represent.
  for (const auto& p : pieces_) out.push_back({-p.hi, -p.lo});
  return from_pieces(std::move(out));
}

RationalPi IntervalSet::inf() const {
  if (empty()) throw std::domain_error("inf of empty set");
  return pieces_.front().lo;
}

RationalPi IntervalSet::sup() const {
  if (empty()) throw std::domain_error("sup of empty set");
  return pieces_.back().hi;
}

RationalPi IntervalSet::sup_abs() const {
  RationalPi lo = inf(), hi = sup();
  RationalPi alo = lo < RationalPi() ? -lo : lo;
  RationalPi ahi = hi < RationalPi() ? -hi : hi;
  return std::max(alo, ahi);
}

std::optional<RationalPi> IntervalSet::min_abs_gap() const {
  RationalPi zero;
  std::optional<RationalPi> best;
  for (const auto& p : pieces_) {
    // A piece crossing or touching 0 accumulates at 0 from inside.
    if (p.lo <= zero && zero <= p.hi) return std::nullopt;
    RationalPi cand = p.hi <= zero ? -p.hi : p.lo;
    if (!best || cand < *best) best = cand;
  }
  return best;
}

SnGeometry SnGeometry::make(int n) {
  if (n < 2) throw std::invalid_argument("frequency skeleton needs n >= 2");
  if (n > 62) throw std::invalid_argument("n too large");
  mpz_class two_n = mpz_class(1) << n;
  mpz_class two_n1 = mpz_class(1) << (n - 1);
  mpz_class den = two_n - 1;
  SnGeometry g;
  g.n = n;
  g.a = RationalPi(Rational(two_n1, den));
  g.b = RationalPi(Rational(two_n, den));
  g.e = RationalPi(Rational(two_n - 2, den));
  g.c = RationalPi(Rational(two_n1 * (two_n - 2), den));
  g.d = RationalPi(Rational(two_n1 * two_n, den));
  return g;
}

IntervalSet SnGeometry::sn() const {
  return IntervalSet::from_pieces({{a, b}, {c, d}, {-b, -a}, {-d, -c}});
}

Interval sn_piece(const SnGeometry& g, SnPiece piece) {
  switch (piece) {
    case SnPiece::AE: return {g.a, g.e};
    case SnPiece::EB: return {g.e, g.b};
    case SnPiece::CD: return {g.c, g.d};
    case SnPiece::NegEA: return {-g.e, -g.a};
    case SnPiece::NegBE: return {-g.b, -g.e};
    case SnPiece::NegDC: return {-g.d, -g.c};
  }
  throw std::logic_error("unreachable");
}

const char* sn_piece_name(SnPiece piece) {
  switch (piece) {
    case SnPiece::AE: return "[a,e)";
    case SnPiece::EB: return "[e,b)";
    case SnPiece::CD: return "[c,d)";
    case SnPiece::NegEA: return "[-e,-a)";
    case SnPiece::NegBE: return "[-b,-e)";
    case SnPiece::NegDC: return "[-d,-c)";
  }
  throw std::logic_error("unreachable");
}

std::vector<SnPiece> all_sn_pieces() {
  return {SnPiece::AE, SnPiece::EB, SnPiece::CD,
          SnPiece::NegEA, SnPiece::NegBE, SnPiece::NegDC};
}

AdmissibleMoves admissible_moves(const SnGeometry& g, SnPiece piece) {
  if (g.n < 3) throw std::invalid_argument("admissibility table needs n >= 3");
  Interval row = sn_piece(g, piece);
  IntervalSet sn = g.sn();
  IntervalSet rowset = IntervalSet::single(row);
  AdmissibleMoves moves;

  // Translates row + 2k*pi meeting S_n: |2k*pi| <= sup|S_n| + sup|row| <= 2d.
  Rational bound = g.d.coeff;  // |k| <= d / pi
  mpz_class km;
  mpz_cdiv_q(km.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  long kmax = km.get_si();
  for (long k = -kmax; k <= kmax; ++k) {
    if (!rowset.translate(RationalPi(Rational(2 * k))).intersect(sn).empty())
      moves.ks.push_back(k);
  }

  // Dilates 2^j row meeting S_n: 2^j * inf|row| <= d and 2^j * sup|row| >= a.
  RationalPi lo_abs = row.hi <= RationalPi() ? -row.hi : row.lo;
  RationalPi hi_abs = std::max(row.hi <= RationalPi() ? -row.lo : row.hi,
                               lo_abs);
  int jmin = -(floor_log2(hi_abs.coeff / g.a.coeff) + 1);
  int jmax = floor_log2(g.d.coeff / lo_abs.coeff) + 1;
  for (int j = jmin; j <= jmax; ++j) {
    if (!rowset.dilate_pow2(j).intersect(sn).empty()) moves.js.push_back(j);
  }
  return moves;
}

namespace {

// Reduces each piece of s modulo 2*pi into [0, 2*pi) and reports coverage.
struct ReductionStats {
  RationalPi total;    // sum of chunk lengths
  RationalPi covered;  // measure of the union
  RationalPi span;     // length of the target window
};

ReductionStats reduce_translates(const IntervalSet& s) {
  RationalPi two_pi = RationalPi::of(2);
  std::vector<Interval> chunks;
  for (const auto& p : s.pieces()) {
    // First multiple of 2*pi at or below p.lo.
    Rational q = p.lo.coeff / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    RationalPi base = RationalPi(Rational(fl) * 2);
    for (RationalPi left = base; left < p.hi; left = left + two_pi) {
      Interval chunk = intersect(p, {left, left + two_pi});
      if (!chunk.empty()) chunks.push_back({chunk.lo - left, chunk.hi - left});
    }
  }
  ReductionStats st;
  st.span = two_pi;
  for (const auto& c : chunks) st.total = st.total + c.length();
  st.covered = IntervalSet::from_pieces(chunks).measure();
  return st;
}

// Reduces the positive (sign=+1) or negative (sign=-1) part of s by dyadic
// dilations into the band [alpha, 2*alpha) (mirrored for the negative side).
// Pre: no piece of s touches 0 (caller checks via s n 2s).
ReductionStats reduce_dilates(const IntervalSet& s, int sign) {
  IntervalSet part;
  {
    std::vector<Interval> kept;
    for (const auto& p : s.pieces()) {
      if (sign > 0 && p.hi > RationalPi())
        kept.push_back({std::max(p.lo, RationalPi()), p.hi});
      if (sign < 0 && p.lo < RationalPi())
        kept.push_back({p.lo, std::min(p.hi, RationalPi())});
    }
    part = IntervalSet::from_pieces(kept);
  }
  ReductionStats st;
  if (part.empty()) {
    st.span = RationalPi(Rational(1));  // arbitrary positive: full gap
    return st;
  }
  if (sign < 0) part = part.negate();
  RationalPi alpha = part.inf();
  RationalPi two_alpha = alpha.scaled_pow2(1);
  st.span = alpha;
  std::vector<Interval> chunks;
  for (const auto& p : part.pieces()) {
    int k = floor_log2(p.lo.coeff / alpha.coeff);
    for (; ; ++k) {
      Interval window{alpha.scaled_pow2(k), alpha.scaled_pow2(k + 1)};
      if (window.lo >= p.hi) break;
      Interval chunk = intersect(p, window);
      if (!chunk.empty())
        chunks.push_back({chunk.lo.scaled_pow2(-k), chunk.hi.scaled_pow2(-k)});
    }
  }
  for (const auto& c : chunks) st.total = st.total + c.length();
  st.covered = IntervalSet::from_pieces(chunks).measure();
  return st;
}

}  // namespace

WaveletSetVerdict wavelet_set_check(const IntervalSet& s) {
  WaveletSetVerdict v;
  v.measure = s.measure();

  ReductionStats tr = reduce_translates(s);
  v.translation_overlap = tr.total - tr.covered;
  v.translation_gap = tr.span - tr.covered;
  v.translation_tiling =
      v.translation_overlap == RationalPi() && v.translation_gap == RationalPi();

  // A dyadic tiling must hit each point of R \ {0} exactly once, so s and 2s
  // are a.e. disjoint. Checking that first also rejects sets whose pieces
  // touch 0 (their dyadic reduction would never terminate).
  RationalPi self_overlap = s.intersect(s.dilate_pow2(1)).measure();
  if (self_overlap > RationalPi()) {
    v.dilation_overlap = self_overlap;
    v.dilation_tiling = false;
  } else {
    ReductionStats pos = reduce_dilates(s, +1);
    ReductionStats neg = reduce_dilates(s, -1);
    v.dilation_overlap = (pos.total - pos.covered) + (neg.total - neg.covered);
    v.dilation_gap = (pos.span - pos.covered) + (neg.span - neg.covered);
    v.dilation_tiling =
        v.dilation_overlap == RationalPi() && v.dilation_gap == RationalPi();
  }
  v.is_wavelet_set = v.translation_tiling && v.dilation_tiling;
  return v;
}

IntervalSet shannon_set() {
  RationalPi pi = RationalPi::of(1), two_pi = RationalPi::of(2);
  return IntervalSet::from_pieces({{-two_pi, -pi}, {pi, two_pi}});
}

IntervalSet journe_set() {
  auto r = [](long num) { return RationalPi::of(num, 7); };
  return IntervalSet::from_pieces(
      {{r(-32), r(-28)}, {r(-7), r(-4)}, {r(4), r(7)}, {r(28), r(32)}});
}

IntervalSet lemarie_set() {
  return wn_set(SnGeometry::make(3));
}

IntervalSet wn_set(const SnGeometry& g) {
  return IntervalSet::from_pieces({{-g.b, -g.a}, {g.a, g.e}, {g.c, g.d}});
}

IntervalSet fn_set(const SnGeometry& g) {
  RationalPi shift = RationalPi(rat_pow2(Rational(2), g.n - 1));  // 2^n * pi
  return IntervalSet::from_pieces({{-g.b, -g.a},
                                   {g.a.scaled_pow2(-1), g.e.scaled_pow2(-1)},
                                   {g.a, g.e},
                                   {g.c, g.d},
                                   {g.a + shift, g.e + shift}});
}

std::optional<IntervalSet> named_set(const std::string& key, int n) {
  if (key == "shannon") return shannon_set();
  if (key == "journe") return journe_set();
  if (key == "lemarie") return lemarie_set();
  if (key == "S_n") return SnGeometry::make(n).sn();
  if (key == "W_n") return wn_set(SnGeometry::make(n));
  if (key == "F_n") return fn_set(SnGeometry::make(n));
  return std::nullopt;
}

}  // namespace blwave
