#include <doctest.h>

#include <blwave/frequency_sets.hpp>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace blwave;

namespace {

// Membership oracle on a fine rational lattice: half-open semantics make the
// sampled points at piece endpoints decisive.
bool same_membership(const IntervalSet& got, auto&& want, long lo16,
                     long hi16) {
  for (long t = lo16; t <= hi16; ++t) {
    RationalPi x = rp(t, 16);
    if (got.contains(x) != want(x)) return false;
  }
  return true;
}

IntervalSet random_set(std::mt19937_64& rng) {
  std::vector<Interval> pieces;
  int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    long lo = static_cast<long>(rng() % 65) - 32;  // lo/8 in [-4, 4]
    long len = 1 + static_cast<long>(rng() % 16);
    pieces.push_back(iv(lo, 8, lo + len, 8));
  }
  return IntervalSet::from_pieces(std::move(pieces));
}

}  // namespace

TEST_CASE("intervals are half-open") {
  Interval i = iv(1, 2, 3, 2);
  CHECK(i.contains(rp(1, 2)));
  CHECK(i.contains(rp(1)));
  CHECK_FALSE(i.contains(rp(3, 2)));
  CHECK(i.length() == rp(1));
  CHECK(iv(1, 1, 1, 1).empty());
  CHECK(iv(2, 1, 1, 1).empty());
  CHECK(intersect(iv(0, 1, 2, 1), iv(1, 1, 3, 1)) == iv(1, 1, 2, 1));
  CHECK(intersect(iv(0, 1, 1, 1), iv(1, 1, 2, 1)).empty());
}

TEST_CASE("interval sets normalize to sorted disjoint merged pieces") {
  auto s = IntervalSet::from_pieces(
      {iv(2, 1, 3, 1), iv(0, 1, 1, 1), iv(1, 1, 2, 1), iv(5, 1, 5, 1)});
  REQUIRE(s.pieces().size() == 1);  // touching pieces coalesce, empties drop
  CHECK(s.pieces()[0] == iv(0, 1, 3, 1));
  CHECK(s.measure() == rp(3));

  auto t = IntervalSet::from_pieces({iv(0, 1, 2, 1), iv(1, 1, 3, 1)});
  REQUIRE(t.pieces().size() == 1);  // overlapping pieces merge
  CHECK(t.pieces()[0] == iv(0, 1, 3, 1));

  auto u = IntervalSet::from_pieces({iv(0, 1, 1, 1), iv(2, 1, 3, 1)});
  CHECK(u.pieces().size() == 2);
  CHECK(u.measure() == rp(2));
  CHECK(u.contains(rp(0)));
  CHECK_FALSE(u.contains(rp(1)));
  CHECK(u.contains(rp(2)));
  CHECK_FALSE(u.contains(rp(3)));
}

TEST_CASE("set algebra agrees with pointwise membership") {
  std::mt19937_64 rng(20260813);
  for (int trial = 0; trial < 60; ++trial) {
    IntervalSet a = random_set(rng);
    IntervalSet b = random_set(rng);
    auto in_union = [&](const RationalPi& x) {
      return a.contains(x) || b.contains(x);
    };
    auto in_meet = [&](const RationalPi& x) {
      return a.contains(x) && b.contains(x);
    };
    auto in_diff = [&](const RationalPi& x) {
      return a.contains(x) && !b.contains(x);
    };
    CHECK(same_membership(a.unite(b), in_union, -70, 70));
    CHECK(same_membership(a.intersect(b), in_meet, -70, 70));
    CHECK(same_membership(a.difference(b), in_diff, -70, 70));

    // Inclusion-exclusion on measures.
    CHECK(a.measure() + b.measure() ==
          a.unite(b).measure() + a.intersect(b).measure());
    CHECK(a.difference(b).subset_of(a));
    CHECK(a.intersect(b).subset_of(b));
    CHECK(a.subset_of(a.unite(b)));
  }
}

TEST_CASE("images under dilation, translation, negation") {
  auto s = IntervalSet::from_pieces({iv(-3, 2, -1, 2), iv(1, 4, 2, 1)});
  CHECK(s.dilate_pow2(1).measure() == s.measure().scaled_pow2(1));
  CHECK(s.dilate_pow2(-3).dilate_pow2(3) == s);
  CHECK(s.translate(rp(5, 3)).translate(rp(-5, 3)) == s);
  CHECK(s.negate().negate() == s);
  CHECK(s.negate().pieces()[1] == iv(1, 2, 3, 2));

  for (long t = -40; t <= 40; ++t) {
    RationalPi x = rp(t, 8);
    CHECK(s.dilate_pow2(2).contains(x.scaled_pow2(2)) == s.contains(x));
    CHECK(s.translate(rp(7, 8)).contains(x + rp(7, 8)) == s.contains(x));
    // Negation reverses orientation, so the half-open convention flips
    // membership exactly at piece endpoints; the identity is a.e. only.
    bool on_edge = false;
    for (const auto& piece : s.pieces())
      on_edge = on_edge || x == piece.lo || x == piece.hi;
    if (!on_edge) CHECK(s.negate().contains(-x) == s.contains(x));
  }

  CHECK(s.inf() == rp(-3, 2));
  CHECK(s.sup() == rp(2));
  CHECK(s.sup_abs() == rp(2));
  CHECK(IntervalSet::single(iv(-5, 1, -4, 1)).sup_abs() == rp(5));
}

TEST_CASE("smallest positive endpoint distance to zero") {
  auto s = IntervalSet::from_pieces({iv(-2, 1, -1, 1), iv(1, 2, 1, 1)});
  REQUIRE(s.min_abs_gap().has_value());
  CHECK(*s.min_abs_gap() == rp(1, 2));

  CHECK_FALSE(IntervalSet::single(iv(0, 1, 1, 1)).min_abs_gap().has_value());
  CHECK_FALSE(IntervalSet::single(iv(-1, 1, 1, 1)).min_abs_gap().has_value());
  CHECK_FALSE(IntervalSet::single(iv(-1, 1, 0, 1)).min_abs_gap().has_value());
  REQUIRE(IntervalSet::single(iv(-3, 1, -2, 1)).min_abs_gap().has_value());
  CHECK(*IntervalSet::single(iv(-3, 1, -2, 1)).min_abs_gap() == rp(2));
  CHECK_THROWS_AS(IntervalSet().inf(), std::domain_error);
}

TEST_CASE("skeleton endpoints at n = 3 and the degenerate n = 2") {
  auto g = SnGeometry::make(3);
  CHECK(g.a == rp(4, 7));
  CHECK(g.b == rp(8, 7));
  CHECK(g.e == rp(6, 7));
  CHECK(g.c == rp(24, 7));
  CHECK(g.d == rp(32, 7));
  CHECK(g.sn().measure() == rp(24, 7));
  CHECK(g.bell_window() == iv(6, 7, 8, 7));

  // Structural identities used throughout the window conditions.
  CHECK(g.e - rp(2) == -g.b);
  CHECK(g.e + g.b == rp(2));
  CHECK(g.c == g.e.scaled_pow2(2));
  CHECK(g.d == g.a.scaled_pow2(3));
  CHECK(g.b == g.a.scaled_pow2(1));

  auto g2 = SnGeometry::make(2);
  CHECK(g2.a == rp(2, 3));
  CHECK(g2.e == g2.a);  // bell window collapses
  CHECK(g2.b == g2.c);  // the two positive pieces touch
  CHECK(g2.sn().measure() == rp(4));
  CHECK(g2.sn().pieces().size() == 2);  // [-d,-a) u [a,d)

  for (int n = 3; n <= 10; ++n) {
    auto gn = SnGeometry::make(n);
    long den = (1L << n) - 1;
    CHECK(gn.sn().measure() == rp(2 * ((1L << (n - 1)) + (1L << n)), den));
    CHECK(gn.e - rp(2) == -gn.b);
    CHECK(IntervalSet::single(gn.bell_window()).dilate_pow2(n - 1) ==
          IntervalSet::single({gn.c, gn.d}));
  }

  CHECK_THROWS_AS(SnGeometry::make(1), std::invalid_argument);
  CHECK_THROWS_AS(SnGeometry::make(63), std::invalid_argument);
}

TEST_CASE("six-piece partition of the skeleton") {
  for (int n : {3, 4, 7}) {
    auto g = SnGeometry::make(n);
    IntervalSet whole;
    RationalPi total;
    for (SnPiece p : all_sn_pieces()) {
      Interval piece = sn_piece(g, p);
      CHECK_FALSE(piece.empty());
      CHECK(IntervalSet::single(piece).intersect(whole).empty());
      whole = whole.unite(IntervalSet::single(piece));
      total = total + piece.length();
    }
    CHECK(whole == g.sn());
    CHECK(total == g.sn().measure());
  }
  CHECK(std::string(sn_piece_name(SnPiece::AE)) == "[a,e)");
}

TEST_CASE("admissible translations and dilations match the piece table") {
  for (int n : {3, 4, 5, 6}) {
    auto g = SnGeometry::make(n);
    long half = 1L << (n - 1);

    auto m = admissible_moves(g, SnPiece::AE);
    CHECK(m.ks == std::vector<long>{0});
    CHECK(m.js == std::vector<int>{0});

    m = admissible_moves(g, SnPiece::EB);
    CHECK(m.ks == std::vector<long>{-1, 0});
    CHECK(m.js == std::vector<int>{0, n - 1});

    m = admissible_moves(g, SnPiece::CD);
    CHECK(m.ks == std::vector<long>{-half, 0});
    CHECK(m.js == std::vector<int>{-(n - 1), 0});

    m = admissible_moves(g, SnPiece::NegEA);
    CHECK(m.ks == std::vector<long>{0});
    CHECK(m.js == std::vector<int>{0});

    m = admissible_moves(g, SnPiece::NegBE);
    CHECK(m.ks == std::vector<long>{0, 1});
    CHECK(m.js == std::vector<int>{0, n - 1});

    m = admissible_moves(g, SnPiece::NegDC);
    CHECK(m.ks == std::vector<long>{0, half});
    CHECK(m.js == std::vector<int>{-(n - 1), 0});
  }
  CHECK_THROWS_AS(admissible_moves(SnGeometry::make(2), SnPiece::AE),
                  std::invalid_argument);
}

TEST_CASE("admissible moves agree with brute-force overlap search") {
  for (int n : {3, 4}) {
    auto g = SnGeometry::make(n);
    IntervalSet sn = g.sn();
    for (SnPiece p : all_sn_pieces()) {
      IntervalSet piece = IntervalSet::single(sn_piece(g, p));
      auto moves = admissible_moves(g, p);

      std::vector<long> ks;
      for (long k = -(1L << (n + 1)); k <= (1L << (n + 1)); ++k)
        if (!piece.translate(rp(2 * k)).intersect(sn).empty()) ks.push_back(k);
      CHECK(ks == moves.ks);

      std::vector<int> js;
      for (int j = -(n + 2); j <= n + 2; ++j)
        if (!piece.dilate_pow2(j).intersect(sn).empty()) js.push_back(j);
      CHECK(js == moves.js);
    }
  }
}

TEST_CASE("wavelet-set tiling checks") {
  auto shannon = shannon_set();
  auto v = wavelet_set_check(shannon);
  CHECK(v.is_wavelet_set);
  CHECK(v.translation_tiling);
  CHECK(v.dilation_tiling);
  CHECK(v.measure == rp(2));
  CHECK(v.translation_overlap == rp(0));
  CHECK(v.dilation_gap == rp(0));

  v = wavelet_set_check(journe_set());
  CHECK(v.is_wavelet_set);
  CHECK(v.measure == rp(2));

  v = wavelet_set_check(lemarie_set());
  CHECK(v.is_wavelet_set);
  CHECK(v.measure == rp(2));

  // The full skeleton is too big to tile.
  auto g = SnGeometry::make(3);
  v = wavelet_set_check(g.sn());
  CHECK_FALSE(v.is_wavelet_set);
  CHECK(v.measure == rp(24, 7));
  CHECK_FALSE(v.translation_tiling);

  // [0, 2pi) translation-tiles but piles up under dilation.
  v = wavelet_set_check(IntervalSet::single(iv(0, 1, 2, 1)));
  CHECK(v.translation_tiling);
  CHECK_FALSE(v.dilation_tiling);
  CHECK_FALSE(v.is_wavelet_set);

  // Empty set: total gaps.
  v = wavelet_set_check(IntervalSet());
  CHECK_FALSE(v.is_wavelet_set);
  CHECK(v.translation_gap == rp(2));
}

TEST_CASE("named sets resolve by key") {
  CHECK(*named_set("shannon", 7) == shannon_set());
  CHECK(*named_set("journe", 3) == journe_set());
  CHECK(*named_set("lemarie", 5) == lemarie_set());
  auto g = SnGeometry::make(4);
  CHECK(*named_set("S_n", 4) == g.sn());
  CHECK(*named_set("W_n", 4) == wn_set(g));
  CHECK(*named_set("F_n", 4) == fn_set(g));
  CHECK_FALSE(named_set("meyer", 3).has_value());

  // The Lemarie set is the n = 3 instance of the W family.
  CHECK(lemarie_set() == wn_set(SnGeometry::make(3)));

  auto j = journe_set().pieces();
  REQUIRE(j.size() == 4);
  CHECK(j[0] == iv(-32, 7, -28, 7));
  CHECK(j[1] == iv(-1, 1, -4, 7));
  CHECK(j[2] == iv(4, 7, 1, 1));
  CHECK(j[3] == iv(4, 1, 32, 7));
}
