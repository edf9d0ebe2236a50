#include <doctest.h>

#include <blwave/profiles.hpp>

#include <random>
#include <vector>

#include "test_util.hpp"

using namespace blwave;

namespace {

StepProfile random_profile(std::mt19937_64& rng) {
  std::vector<StepPiece> pieces;
  long cursor = -32 + static_cast<long>(rng() % 16);
  int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    long len = 1 + static_cast<long>(rng() % 12);
    long gap = static_cast<long>(rng() % 4);
    Rational v = rq(static_cast<long>(rng() % 9), 4);  // 0 .. 2, zeros allowed
    pieces.push_back({iv(cursor, 8, cursor + len, 8), v});
    cursor += len + gap;
  }
  return StepProfile::from_pieces(std::move(pieces));
}

}  // namespace

TEST_CASE("step profiles normalize and reject overlaps") {
  auto p = StepProfile::from_pieces({{iv(1, 1, 2, 1), rq(3)},
                                     {iv(0, 1, 1, 1), rq(3)},
                                     {iv(2, 1, 3, 1), rq(0)},
                                     {iv(4, 1, 4, 1), rq(7)}});
  REQUIRE(p.pieces().size() == 1);  // merge equal neighbors, drop zeros/empties
  CHECK(p.pieces()[0] == StepPiece{iv(0, 1, 2, 1), rq(3)});
  CHECK(p.value_at(rp(0)) == rq(3));
  CHECK(p.value_at(rp(2)) == rq(0));
  CHECK(p.integral() == rp(6));
  CHECK(p.support() == IntervalSet::single(iv(0, 1, 2, 1)));

  CHECK_THROWS_AS(StepProfile::from_pieces(
                      {{iv(0, 1, 2, 1), rq(1)}, {iv(1, 1, 3, 1), rq(2)}}),
                  std::invalid_argument);

  auto ind = StepProfile::indicator(
      IntervalSet::from_pieces({iv(0, 1, 1, 1), iv(2, 1, 3, 1)}));
  CHECK(ind.value_at(rp(1, 2)) == rq(1));
  CHECK(ind.value_at(rp(3, 2)) == rq(0));
  CHECK(ind.integral() == rp(2));

  auto c = StepProfile::constant_on(IntervalSet::single(iv(0, 1, 1, 2)), rq(1, 3));
  CHECK(c.integral() == rp(1, 6));
}

TEST_CASE("pullbacks satisfy their defining identities") {
  std::mt19937_64 rng(7130);
  for (int trial = 0; trial < 40; ++trial) {
    StepProfile p = random_profile(rng);
    StepProfile d = p.pullback_dilate(2);
    StepProfile t = p.pullback_translate(rp(5, 4));
    StepProfile m = p.pullback_negate();
    std::vector<RationalPi> bps = p.breakpoints();
    for (long u = -80; u <= 80; ++u) {
      RationalPi x = rp(u, 16);
      CHECK(d.value_at(x) == p.value_at(x.scaled_pow2(2)));
      CHECK(t.value_at(x) == p.value_at(x + rp(5, 4)));
      // Negation flips the half-open cells, so the pointwise identity
      // holds away from breakpoints of p only.
      bool on_edge = false;
      for (const auto& bp : bps) on_edge = on_edge || -x == bp;
      if (!on_edge) CHECK(m.value_at(x) == p.value_at(-x));
    }
    CHECK(p.pullback_dilate(3).pullback_dilate(-3) == p);
    CHECK(p.pullback_translate(rp(2)).pullback_translate(rp(-2)) == p);
    CHECK(p.pullback_negate().pullback_negate() == p);
    // Jacobian: r(x) = p(2^j x) integrates to 2^{-j} integral(p).
    CHECK(p.pullback_dilate(2).integral() == p.integral().scaled_pow2(-2));
    CHECK(p.pullback_translate(rp(5, 4)).integral() == p.integral());
  }
}

TEST_CASE("profile sums, scaling and restriction are pointwise") {
  std::mt19937_64 rng(7131);
  for (int trial = 0; trial < 40; ++trial) {
    StepProfile p = random_profile(rng);
    StepProfile q = random_profile(rng);
    StepProfile sum = p.add(q);
    StepProfile sc = p.scale(rq(-3, 2));
    Interval window = iv(-2, 1, 2, 1);
    StepProfile r = p.restrict_to(window);
    for (long u = -80; u <= 80; ++u) {
      RationalPi x = rp(u, 16);
      CHECK(sum.value_at(x) == p.value_at(x) + q.value_at(x));
      CHECK(sc.value_at(x) == p.value_at(x) * rq(-3, 2));
      CHECK(r.value_at(x) ==
            (window.contains(x) ? p.value_at(x) : rq(0)));
    }
    CHECK(p.scale(rq(0)).empty());
    CHECK(p.add(p.scale(rq(-1))).empty());
  }
}

TEST_CASE("constancy and range checks") {
  auto p = StepProfile::from_pieces(
      {{iv(0, 1, 1, 1), rq(1)}, {iv(1, 1, 2, 1), rq(1, 2)}});
  CHECK(p.equals_const_on(rq(1), iv(0, 1, 1, 1)));
  CHECK(p.equals_const_on(rq(1, 2), iv(1, 1, 2, 1)));
  CHECK_FALSE(p.equals_const_on(rq(1), iv(0, 1, 3, 2)));
  CHECK(p.equals_const_on(rq(0), iv(5, 1, 6, 1)));  // off-support is zero
  CHECK(StepProfile().equals_const_on(rq(0), iv(-1, 1, 1, 1)));
  CHECK(p.values_within(rq(1, 2), rq(1)));
  CHECK_FALSE(p.values_within(rq(3, 4), rq(1)));
  CHECK(p.values_within(rq(0), rq(1)));
}

TEST_CASE("phase profiles keep zero-turn pieces as explicit domain") {
  auto ph = PhaseProfile::from_pieces(
      {{iv(0, 1, 1, 1), PhasePi::of(rq(1))}, {iv(1, 1, 2, 1), PhasePi{}}});
  CHECK(ph.pieces().size() == 2);
  CHECK(ph.value_at(rp(1, 2)).turns == rq(1));
  CHECK(ph.value_at(rp(3, 2)).is_zero());
  CHECK(ph.value_at(rp(5, 2)).is_zero());  // off-domain reads as phase 0
  CHECK(ph.domain() == IntervalSet::single(iv(0, 1, 2, 1)));
  CHECK(ph.covers(IntervalSet::single(iv(1, 2, 3, 2))));
  CHECK_FALSE(ph.covers(IntervalSet::single(iv(3, 2, 5, 2))));

  auto neg = ph.pullback_negate();
  CHECK(neg.value_at(rp(-1, 2)).turns == rq(1));
  auto dil = ph.pullback_dilate(1);
  CHECK(dil.value_at(rp(1, 4)).turns == rq(1));
  auto tr = ph.pullback_translate(rp(2));
  CHECK(tr.value_at(rp(-3, 2)).turns == rq(1));
}

TEST_CASE("common refinement: two overlapping indicators") {
  StepProfile a = StepProfile::indicator(IntervalSet::single(iv(0, 1, 2, 1)));
  StepProfile b = StepProfile::indicator(IntervalSet::single(iv(1, 1, 3, 1)));
  std::vector<StepProfile> ps = {a, b};
  Refinement r = common_refinement(ps);
  REQUIRE(r.cell_count() == 3);
  CHECK(r.cell(0) == iv(0, 1, 1, 1));
  CHECK(r.cell(1) == iv(1, 1, 2, 1));
  CHECK(r.cell(2) == iv(2, 1, 3, 1));
  CHECK(r.values[0] == std::vector<Rational>{rq(1), rq(0)});
  CHECK(r.values[1] == std::vector<Rational>{rq(1), rq(1)});
  CHECK(r.values[2] == std::vector<Rational>{rq(0), rq(1)});
}

TEST_CASE("common refinement: skeleton pieces stay disjoint") {
  auto g = SnGeometry::make(3);
  std::vector<StepProfile> ps;
  for (SnPiece p : all_sn_pieces())
    ps.push_back(StepProfile::indicator(IntervalSet::single(sn_piece(g, p))));
  Refinement r = common_refinement(ps);
  // Six support cells plus the gaps between them, all inside the hull.
  int carrying = 0;
  for (size_t i = 0; i < r.cell_count(); ++i) {
    int nonzero = 0;
    for (const Rational& v : r.values[i])
      if (v != 0) ++nonzero;
    CHECK(nonzero <= 1);  // rows never overlap
    if (nonzero == 1) ++carrying;
  }
  CHECK(carrying == 6);
  CHECK(r.cuts.front() == -g.d);
  CHECK(r.cuts.back() == g.d);
}

TEST_CASE("common refinement agrees with a sort-and-sweep oracle") {
  std::mt19937_64 rng(7132);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<StepProfile> ps = {random_profile(rng), random_profile(rng),
                                   random_profile(rng)};
    Refinement r = common_refinement(ps);

    // Oracle: cuts = sorted distinct endpoints; values by midpoint lookup.
    std::vector<RationalPi> cuts;
    for (const auto& p : ps)
      for (const auto& b : p.breakpoints()) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    REQUIRE(r.cuts == cuts);
    size_t breakpoint_total = 0;
    for (const auto& p : ps) breakpoint_total += p.breakpoints().size();
    CHECK(r.cuts.size() <= breakpoint_total);

    for (size_t i = 0; i < r.cell_count(); ++i) {
      RationalPi mid = (r.cuts[i] + r.cuts[i + 1]).scaled(rq(1, 2));
      for (size_t k = 0; k < ps.size(); ++k) {
        CHECK(r.values[i][k] == ps[k].value_at(mid));
        // Constancy on the cell: both ends of the open cell agree with mid.
        RationalPi probe = r.cuts[i];
        CHECK(ps[k].value_at(probe) == r.values[i][k]);
      }
    }

    // Idempotence: refining a profile with itself yields its own breakpoints.
    std::vector<StepProfile> solo = {ps[0]};
    Refinement rs = common_refinement(solo);
    CHECK(rs.cuts == ps[0].breakpoints());
  }
}

TEST_CASE("translation lattice sum folds onto one period") {
  // chi of [-pi/2, pi/2): the two halves land at the ends of [0, 2pi).
  auto p = StepProfile::indicator(IntervalSet::single(iv(-1, 2, 1, 2)));
  auto q = translation_lattice_sum(p);
  auto expected = StepProfile::from_pieces(
      {{iv(0, 1, 1, 2), rq(1)}, {iv(3, 2, 2, 1), rq(1)}});
  CHECK(q == expected);

  // chi of [pi, 2pi) alone: one period sees just that interval.
  auto single = StepProfile::indicator(IntervalSet::single(iv(1, 1, 2, 1)));
  CHECK(translation_lattice_sum(single) == single);

  // The Shannon modulus sums to 1 on the whole period.
  auto shannon = StepProfile::indicator(shannon_set());
  CHECK(translation_lattice_sum(shannon)
            .equals_const_on(rq(1), iv(0, 1, 2, 1)));

  // Stacking: two copies overlapping after reduction add up.
  auto stacked = p.add(p.pullback_translate(rp(2)).scale(rq(1, 2)));
  auto qs = translation_lattice_sum(stacked);
  CHECK(qs.value_at(rp(1, 4)) == rq(3, 2));
  CHECK(qs.value_at(rp(7, 4)) == rq(3, 2));
  CHECK(qs.value_at(rp(1)) == rq(0));

  // Invariance under pre-translation by full periods.
  std::mt19937_64 rng(7133);
  for (int trial = 0; trial < 20; ++trial) {
    StepProfile r = random_profile(rng);
    CHECK(translation_lattice_sum(r.pullback_translate(rp(4))) ==
          translation_lattice_sum(r));
    CHECK(translation_lattice_sum(r.pullback_translate(rp(-6))) ==
          translation_lattice_sum(r));
  }
}

TEST_CASE("dyadic lattice sum on representative bands") {
  auto shannon = StepProfile::indicator(shannon_set());
  DyadicBands bands = dyadic_lattice_sum(shannon);
  CHECK(bands.alpha == rp(1));
  CHECK(bands.pos.equals_const_on(rq(1), iv(1, 1, 2, 1)));
  CHECK(bands.neg.equals_const_on(rq(1), iv(-2, 1, -1, 1)));

  // The W_3 indicator also tiles dyadically: its bands are constant 1.
  auto g = SnGeometry::make(3);
  auto w3 = StepProfile::indicator(wn_set(g));
  bands = dyadic_lattice_sum(w3);
  CHECK(bands.alpha == g.a);
  CHECK(bands.pos.equals_const_on(rq(1), {g.a, g.b}));
  CHECK(bands.neg.equals_const_on(rq(1), {-g.b, -g.a}));

  // A lone interval leaves part of its band uncovered.
  auto lone = StepProfile::indicator(IntervalSet::single(iv(1, 1, 3, 2)));
  bands = dyadic_lattice_sum(lone);
  CHECK(bands.alpha == rp(1));
  CHECK(bands.pos.value_at(rp(5, 4)) == rq(1));
  CHECK(bands.pos.value_at(rp(7, 4)) == rq(0));  // no octave of [pi,3pi/2) hits
  CHECK(bands.pos.support() == IntervalSet::single(iv(1, 1, 3, 2)));
  CHECK(bands.neg.empty());

  CHECK_THROWS_AS(dyadic_lattice_sum(StepProfile()), std::domain_error);
  CHECK_THROWS_AS(dyadic_lattice_sum(StepProfile::indicator(
                      IntervalSet::single(iv(0, 1, 1, 1)))),
                  std::domain_error);
  CHECK_THROWS_AS(dyadic_lattice_sum(StepProfile::indicator(
                      IntervalSet::single(iv(-1, 1, 1, 1)))),
                  std::domain_error);
}
