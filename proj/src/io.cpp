#include "blwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace blwave {

namespace {

Json rp(const RationalPi& x) { return x.str(); }
RationalPi rp_parse(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  return RationalPi::parse(j.get<std::string>());
}

Json rq(const Rational& x) { return rat_to_string(x); }
Rational rq_parse(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  return rat_from_string(j.get<std::string>());
}

// Integers are emitted as JSON numbers when they fit, otherwise as strings.
Json rq_compact(const Rational& x) {
  if (rat_is_integer(x) && x.get_num().fits_slong_p())
    return rat_to_long(x);
  return rat_to_string(x);
}

}  // namespace

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", rp(iv.lo)}, {"hi", rp(iv.hi)}};
}

Interval interval_from_json(const Json& j) {
  return {rp_parse(j.at("lo")), rp_parse(j.at("hi"))};
}

Json interval_set_to_json(const IntervalSet& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces())
    pieces.push_back(Json::array({rp(p.lo), rp(p.hi)}));
  return Json{{"pieces", pieces}};
}

IntervalSet interval_set_from_json(const Json& j) {
  std::vector<Interval> pieces;
  for (const auto& p : j.at("pieces"))
    pieces.push_back({rp_parse(p.at(0)), rp_parse(p.at(1))});
  return IntervalSet::from_pieces(std::move(pieces));
}

Json step_profile_to_json(const StepProfile& p) {
  Json pieces = Json::array();
  for (const auto& piece : p.pieces())
    pieces.push_back(Json{{"lo", rp(piece.span.lo)},
                          {"hi", rp(piece.span.hi)},
                          {"value", rq(piece.value)}});
  return Json{{"pieces", pieces}};
}

StepProfile step_profile_from_json(const Json& j) {
  std::vector<StepPiece> pieces;
  for (const auto& p : j.at("pieces"))
    pieces.push_back({{rp_parse(p.at("lo")), rp_parse(p.at("hi"))},
                      rq_parse(p.at("value"))});
  return StepProfile::from_pieces(std::move(pieces));
}

Json phase_profile_to_json(const PhaseProfile& p) {
  Json pieces = Json::array();
  for (const auto& piece : p.pieces())
    pieces.push_back(Json{{"lo", rp(piece.span.lo)},
                          {"hi", rp(piece.span.hi)},
                          {"turns", rq(piece.turns.turns)}});
  return Json{{"pieces", pieces}};
}

PhaseProfile phase_profile_from_json(const Json& j) {
  std::vector<PhasePiece> pieces;
  for (const auto& p : j.at("pieces"))
    pieces.push_back({{rp_parse(p.at("lo")), rp_parse(p.at("hi"))},
                      PhasePi::of(rq_parse(p.at("turns")))});
  return PhaseProfile::from_pieces(std::move(pieces));
}

Json descriptor_to_json(const Descriptor& d) {
  Json j;
  j["schema"] = 1;
  j["mode"] = "exact-step";
  j["family"] = d.w.family;
  j["n"] = d.w.param_n ? Json(*d.w.param_n) : Json(nullptr);
  j["p"] = d.w.param_p ? Json(*d.w.param_p) : Json(nullptr);
  j["seed"] = d.w.seed ? Json(*d.w.seed) : Json(nullptr);
  j["notes"] = d.w.notes;
  j["skeleton"] = d.w.n ? Json(*d.w.n) : Json(nullptr);
  j["mag2"] = step_profile_to_json(d.w.mag2);
  j["phase"] = phase_profile_to_json(d.w.phase);
  if (d.marked_cell) j["marked_cell"] = interval_to_json(*d.marked_cell);
  if (d.verified) j["verified"] = true;
  return j;
}

Descriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("descriptor must be an object");
  if (!j.contains("schema") || j.at("schema") != 1)
    throw std::invalid_argument("unsupported descriptor schema");
  if (j.value("mode", "") != "exact-step")
    throw std::invalid_argument("unsupported descriptor mode");
  Descriptor d;
  d.w.mag2 = step_profile_from_json(j.at("mag2"));
  d.w.phase = phase_profile_from_json(j.at("phase"));
  d.w.family = j.value("family", "");
  if (j.contains("n") && !j.at("n").is_null()) d.w.param_n = j.at("n").get<int>();
  if (j.contains("p") && !j.at("p").is_null()) d.w.param_p = j.at("p").get<int>();
  if (j.contains("seed") && !j.at("seed").is_null())
    d.w.seed = j.at("seed").get<std::uint64_t>();
  d.w.notes = j.value("notes", "");
  if (j.contains("skeleton") && !j.at("skeleton").is_null()) {
    int n = j.at("skeleton").get<int>();
    if (!d.w.support().subset_of(SnGeometry::make(n).sn()))
      throw std::invalid_argument(
          "declared skeleton index does not contain the support");
    d.w.n = n;
  }
  if (j.contains("marked_cell"))
    d.marked_cell = interval_from_json(j.at("marked_cell"));
  d.verified = j.value("verified", false);
  return d;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["mode"] = "exact";
  j["verdict"] = r.verdict();
  j["numeric_assisted"] = r.numeric_assisted;
  j["norm_sq"] = rq(r.norm_sq);
  j["norm_ok"] = r.norm_ok;
  j["eq1"] = Json{{"ok", r.eq1_ok},
                  {"alpha", rp(r.rho.alpha)},
                  {"pos", step_profile_to_json(r.rho.pos)},
                  {"neg", step_profile_to_json(r.rho.neg)}};
  Json w2 = Json::array();
  for (const auto& w : r.eq2_witnesses)
    w2.push_back(Json{{"m", w.m},
                      {"cell", interval_to_json(w.cell)},
                      {"residual", w.residual},
                      {"exact", w.exact}});
  j["eq2"] = Json{{"ok", r.eq2_ok}, {"witnesses", w2}};
  j["eq3"] = Json{{"ok", r.eq3_ok}, {"profile", step_profile_to_json(r.eq3_profile)}};
  Json w4 = Json::array();
  for (const auto& w : r.eq4_witnesses)
    w4.push_back(Json{{"j", w.j},
                      {"cell", interval_to_json(w.cell)},
                      {"residual", w.residual},
                      {"exact", w.exact}});
  j["eq4"] = Json{{"ok", r.eq4_ok}, {"witnesses", w4}};
  if (r.thm32) {
    Json t;
    t["i"] = r.thm32->i;
    t["ii"] = r.thm32->ii;
    t["iii"] = r.thm32->iii;
    t["iv"] = r.thm32->iv;
    t["v"] = r.thm32->v;
    t["all"] = r.thm32->all();
    Json cells = Json::array();
    for (const auto& c : r.thm32->theta.cells)
      cells.push_back(Json{{"cell", interval_to_json(c.cell)}, {"m", c.m}});
    t["theta_cells"] = cells;
    t["theta_violation"] = r.thm32->theta.violation
                               ? interval_to_json(*r.thm32->theta.violation)
                               : Json(nullptr);
    j["thm32"] = t;
  } else {
    j["thm32"] = nullptr;
  }
  return j;
}

Json numeric_report_to_json(const NumericReport& r) {
  return Json{{"mode", "numeric"},
              {"grid_step", r.grid_step},
              {"tolerance", r.tolerance},
              {"verdict", r.verdict()},
              {"residuals", Json{{"norm", r.norm_residual},
                                 {"eq1", r.eq1_residual},
                                 {"eq2", r.eq2_residual},
                                 {"eq3", r.eq3_residual},
                                 {"eq4", r.eq4_residual}}}};
}

Json dimension_to_json(const DimensionProfile& d) {
  Json j = step_profile_to_json(d.profile);
  j["max"] = rq_compact(d.max_value);
  Json attained = Json::array();
  for (const auto& v : d.attained) attained.push_back(rq_compact(v));
  j["attained"] = attained;
  j["integer_valued"] = d.integer_valued;
  j["is_mra"] = d.is_mra;
  return j;
}

Json class_label_to_json(const ClassLabel& label) {
  Json j;
  j["class"] = label.name();
  Json wits = Json::array();
  if (label.witness)
    wits.push_back(Json{{"alpha", rp(label.witness->alpha)},
                        {"f", interval_set_to_json(label.witness->f)},
                        {"measure", rp(label.witness->f.measure())}});
  j["witnesses"] = wits;
  Json refs = Json::array();
  for (const auto& r : label.refuted)
    refs.push_back(Json{{"level", r.level}, {"probes", r.probes}});
  j["refuted"] = refs;
  j["note"] = label.note;
  return j;
}

Json wavelet_set_verdict_to_json(const WaveletSetVerdict& v) {
  return Json{{"is_wavelet_set", v.is_wavelet_set},
              {"translation_tiling", v.translation_tiling},
              {"dilation_tiling", v.dilation_tiling},
              {"measure", rp(v.measure)},
              {"translation_overlap", rp(v.translation_overlap)},
              {"translation_gap", rp(v.translation_gap)},
              {"dilation_overlap", rp(v.dilation_overlap)},
              {"dilation_gap", rp(v.dilation_gap)}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dimension_csv(const DimensionProfile& d) {
  RationalPi zero{Rational(0)}, pi_{Rational(1)};
  StepProfile half = d.profile.restrict_to(Interval{zero, pi_});
  std::ostringstream out;
  out << "lo_over_pi,hi_over_pi,value,lo,hi,value_decimal\n";
  auto row = [&](const RationalPi& lo, const RationalPi& hi, const Rational& v) {
    out << lo.str() << ',' << hi.str() << ',' << rat_to_string(v) << ','
        << format_double(lo.to_double()) << ',' << format_double(hi.to_double())
        << ',' << format_double(rat_to_double(v)) << '\n';
  };
  RationalPi cursor = zero;
  for (const auto& p : half.pieces()) {
    if (cursor < p.span.lo) row(cursor, p.span.lo, Rational(0));
    row(p.span.lo, p.span.hi, p.value);
    cursor = p.span.hi;
  }
  if (cursor < pi_) row(cursor, pi_, Rational(0));
  return out.str();
}

std::string time_samples_csv(const TimeSamples& t) {
  std::ostringstream out;
  out << "x,re_psi,im_psi\n";
  for (size_t i = 0; i < t.xs.size(); ++i)
    out << format_double(t.xs[i]) << ',' << format_double(t.values[i].real())
        << ',' << format_double(t.values[i].imag()) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace blwave
