#pragma once

#include <json.hpp>

#include "blwave/classes.hpp"
#include "blwave/dimension.hpp"
#include "blwave/numeric_verify.hpp"
#include "blwave/time_domain.hpp"
#include "blwave/verifier.hpp"

namespace blwave {

using Json = nlohmann::json;

// On-disk form of a candidate plus bookkeeping. All rational values are
// serialized as strings ("p/q" coefficients of pi), never floats, so a
// round-trip is exact.
struct Descriptor {
  FrequencyWavelet w;
  std::optional<Interval> marked_cell;  // broken candidates
  bool verified = false;                // set by a successful verify run
};

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);
Json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);
Json step_profile_to_json(const StepProfile& p);
StepProfile step_profile_from_json(const Json& j);
Json phase_profile_to_json(const PhaseProfile& p);
PhaseProfile phase_profile_from_json(const Json& j);

// Descriptor schema 1. Parsing validates the schema number, rebuilds the
// profiles, and re-checks the declared skeleton index against the support
// (mismatch is a parse error). Throws std::invalid_argument on malformed
// input.
Json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const Json& j);

Json verification_to_json(const VerificationReport& r);
Json numeric_report_to_json(const NumericReport& r);
Json dimension_to_json(const DimensionProfile& d);
Json class_label_to_json(const ClassLabel& label);
Json wavelet_set_verdict_to_json(const WaveletSetVerdict& v);

// CSV of the dimension profile over [0, pi) (the profile is even), zero
// cells included: lo_over_pi, hi_over_pi, value, lo, hi, value_decimal.
std::string dimension_csv(const DimensionProfile& d);
// CSV of time samples: x, re_psi, im_psi, 17 significant digits.
std::string time_samples_csv(const TimeSamples& t);

std::string format_double(double v);  // 17 significant digits

// Throw std::runtime_error with the path on failure.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace blwave
