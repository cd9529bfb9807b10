#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <json.hpp>

#include "approx_identity.hpp"
#include "estimator.hpp"

namespace weakconv {

// Ordered objects so identical inputs serialize byte-identically.
using ReportJson = nlohmann::ordered_json;

// Shared envelope: {"tool":"weakconv","version":...,"kind":...,
// "group":{"label","order","weight"}}.  Every report starts from this.
ReportJson report_envelope(const std::string& kind, const GroupPtr& g);

// {weak, strong, lorentz, distribution_samples:[{alpha,mass}...]} for the
// requested p and q (q = inf selects the weak quasi-norm; samples are taken
// at alpha = 0 and every distinct |f| value, ascending).
ReportJson norm_report(const GroupFunction& f, double p, double q);

// Small summary for a computed convolution/multiplier output: L1, L2 and
// sup norms plus where the result was written.
ReportJson output_summary_report(const std::string& kind,
                                 const GroupFunction& result,
                                 const std::string& out_path);

// Member table (epsilon, L1, integral) and, when `verify` is non-null, the
// full window/deviation breakdown with the monotonicity flags.
ReportJson fejer_report(const ApproxIdentityFamily& family,
                        const Lemma1Report* verify,
                        std::span<const double> window_radii);

// Per-side operator-norm estimates for one kernel.  Pass nullptr for a side
// that was not estimated; witnesses are inlined only when include_witness.
ReportJson estimate_report(const GroupPtr& g, std::uint64_t seed,
                           const NormEstimate* left, const NormEstimate* right,
                           bool include_witness);

ReportJson verify_report(const TheoremReport& report);

std::string render_json(const ReportJson& j);

// Lossy flattening: one header line and one value line, keys joined with
// dots, arrays indexed, numbers at 17 significant digits.
std::string render_csv(const ReportJson& j);

}  // namespace weakconv
