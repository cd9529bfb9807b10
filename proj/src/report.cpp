#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "convolution.hpp"
#include "errors.hpp"
#include "lorentz.hpp"
#include "version.hpp"

namespace weakconv {

namespace {

ReportJson complex_pair(const cplx& z) {
  return ReportJson::array({z.real(), z.imag()});
}

ReportJson function_values(const GroupFunction& f) {
  ReportJson out = ReportJson::array();
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(complex_pair(f[i]));
  return out;
}

ReportJson estimate_side_json(const NormEstimate& e, bool include_witness) {
  ReportJson side;
  side["trials"] = e.trials;
  side["lower"] = e.lower;
  side["upper_constant"] = e.upper_constant;
  side["upper_bound"] = e.upper_bound;
  side["ratio"] = e.kernel_weak_norm > 0.0 ? e.lower / e.kernel_weak_norm
                                           : 1.0;
  side["witness_kind"] = e.witness_kind;
  if (include_witness && e.witness.has_value())
    side["witness"] = function_values(*e.witness);
  side["trivial"] = e.trivial;
  side["lower_bound_ok"] = e.lower_bound_ok;
  side["sandwich_ok"] = e.sandwich_ok;
  return side;
}

void flatten(const ReportJson& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  const auto scalar = [&](const ReportJson& v) -> std::string {
    if (v.is_number_float()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();  // integers, booleans, null
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "." + std::to_string(i), cells);
  } else {
    cells.emplace_back(prefix, scalar(j));
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

ReportJson report_envelope(const std::string& kind, const GroupPtr& g) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "report_envelope: null group");
  ReportJson j;
  j["tool"] = "weakconv";
  j["version"] = kVersion;
  j["kind"] = kind;
  j["group"]["label"] = g->label();
  j["group"]["order"] = g->order();
  j["group"]["weight"] = g->weight();
  return j;
}

ReportJson norm_report(const GroupFunction& f, double p, double q) {
  ReportJson j = report_envelope("norm", f.group());
  j["p"] = p;
  if (std::isinf(q))
    j["q"] = "inf";
  else
    j["q"] = q;
  j["weak"] = weak_norm(f, p);
  j["strong"] = strong_norm(f, p);
  j["lorentz"] = lorentz_norm(f, {p, q});
  j["sup"] = sup_norm(f);

  std::vector<double> alphas{0.0};
  alphas.reserve(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) alphas.push_back(std::abs(f[i]));
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  const Rearrangement r = decreasing_rearrangement(f);
  ReportJson samples = ReportJson::array();
  for (const double a : alphas)
    samples.push_back({{"alpha", a}, {"mass", distribution_function(r, a)}});
  j["distribution_samples"] = std::move(samples);
  return j;
}

ReportJson output_summary_report(const std::string& kind,
                                 const GroupFunction& result,
                                 const std::string& out_path) {
  ReportJson j = report_envelope(kind, result.group());
  j["output"] = out_path;
  j["l1"] = strong_norm(result, 1.0);
  j["l2"] = strong_norm(result, 2.0);
  j["sup"] = sup_norm(result);
  return j;
}

ReportJson fejer_report(const ApproxIdentityFamily& family,
                        const Lemma1Report* verify,
                        std::span<const double> window_radii) {
  ReportJson j = report_envelope("fejer", family.group);
  j["family"] = family.kind == ApproxIdentityFamily::Kind::Fejer
                    ? "fejer"
                    : "exact_point_mass";
  j["l1_constant"] = family.l1_constant;

  ReportJson members = ReportJson::array();
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    ReportJson jm;
    jm["epsilon"] = family.epsilons[m];
    if (verify) {
      const Lemma1MemberStats& st = verify->members[m];
      jm["l1_norm"] = st.l1_norm;
      jm["integral"] = st.integral;
      jm["tail_mass"] = st.tail_mass;
      jm["lp_deviation"] = st.lp_deviation;
      jm["sup_deviation"] = st.sup_deviation;
    } else {
      jm["l1_norm"] = strong_norm(family.members[m], 1.0);
      double integral = 0.0;
      for (std::size_t i = 0; i < family.members[m].size(); ++i)
        integral += family.members[m][i].real();
      jm["integral"] = integral * family.group->weight();
    }
    members.push_back(std::move(jm));
  }
  j["members"] = std::move(members);

  if (verify) {
    ReportJson v;
    v["p"] = verify->p;
    v["window_radii"] = std::vector<double>(window_radii.begin(),
                                            window_radii.end());
    v["window_sizes"] = verify->window_sizes;
    v["integrals_ok"] = verify->integrals_ok;
    v["l1_ok"] = verify->l1_ok;
    v["tails_decreasing"] = verify->tails_decreasing;
    v["deviations_decreasing"] = verify->deviations_decreasing;
    v["ok"] = verify->ok;
    j["verify"] = std::move(v);
  }
  return j;
}

ReportJson estimate_report(const GroupPtr& g, std::uint64_t seed,
                           const NormEstimate* left, const NormEstimate* right,
                           bool include_witness) {
  require(left != nullptr || right != nullptr, ErrorCode::InvalidArgument,
          "estimate_report: no sides");
  ReportJson j = report_envelope("estimate", g);
  const NormEstimate* any = left ? left : right;
  j["seed"] = seed;
  j["p"] = any->p;
  j["kernel_weak_norm"] = any->kernel_weak_norm;
  j["trivial"] = any->trivial;
  bool ok = true;
  if (left) {
    j["left"] = estimate_side_json(*left, include_witness);
    ok = ok && left->lower_bound_ok && left->sandwich_ok;
  }
  if (right) {
    j["right"] = estimate_side_json(*right, include_witness);
    ok = ok && right->lower_bound_ok && right->sandwich_ok;
  }
  j["ok"] = ok;
  return j;
}

ReportJson verify_report(const TheoremReport& report) {
  ReportJson j = report_envelope("verify-theorem1", report.group);
  j["seed"] = report.seed;
  j["side"] = side_name(report.side);
  j["kernel_count"] = report.kernel_count;
  j["trials"] = report.trials;

  ReportJson runs = ReportJson::array();
  for (const TheoremRun& run : report.runs) {
    ReportJson jr;
    jr["p"] = run.p;
    jr["upper_constant"] = run.upper_constant;
    ReportJson kernels = ReportJson::array();
    for (const TheoremKernelSummary& k : run.kernels) {
      kernels.push_back({{"kernel_index", k.kernel_index},
                         {"kernel_weak_norm", k.kernel_weak_norm},
                         {"lower", k.lower},
                         {"upper_bound", k.upper_bound},
                         {"ratio", k.ratio},
                         {"witness_kind", k.witness_kind},
                         {"lower_bound_ok", k.lower_bound_ok},
                         {"sandwich_ok", k.sandwich_ok}});
    }
    jr["kernels"] = std::move(kernels);
    jr["weak_young"] = {{"pairs", run.weak_young_pairs},
                        {"max_ratio", run.weak_young_max},
                        {"argmax_pair", run.weak_young_argmax}};
    jr["kernels_ok"] = run.kernels_ok;
    jr["weak_young_ok"] = run.weak_young_ok;
    jr["ok"] = run.ok;
    runs.push_back(std::move(jr));
  }
  j["runs"] = std::move(runs);
  j["all_ok"] = report.all_ok;
  return j;
}

std::string render_json(const ReportJson& j) { return j.dump(2) + "\n"; }

std::string render_csv(const ReportJson& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::string header, values;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      header += ',';
      values += ',';
    }
    header += csv_quote(cells[i].first);
    values += csv_quote(cells[i].second);
  }
  return header + "\n" + values + "\n";
}

}  // namespace weakconv
