#include "weakconv/weakconv.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "approx_identity.hpp"
#include "convolution.hpp"
#include "errors.hpp"
#include "estimator.hpp"
#include "fourier.hpp"
#include "function.hpp"
#include "group.hpp"
#include "io.hpp"
#include "lorentz.hpp"
#include "report.hpp"
#include "version.hpp"

using namespace weakconv;

struct wc_group {
  GroupPtr g;
};

struct wc_function {
  GroupFunction f;
};

namespace {

thread_local std::string t_last_error;

wc_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return WC_INVALID_ARGUMENT;
    case ErrorCode::Validation:
      return WC_VALIDATION;
    case ErrorCode::Capacity:
      return WC_CAPACITY;
    case ErrorCode::DomainMismatch:
      return WC_DOMAIN_MISMATCH;
    case ErrorCode::UnsupportedGroup:
      return WC_UNSUPPORTED_GROUP;
    case ErrorCode::DegenerateInput:
      return WC_DEGENERATE_INPUT;
    case ErrorCode::Io:
      return WC_IO;
    case ErrorCode::Parse:
      return WC_PARSE;
    case ErrorCode::Internal:
      return WC_INTERNAL;
  }
  return WC_INTERNAL;
}

template <class Fn>
wc_status wrap(Fn&& fn) {
  try {
    fn();
    return WC_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return WC_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return WC_INTERNAL;
  }
}

void require_handle(const void* h, const char* what) {
  require(h != nullptr, ErrorCode::InvalidArgument,
          std::string(what) + ": null handle");
}

void require_out(const void* p, const char* what) {
  require(p != nullptr, ErrorCode::InvalidArgument,
          std::string(what) + ": null out-pointer");
}

Side side_from_int(int side, const char* what) {
  require(side == WC_SIDE_LEFT || side == WC_SIDE_RIGHT,
          ErrorCode::InvalidArgument,
          std::string(what) + ": side must be 0 (left) or 1 (right)");
  return side == WC_SIDE_LEFT ? Side::Left : Side::Right;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  require(out != nullptr, ErrorCode::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wc_status make_group(const char* what, wc_group** out, GroupPtr g) {
  return wrap([&] {
    require_out(out, what);
    *out = new wc_group{std::move(g)};
  });
}

void emit(const ReportJson& j, int as_csv, char** out) {
  *out = dup_string(as_csv ? render_csv(j) : render_json(j));
}

// Smooth fixture used by the fejer verification report: a low-degree trig
// polynomial, so its convolution deviations shrink fast with the order.
GroupFunction fejer_test_function(const GroupPtr& g) {
  constexpr double tau = 2.0 * std::numbers::pi;
  const auto n = static_cast<double>(g->order());
  std::vector<cplx> v(g->order());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const double theta = static_cast<double>(s) / n;
    v[s] = cplx(2.0 + std::cos(tau * theta) - 0.7 * std::sin(2.0 * tau * theta),
                0.0);
  }
  return GroupFunction(g, std::move(v));
}

}  // namespace

extern "C" {

const char* wc_version(void) { return kVersion; }

const char* wc_status_name(wc_status status) {
  switch (status) {
    case WC_OK:
      return "ok";
    case WC_INVALID_ARGUMENT:
      return "invalid_argument";
    case WC_VALIDATION:
      return "validation";
    case WC_CAPACITY:
      return "capacity";
    case WC_DOMAIN_MISMATCH:
      return "domain_mismatch";
    case WC_UNSUPPORTED_GROUP:
      return "unsupported_group";
    case WC_DEGENERATE_INPUT:
      return "degenerate_input";
    case WC_IO:
      return "io";
    case WC_PARSE:
      return "parse";
    case WC_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* wc_last_error(void) { return t_last_error.c_str(); }

wc_status wc_group_from_spec(const char* spec, wc_group** out) {
  return wrap([&] {
    require_handle(spec, "wc_group_from_spec");
    require_out(out, "wc_group_from_spec");
    *out = new wc_group{load_group_spec(spec)};
  });
}

wc_status wc_group_cyclic(uint64_t n, wc_group** out) {
  return make_group("wc_group_cyclic", out, MeasuredGroup::cyclic(n));
}

wc_status wc_group_torus_grid(uint64_t n, uint32_t dim, wc_group** out) {
  return make_group("wc_group_torus_grid", out,
                    MeasuredGroup::torus_grid(n, dim));
}

wc_status wc_group_dihedral(uint64_t n, wc_group** out) {
  return make_group("wc_group_dihedral", out, MeasuredGroup::dihedral(n));
}

wc_status wc_group_symmetric(uint32_t n, wc_group** out) {
  return make_group("wc_group_symmetric", out, MeasuredGroup::symmetric(n));
}

void wc_group_free(wc_group* g) { delete g; }

size_t wc_group_order(const wc_group* g) { return g ? g->g->order() : 0; }

double wc_group_weight(const wc_group* g) { return g ? g->g->weight() : 0.0; }

const char* wc_group_label(const wc_group* g) {
  return g ? g->g->label().c_str() : "";
}

int wc_group_is_abelian(const wc_group* g) {
  return g && g->g->is_abelian() ? 1 : 0;
}

wc_status wc_group_mul(const wc_group* g, uint32_t a, uint32_t b,
                       uint32_t* out) {
  return wrap([&] {
    require_handle(g, "wc_group_mul");
    require_out(out, "wc_group_mul");
    require(a < g->g->order() && b < g->g->order(), ErrorCode::InvalidArgument,
            "wc_group_mul: element out of range");
    *out = g->g->mul(a, b);
  });
}

wc_status wc_group_inverse(const wc_group* g, uint32_t a, uint32_t* out) {
  return wrap([&] {
    require_handle(g, "wc_group_inverse");
    require_out(out, "wc_group_inverse");
    require(a < g->g->order(), ErrorCode::InvalidArgument,
            "wc_group_inverse: element out of range");
    *out = g->g->inverse(a);
  });
}

wc_status wc_function_create(const wc_group* g, const double* values,
                             size_t n_doubles, wc_function** out) {
  return wrap([&] {
    require_handle(g, "wc_function_create");
    require_handle(values, "wc_function_create");
    require_out(out, "wc_function_create");
    require(n_doubles == 2 * g->g->order(), ErrorCode::InvalidArgument,
            "wc_function_create: need exactly 2 * order interleaved doubles");
    std::vector<cplx> v(g->g->order());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = cplx(values[2 * i], values[2 * i + 1]);
    *out = new wc_function{GroupFunction(g->g, std::move(v))};
  });
}

wc_status wc_function_point_mass(const wc_group* g, uint32_t at,
                                 wc_function** out) {
  return wrap([&] {
    require_handle(g, "wc_function_point_mass");
    require_out(out, "wc_function_point_mass");
    *out = new wc_function{GroupFunction::point_mass(g->g, at)};
  });
}

wc_status wc_function_read(const wc_group* g, const char* path,
                           wc_function** out) {
  return wrap([&] {
    require_handle(g, "wc_function_read");
    require_handle(path, "wc_function_read");
    require_out(out, "wc_function_read");
    *out = new wc_function{read_function(g->g, path)};
  });
}

wc_status wc_function_write(const wc_function* f, const char* path,
                            int as_csv) {
  return wrap([&] {
    require_handle(f, "wc_function_write");
    require_handle(path, "wc_function_write");
    write_function(f->f, path, as_csv != 0);
  });
}

void wc_function_free(wc_function* f) { delete f; }

size_t wc_function_size(const wc_function* f) { return f ? f->f.size() : 0; }

wc_status wc_function_copy_values(const wc_function* f, double* out,
                                  size_t capacity) {
  return wrap([&] {
    require_handle(f, "wc_function_copy_values");
    require_out(out, "wc_function_copy_values");
    require(capacity >= 2 * f->f.size(), ErrorCode::InvalidArgument,
            "wc_function_copy_values: capacity below 2 * size");
    for (std::size_t i = 0; i < f->f.size(); ++i) {
      out[2 * i] = f->f[i].real();
      out[2 * i + 1] = f->f[i].imag();
    }
  });
}

wc_status wc_distribution_function(const wc_function* f, double alpha,
                                   double* out) {
  return wrap([&] {
    require_handle(f, "wc_distribution_function");
    require_out(out, "wc_distribution_function");
    *out = distribution_function(f->f, alpha);
  });
}

wc_status wc_weak_norm(const wc_function* f, double p, double* out) {
  return wrap([&] {
    require_handle(f, "wc_weak_norm");
    require_out(out, "wc_weak_norm");
    *out = weak_norm(f->f, p);
  });
}

wc_status wc_strong_norm(const wc_function* f, double p, double* out) {
  return wrap([&] {
    require_handle(f, "wc_strong_norm");
    require_out(out, "wc_strong_norm");
    *out = strong_norm(f->f, p);
  });
}

wc_status wc_lorentz_norm(const wc_function* f, double p, double q,
                          double* out) {
  return wrap([&] {
    require_handle(f, "wc_lorentz_norm");
    require_out(out, "wc_lorentz_norm");
    *out = lorentz_norm(f->f, {p, q});
  });
}

wc_status wc_sup_norm(const wc_function* f, double* out) {
  return wrap([&] {
    require_handle(f, "wc_sup_norm");
    require_out(out, "wc_sup_norm");
    *out = sup_norm(f->f);
  });
}

wc_status wc_convolve(const wc_function* a, const wc_function* b,
                      wc_function** out) {
  return wrap([&] {
    require_handle(a, "wc_convolve");
    require_handle(b, "wc_convolve");
    require_out(out, "wc_convolve");
    *out = new wc_function{convolve(a->f, b->f)};
  });
}

wc_status wc_fft_convolve(const wc_function* a, const wc_function* b,
                          wc_function** out) {
  return wrap([&] {
    require_handle(a, "wc_fft_convolve");
    require_handle(b, "wc_fft_convolve");
    require_out(out, "wc_fft_convolve");
    *out = new wc_function{fft_convolve(a->f, b->f)};
  });
}

wc_status wc_apply_convolution(const wc_function* kernel, int side,
                               const wc_function* f, wc_function** out) {
  return wrap([&] {
    require_handle(kernel, "wc_apply_convolution");
    require_handle(f, "wc_apply_convolution");
    require_out(out, "wc_apply_convolution");
    const ConvolutionOperator op(kernel->f,
                                 side_from_int(side, "wc_apply_convolution"));
    *out = new wc_function{op.apply(f->f)};
  });
}

wc_status wc_apply_multiplier_kernel(const wc_function* kernel,
                                     const wc_function* f, wc_function** out) {
  return wrap([&] {
    require_handle(kernel, "wc_apply_multiplier_kernel");
    require_handle(f, "wc_apply_multiplier_kernel");
    require_out(out, "wc_apply_multiplier_kernel");
    const GroupPtr& g = kernel->f.group();
    if (!g->grid_shape().empty()) {
      *out = new wc_function{apply_scalar_multiplier(dft(kernel->f), f->f)};
    } else {
      const IrrepTable table = builtin_irreps(g);
      *out = new wc_function{apply_matrix_multiplier(
          nonabelian_fourier(kernel->f, table), f->f, table)};
    }
  });
}

wc_status wc_apply_multiplier_symbol_file(const wc_group* g,
                                          const char* symbol_path,
                                          const wc_function* f,
                                          wc_function** out) {
  return wrap([&] {
    require_handle(g, "wc_apply_multiplier_symbol_file");
    require_handle(symbol_path, "wc_apply_multiplier_symbol_file");
    require_handle(f, "wc_apply_multiplier_symbol_file");
    require_out(out, "wc_apply_multiplier_symbol_file");
    const MultiplierSymbol sym = read_symbol(g->g, symbol_path);
    if (sym.is_scalar()) {
      *out = new wc_function{apply_scalar_multiplier(sym, f->f)};
    } else {
      *out = new wc_function{
          apply_matrix_multiplier(sym, f->f, builtin_irreps(g->g))};
    }
  });
}

wc_status wc_rayleigh_ratio(const wc_function* kernel, int side,
                            const wc_function* f, double p, double* out) {
  return wrap([&] {
    require_handle(kernel, "wc_rayleigh_ratio");
    require_handle(f, "wc_rayleigh_ratio");
    require_out(out, "wc_rayleigh_ratio");
    const ConvolutionOperator op(kernel->f,
                                 side_from_int(side, "wc_rayleigh_ratio"));
    *out = rayleigh_ratio(op, f->f, p);
  });
}

wc_status wc_weak_young_ratio(const wc_function* k, const wc_function* f,
                              double p, double* out) {
  return wrap([&] {
    require_handle(k, "wc_weak_young_ratio");
    require_handle(f, "wc_weak_young_ratio");
    require_out(out, "wc_weak_young_ratio");
    *out = weak_young_ratio(k->f, f->f, p);
  });
}

wc_status wc_report_norm(const wc_function* f, double p, double q, int as_csv,
                         char** out) {
  return wrap([&] {
    require_handle(f, "wc_report_norm");
    require_out(out, "wc_report_norm");
    emit(norm_report(f->f, p, q), as_csv, out);
  });
}

wc_status wc_report_output_summary(const char* kind, const wc_function* result,
                                   const char* out_path, int as_csv,
                                   char** out) {
  return wrap([&] {
    require_handle(kind, "wc_report_output_summary");
    require_handle(result, "wc_report_output_summary");
    require_handle(out_path, "wc_report_output_summary");
    require_out(out, "wc_report_output_summary");
    emit(output_summary_report(kind, result->f, out_path), as_csv, out);
  });
}

wc_status wc_report_fejer(uint64_t grid_n, const uint64_t* orders,
                          size_t n_orders, int verify, double p,
                          const double* window_radii, size_t n_radii,
                          int as_csv, int* ok_out, char** out) {
  return wrap([&] {
    require_handle(orders, "wc_report_fejer");
    require_out(out, "wc_report_fejer");
    const ApproxIdentityFamily family =
        fejer_family(grid_n, std::span(orders, n_orders));
    if (!verify) {
      if (ok_out) *ok_out = 1;
      emit(fejer_report(family, nullptr, {}), as_csv, out);
      return;
    }
    std::vector<double> radii(window_radii, window_radii + n_radii);
    if (radii.empty()) radii = {0.05, 0.1, 0.2};
    std::vector<std::vector<elem_t>> windows;
    windows.reserve(radii.size());
    for (const double r : radii)
      windows.push_back(theta_window(family.group, r));
    const GroupFunction tests[] = {fejer_test_function(family.group)};
    const Lemma1Report vl = verify_lemma1(family, windows, tests, p);
    if (ok_out) *ok_out = vl.ok ? 1 : 0;
    emit(fejer_report(family, &vl, radii), as_csv, out);
  });
}

wc_status wc_report_estimate(const wc_function* kernel, double p,
                             size_t trials, uint64_t seed, int side,
                             double upper_constant, int include_witness,
                             int as_csv, int* ok_out, char** out) {
  return wrap([&] {
    require_handle(kernel, "wc_report_estimate");
    require_out(out, "wc_report_estimate");
    const GroupPtr& g = kernel->f.group();
    ReportJson j;
    bool ok = false;
    if (side == WC_SIDE_BOTH) {
      const KernelCharacterization c =
          characterize_kernel(kernel->f, p, trials, seed, upper_constant);
      j = estimate_report(g, seed, &c.left, &c.right, include_witness != 0);
      ok = c.ok;
    } else {
      const Side s = side_from_int(side, "wc_report_estimate");
      const NormEstimate e = estimate_operator_norm(
          ConvolutionOperator(kernel->f, s), p, trials, seed, upper_constant);
      j = estimate_report(g, seed, s == Side::Left ? &e : nullptr,
                          s == Side::Right ? &e : nullptr,
                          include_witness != 0);
      ok = e.lower_bound_ok && e.sandwich_ok;
    }
    if (ok_out) *ok_out = ok ? 1 : 0;
    emit(j, as_csv, out);
  });
}

wc_status wc_report_verify_theorem1(const wc_group* g, const double* ps,
                                    size_t n_ps, size_t kernels, size_t trials,
                                    size_t wy_pairs, uint64_t seed, int side,
                                    double upper_constant, int as_csv,
                                    int* all_ok_out, char** out) {
  return wrap([&] {
    require_handle(g, "wc_report_verify_theorem1");
    require_handle(ps, "wc_report_verify_theorem1");
    require_out(out, "wc_report_verify_theorem1");
    const TheoremReport report = verify_theorem1(
        g->g, std::span(ps, n_ps), kernels, trials, wy_pairs, seed,
        side_from_int(side, "wc_report_verify_theorem1"), upper_constant);
    if (all_ok_out) *all_ok_out = report.all_ok ? 1 : 0;
    emit(verify_report(report), as_csv, out);
  });
}

void wc_string_free(char* s) { std::free(s); }

}  // extern "C"
