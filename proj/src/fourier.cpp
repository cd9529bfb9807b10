#include "fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "rng.hpp"

namespace weakconv {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

// In-place radix-2 FFT, sign -1 forward / +1 inverse, no normalization.
void fft_pow2(std::span<cplx> a, bool invert) {
  const std::size_t m = a.size();
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cplx> tw;
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const std::size_t half = len / 2;
    tw.resize(half);
    const double sgn = invert ? 2.0 : -2.0;
    for (std::size_t t = 0; t < half; ++t)
      tw[t] = std::polar(1.0, sgn * kPi * static_cast<double>(t) /
                                  static_cast<double>(len));
    for (std::size_t i = 0; i < m; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + half] * tw[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

// Direct transform for non-power-of-two sizes; the twiddle index (j*k) mod m
// keeps arguments exactly reduced.
void dft_direct(std::span<cplx> a, bool invert) {
  const std::size_t m = a.size();
  std::vector<cplx> tw(m);
  const double sgn = invert ? 2.0 : -2.0;
  for (std::size_t t = 0; t < m; ++t)
    tw[t] = std::polar(1.0, sgn * kPi * static_cast<double>(t) /
                                static_cast<double>(m));
  std::vector<cplx> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k)
      acc += a[k] * tw[(j * k) % m];
    out[j] = acc;
  }
  std::copy(out.begin(), out.end(), a.begin());
}

void transform_axis(std::span<cplx> line, bool invert) {
  if (line.size() <= 1) return;
  if (is_pow2(line.size()))
    fft_pow2(line, invert);
  else
    dft_direct(line, invert);
}

// Separable transform over a little-endian mixed-radix grid, in place.
void grid_transform(std::vector<cplx>& data,
                    const std::vector<std::uint64_t>& shape, bool invert) {
  std::size_t stride = 1;
  std::vector<cplx> line;
  for (const std::uint64_t mu : shape) {
    const std::size_t m = static_cast<std::size_t>(mu);
    if (m > 1) {
      line.resize(m);
      const std::size_t block = stride * m;
      for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
          for (std::size_t t = 0; t < m; ++t)
            line[t] = data[base + off + t * stride];
          transform_axis(line, invert);
          for (std::size_t t = 0; t < m; ++t)
            data[base + off + t * stride] = line[t];
        }
      }
    }
    stride *= m;
  }
}

const std::vector<std::uint64_t>& grid_shape_or_fail(const GroupPtr& g,
                                                     const char* where) {
  const auto& shape = g->grid_shape();
  if (shape.empty())
    fail(ErrorCode::UnsupportedGroup,
         std::string(where) + ": " + g->label() +
             " is not a grid group; use the irrep-table transform instead");
  return shape;
}

double frob_dev_from_identity(std::span<const cplx> prod, std::size_t d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const cplx want = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      worst = std::max(worst, std::abs(prod[i * d + j] - want));
    }
  return worst;
}

// Lexicographic permutations of {0,1,2} in group-index order, plus parity.
std::vector<std::array<int, 3>> s3_permutations() {
  std::array<int, 3> p = {0, 1, 2};
  std::vector<std::array<int, 3>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

IrrepTable s3_irreps(GroupPtr g) {
  const auto perms = s3_permutations();
  const std::size_t n = 6;
  IrrepTable table;
  table.group = std::move(g);

  Irrep triv{1, std::vector<cplx>(n, cplx(1.0, 0.0))};
  Irrep sgn{1, {}};
  sgn.mats.reserve(n);
  for (const auto& p : perms)
    sgn.mats.emplace_back(static_cast<double>(permutation_sign(p)), 0.0);

  // 2-dim standard representation: compress the permutation action on the
  // sum-zero plane through the orthonormal basis b1, b2.
  const double b[2][3] = {
      {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
      {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
  Irrep std2{2, {}};
  std2.mats.reserve(n * 4);
  for (const auto& p : perms) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        double m = 0.0;
        for (int j = 0; j < 3; ++j) m += b[r][p[j]] * b[c][j];
        std2.mats.emplace_back(m, 0.0);
      }
  }

  table.irreps = {std::move(triv), std::move(sgn), std::move(std2)};
  return table;
}

IrrepTable dihedral_irreps(GroupPtr g, std::size_t n) {
  const std::size_t order = 2 * n;
  IrrepTable table;
  table.group = std::move(g);

  auto character = [&](auto&& chi) {
    Irrep rep{1, {}};
    rep.mats.reserve(order);
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t i = x % n, j = x / n;
      rep.mats.emplace_back(chi(i, j), 0.0);
    }
    return rep;
  };

  table.irreps.push_back(character([](std::size_t, std::size_t) { return 1.0; }));
  table.irreps.push_back(
      character([](std::size_t, std::size_t j) { return j ? -1.0 : 1.0; }));
  if (n % 2 == 0) {
    table.irreps.push_back(
        character([](std::size_t i, std::size_t) { return i % 2 ? -1.0 : 1.0; }));
    table.irreps.push_back(character(
        [](std::size_t i, std::size_t j) { return (i + j) % 2 ? -1.0 : 1.0; }));
  }

  // 2-dim: rho_h(r^i s^j) = R(2 pi h i / n) S^j with S = diag(1,-1).
  for (std::size_t h = 1; 2 * h < n; ++h) {
    Irrep rep{2, {}};
    rep.mats.reserve(order * 4);
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t i = x % n, j = x / n;
      const double ang = 2.0 * kPi * static_cast<double>(h * i) /
                         static_cast<double>(n);
      const double c = std::cos(ang), s = std::sin(ang);
      if (j == 0) {
        rep.mats.insert(rep.mats.end(), {cplx(c, 0), cplx(-s, 0),  //
                                         cplx(s, 0), cplx(c, 0)});
      } else {
        rep.mats.insert(rep.mats.end(), {cplx(c, 0), cplx(s, 0),  //
                                         cplx(s, 0), cplx(-c, 0)});
      }
    }
    table.irreps.push_back(std::move(rep));
  }
  return table;
}

}  // namespace

MultiplierSymbol dft(const GroupFunction& f) {
  const GroupPtr& g = f.group();
  const auto& shape = grid_shape_or_fail(g, "dft");
  std::vector<cplx> data(f.values().begin(), f.values().end());
  grid_transform(data, shape, /*invert=*/false);
  const double w = g->weight();
  if (w != 1.0)
    for (cplx& z : data) z *= w;
  MultiplierSymbol m;
  m.scalar = std::move(data);
  return m;
}

GroupFunction idft(const GroupPtr& g, const MultiplierSymbol& spectrum) {
  const auto& shape = grid_shape_or_fail(g, "idft");
  require(spectrum.is_scalar(), ErrorCode::InvalidArgument,
          "idft: expected a scalar symbol");
  require(spectrum.scalar.size() == g->order(), ErrorCode::Validation,
          "idft: symbol length " + std::to_string(spectrum.scalar.size()) +
              " does not match group order " + std::to_string(g->order()));
  std::vector<cplx> data = spectrum.scalar;
  grid_transform(data, shape, /*invert=*/true);
  const double scale =
      1.0 / (static_cast<double>(g->order()) * g->weight());
  for (cplx& z : data) z *= scale;
  return GroupFunction(g, std::move(data));
}

GroupFunction apply_scalar_multiplier(const MultiplierSymbol& m,
                                      const GroupFunction& f) {
  require(m.is_scalar(), ErrorCode::InvalidArgument,
          "apply_scalar_multiplier: expected a scalar symbol");
  require(m.scalar.size() == f.size(), ErrorCode::Validation,
          "apply_scalar_multiplier: symbol length " +
              std::to_string(m.scalar.size()) + " vs function length " +
              std::to_string(f.size()));
  MultiplierSymbol spec = dft(f);
  for (std::size_t i = 0; i < spec.scalar.size(); ++i)
    spec.scalar[i] *= m.scalar[i];
  return idft(f.group(), spec);
}

GroupFunction fft_convolve(const GroupFunction& k, const GroupFunction& f) {
  require_same_group(k, f, "fft_convolve");
  MultiplierSymbol sk = dft(k);
  MultiplierSymbol sf = dft(f);
  for (std::size_t i = 0; i < sk.scalar.size(); ++i)
    sk.scalar[i] *= sf.scalar[i];
  return idft(f.group(), sk);
}

void validate_irreps(const IrrepTable& table) {
  require(table.group != nullptr, ErrorCode::InvalidArgument,
          "irrep table: null group");
  require(!table.irreps.empty(), ErrorCode::Validation,
          "irrep table: no representations");
  const GroupPtr& g = table.group;
  const std::size_t n = g->order();
  constexpr double kTol = 1e-12;

  std::size_t dim2_sum = 0;
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    const Irrep& rep = table.irreps[r];
    const std::size_t d = rep.dim;
    const std::string tag = "irrep " + std::to_string(r);
    require(d >= 1, ErrorCode::Validation, tag + ": dimension must be >= 1");
    require(rep.mats.size() == n * d * d, ErrorCode::Validation,
            tag + ": expected " + std::to_string(n * d * d) +
                " matrix entries, got " + std::to_string(rep.mats.size()));
    dim2_sum += d * d;

    std::vector<cplx> prod(d * d);
    double char_norm2 = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const auto px = rep.at(static_cast<elem_t>(x));
      // pi(x) pi(x)^* = I
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          cplx acc(0.0, 0.0);
          for (std::size_t t = 0; t < d; ++t)
            acc += px[i * d + t] * std::conj(px[j * d + t]);
          prod[i * d + j] = acc;
        }
      if (frob_dev_from_identity(prod, d) > kTol)
        fail(ErrorCode::Validation,
             tag + ": matrix for element " + std::to_string(x) +
                 " is not unitary");
      cplx chi(0.0, 0.0);
      for (std::size_t i = 0; i < d; ++i) chi += px[i * d + i];
      char_norm2 += std::norm(chi);
    }
    // Schur: an irreducible character has mean square norm exactly 1.
    if (std::abs(char_norm2 / static_cast<double>(n) - 1.0) > 1e-9)
      fail(ErrorCode::Validation, tag + ": character norm says reducible");

    auto check_pair = [&](elem_t x, elem_t y) {
      const auto px = rep.at(x);
      const auto py = rep.at(y);
      const auto pxy = rep.at(g->mul(x, y));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          cplx acc(0.0, 0.0);
          for (std::size_t t = 0; t < d; ++t)
            acc += px[i * d + t] * py[t * d + j];
          if (std::abs(acc - pxy[i * d + j]) > kTol)
            fail(ErrorCode::Validation,
                 tag + ": homomorphism fails at pair (" + std::to_string(x) +
                     ", " + std::to_string(y) + ")");
        }
    };
    if (n <= 24) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          check_pair(static_cast<elem_t>(x), static_cast<elem_t>(y));
    } else {
      Rng rng(0x9e3779b97f4a7c15ull);
      for (int t = 0; t < 10000; ++t)
        check_pair(static_cast<elem_t>(rng.below(n)),
                   static_cast<elem_t>(rng.below(n)));
    }
  }
  require(dim2_sum == n, ErrorCode::Validation,
          "irrep table: dimensions square-sum to " + std::to_string(dim2_sum) +
              ", group order is " + std::to_string(n));
}

IrrepTable builtin_irreps(const GroupPtr& g) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "builtin_irreps: null group");
  if (g->label() == "symmetric(3)") return s3_irreps(g);
  const std::string& label = g->label();
  if (label.rfind("dihedral(", 0) == 0 && g->order() % 2 == 0) {
    const std::size_t n = g->order() / 2;
    if (label == "dihedral(" + std::to_string(n) + ")")
      return dihedral_irreps(g, n);
  }
  fail(ErrorCode::UnsupportedGroup,
       "no built-in irrep table for " + g->label() +
           "; supply one via an irrep file");
}

MultiplierSymbol nonabelian_fourier(const GroupFunction& f,
                                    const IrrepTable& irreps) {
  require(irreps.group == f.group(), ErrorCode::DomainMismatch,
          "nonabelian_fourier: irrep table is for a different group");
  const std::size_t n = f.size();
  const double w = f.group()->weight();
  MultiplierSymbol out;
  out.blocks.reserve(irreps.irreps.size());
  for (const Irrep& rep : irreps.irreps) {
    const std::size_t d = rep.dim;
    MatrixBlock blk{d, std::vector<cplx>(d * d, cplx(0.0, 0.0))};
    for (std::size_t x = 0; x < n; ++x) {
      const cplx c = f[x] * w;
      if (c == cplx(0.0, 0.0)) continue;
      const auto px = rep.at(static_cast<elem_t>(x));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          blk.a[i * d + j] += c * std::conj(px[j * d + i]);
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

namespace {

void require_blocks_match(const MultiplierSymbol& s, const IrrepTable& irreps,
                          const char* where) {
  require(!s.is_scalar(), ErrorCode::InvalidArgument,
          std::string(where) + ": expected a matrix symbol");
  require(s.blocks.size() == irreps.irreps.size(), ErrorCode::Validation,
          std::string(where) + ": " + std::to_string(s.blocks.size()) +
              " blocks for " + std::to_string(irreps.irreps.size()) +
              " irreps");
  for (std::size_t r = 0; r < s.blocks.size(); ++r)
    require(s.blocks[r].dim == irreps.irreps[r].dim, ErrorCode::Validation,
            std::string(where) + ": block " + std::to_string(r) +
                " has dimension " + std::to_string(s.blocks[r].dim) +
                ", irrep has " + std::to_string(irreps.irreps[r].dim));
}

// f(x) = (1/(n w)) sum_pi d_pi tr(pi(x) B_pi) for given blocks B.
GroupFunction trace_expansion(const std::vector<MatrixBlock>& blocks,
                              const IrrepTable& irreps) {
  const GroupPtr& g = irreps.group;
  const std::size_t n = g->order();
  const double scale = 1.0 / (static_cast<double>(n) * g->weight());
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t r = 0; r < irreps.irreps.size(); ++r) {
    const Irrep& rep = irreps.irreps[r];
    const std::size_t d = rep.dim;
    const double dp = static_cast<double>(d);
    const MatrixBlock& blk = blocks[r];
    for (std::size_t x = 0; x < n; ++x) {
      const auto px = rep.at(static_cast<elem_t>(x));
      cplx tr(0.0, 0.0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          tr += px[i * d + j] * blk.a[j * d + i];
      out[x] += dp * tr;
    }
  }
  for (cplx& z : out) z *= scale;
  return GroupFunction(g, std::move(out));
}

}  // namespace

GroupFunction nonabelian_fourier_inverse(const MultiplierSymbol& spectrum,
                                         const IrrepTable& irreps) {
  require_blocks_match(spectrum, irreps, "nonabelian_fourier_inverse");
  return trace_expansion(spectrum.blocks, irreps);
}

GroupFunction apply_matrix_multiplier(const MultiplierSymbol& sigma,
                                      const GroupFunction& f,
                                      const IrrepTable& irreps) {
  require_blocks_match(sigma, irreps, "apply_matrix_multiplier");
  require(irreps.group == f.group(), ErrorCode::DomainMismatch,
          "apply_matrix_multiplier: irrep table is for a different group");
  MultiplierSymbol spec = nonabelian_fourier(f, irreps);
  std::vector<MatrixBlock> prod(spec.blocks.size());
  for (std::size_t r = 0; r < spec.blocks.size(); ++r) {
    const std::size_t d = sigma.blocks[r].dim;
    prod[r].dim = d;
    prod[r].a.assign(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        const cplx s = sigma.blocks[r].a[i * d + t];
        if (s == cplx(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < d; ++j)
          prod[r].a[i * d + j] += s * spec.blocks[r].a[t * d + j];
      }
  }
  return trace_expansion(prod, irreps);
}

}  // namespace weakconv
