#pragma once

#include <span>
#include <vector>

#include "convolution.hpp"
#include "function.hpp"

namespace weakconv {

// A square complex matrix, row-major.
struct MatrixBlock {
  std::size_t dim = 0;
  std::vector<cplx> a;

  cplx& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
};

// Fourier-side representation of an operator: a scalar per dual-grid point
// (abelian case) or one matrix per irrep (nonabelian case). Exactly one of
// the two containers is populated.
struct MultiplierSymbol {
  std::vector<cplx> scalar;
  std::vector<MatrixBlock> blocks;

  bool is_scalar() const { return blocks.empty(); }
};

// ---------------------------------------------------------------------------
// Abelian grid transforms.  Convention:
//   F(theta) = sum_s f(s) e^{-2 pi i <s,theta>/N} * weight
// with the inverse carrying the 1/(n*weight) factor, so idft(dft(f)) = f and
// dft(k*f) = dft(k) . dft(f) hold with no stray constants in either weight
// regime.  Grids with power-of-two axes use a radix-2 FFT; other axis sizes
// fall back to a direct transform with an exact mod-N twiddle table.
// ---------------------------------------------------------------------------

MultiplierSymbol dft(const GroupFunction& f);
GroupFunction idft(const GroupPtr& g, const MultiplierSymbol& spectrum);

// idft(m . dft(f)); m must have one scalar per group element.
GroupFunction apply_scalar_multiplier(const MultiplierSymbol& m,
                                      const GroupFunction& f);

// Convolution through the transform; equals convolve(k, f) up to roundoff.
GroupFunction fft_convolve(const GroupFunction& k, const GroupFunction& f);

// ---------------------------------------------------------------------------
// Nonabelian transforms through explicit unitary irreps.
// ---------------------------------------------------------------------------

struct Irrep {
  std::size_t dim = 0;
  std::vector<cplx> mats;  // order() blocks of dim x dim, row-major

  std::span<const cplx> at(elem_t x) const {
    return {mats.data() + static_cast<std::size_t>(x) * dim * dim, dim * dim};
  }
};

struct IrrepTable {
  GroupPtr group;
  std::vector<Irrep> irreps;
};

// Checks unitarity, the homomorphism law (exhaustive pairs for order <= 24,
// 10^4 seeded pairs above), completeness (sum of dim^2 = order) and character
// norms (irreducibility); throws Validation naming the first failure.
void validate_irreps(const IrrepTable& table);

// Built-in duals: symmetric(3) and the whole dihedral family.
IrrepTable builtin_irreps(const GroupPtr& g);

// Ff(pi) = sum_x f(x) pi(x)^* weight, one block per irrep.
MultiplierSymbol nonabelian_fourier(const GroupFunction& f,
                                    const IrrepTable& irreps);

// f(x) = (1/(n*weight)) sum_pi d_pi tr(pi(x) Ff(pi)).
GroupFunction nonabelian_fourier_inverse(const MultiplierSymbol& spectrum,
                                         const IrrepTable& irreps);

// T_sigma f(x) = (1/(n*weight)) sum_pi d_pi tr(pi(x) sigma(pi) Ff(pi)).
GroupFunction apply_matrix_multiplier(const MultiplierSymbol& sigma,
                                      const GroupFunction& f,
                                      const IrrepTable& irreps);

// With sigma = F(k), T_sigma realizes one convolution side of k.  With the
// conventions above, F(k).F(f) = F(f*k), so the realized side is RIGHT:
// T_{F(k)} f = f * k.  An audit test asserts this against both direct
// engines on a noncommuting witness.
inline constexpr Side kMultiplierConvolutionSide = Side::Right;

}  // namespace weakconv
