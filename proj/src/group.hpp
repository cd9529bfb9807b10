#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace weakconv {

using elem_t = std::uint32_t;

class MeasuredGroup;
using GroupPtr = std::shared_ptr<const MeasuredGroup>;

/// Default element cap; override with the WEAKCONV_SIZE_CAP environment
/// variable (read once per process).
std::uint64_t group_size_cap();

/// A finite group with a constant-weight Haar measure. Elements are dense
/// indices 0..order-1. Two regimes are modeled: discrete groups carry
/// counting measure (weight 1) and uniform torus grids carry weight 1/order
/// so the total mass is 1. Constant weight makes left invariance and
/// inversion invariance of the measure exact.
///
/// Immutable after construction; safe to share across threads.
class MeasuredGroup {
 public:
  static GroupPtr cyclic(std::uint64_t n);
  static GroupPtr torus_grid(std::uint64_t n, std::uint32_t dim);
  static GroupPtr dihedral(std::uint64_t n);
  static GroupPtr symmetric(std::uint32_t n);  // n in 2..5
  static GroupPtr product(GroupPtr a, GroupPtr b);

  /// Builds a group from an explicit Cayley table (row-major, table[a*n+b] =
  /// a*b) with counting measure. Validates identity, inverses and
  /// associativity; the error message names the first violated triple.
  static GroupPtr from_table(std::vector<elem_t> table, std::size_t n,
                             std::string label = "table");

  std::size_t order() const { return order_; }
  double weight() const { return weight_; }
  double total_mass() const { return static_cast<double>(order_) * weight_; }
  elem_t identity() const { return identity_; }
  bool is_abelian() const { return abelian_; }
  const std::string& label() const { return label_; }

  elem_t mul(elem_t a, elem_t b) const;
  elem_t inverse(elem_t a) const { return inv_[a]; }

  /// Fills out[x] = mul(a, x) for all x; out.size() must equal order().
  /// This is the convolution engine's hot path.
  void mul_row(elem_t a, std::span<elem_t> out) const;

  /// Mixed-radix factor sizes when the group is an explicit product of
  /// cyclic factors (little-endian digit order); empty otherwise. Nonempty
  /// shape is what the Fourier layer requires.
  const std::vector<std::uint64_t>& grid_shape() const { return shape_; }

 private:
  enum class Kind { Grid, Dihedral, Table, Product };

  MeasuredGroup() = default;
  void build_inverses();

  Kind kind_ = Kind::Grid;
  std::size_t order_ = 1;
  double weight_ = 1.0;
  elem_t identity_ = 0;
  bool abelian_ = true;
  std::string label_;
  std::vector<elem_t> inv_;

  std::vector<std::uint64_t> shape_;  // Kind::Grid
  std::uint64_t dihedral_n_ = 0;      // Kind::Dihedral
  std::vector<elem_t> table_;         // Kind::Table
  GroupPtr left_, right_;             // Kind::Product
};

}  // namespace weakconv
