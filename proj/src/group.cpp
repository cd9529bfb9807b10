#include "group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "rng.hpp"

namespace weakconv {

namespace {

constexpr std::uint64_t kDefaultSizeCap = 65536;

std::uint64_t parse_cap_env() {
  if (const char* s = std::getenv("WEAKCONV_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1) return v;
  }
  return kDefaultSizeCap;
}

void check_cap(std::uint64_t order, const std::string& what) {
  if (order > group_size_cap()) {
    fail(ErrorCode::Capacity,
         what + ": order " + std::to_string(order) + " exceeds size cap " +
             std::to_string(group_size_cap()));
  }
}

struct Triple {
  elem_t a, b, c;
};

std::string triple_msg(const std::string& label, const Triple& t) {
  std::ostringstream os;
  os << label << ": associativity violated at triple (a=" << t.a
     << ", b=" << t.b << ", c=" << t.c << ")";
  return os.str();
}

}  // namespace

std::uint64_t group_size_cap() {
  static const std::uint64_t cap = parse_cap_env();
  return cap;
}

elem_t MeasuredGroup::mul(elem_t a, elem_t b) const {
  switch (kind_) {
    case Kind::Grid: {
      std::uint64_t out = 0, stride = 1, x = a, y = b;
      for (const std::uint64_t radix : shape_) {
        out += ((x % radix) + (y % radix)) % radix * stride;
        x /= radix;
        y /= radix;
        stride *= radix;
      }
      return static_cast<elem_t>(out);
    }
    case Kind::Dihedral: {
      const std::uint64_t n = dihedral_n_;
      const std::uint64_t i = a % n, j = a / n, k = b % n, l = b / n;
      const std::uint64_t rot = j ? (i + n - k) % n : (i + k) % n;
      return static_cast<elem_t>(rot + n * ((j + l) & 1));
    }
    case Kind::Table:
      return table_[static_cast<std::size_t>(a) * order_ + b];
    case Kind::Product: {
      const auto n1 = static_cast<elem_t>(left_->order());
      return static_cast<elem_t>(left_->mul(a % n1, b % n1) +
                                 n1 * right_->mul(a / n1, b / n1));
    }
  }
  return 0;  // unreachable
}

void MeasuredGroup::mul_row(elem_t a, std::span<elem_t> out) const {
  require(out.size() == order_, ErrorCode::InvalidArgument,
          "mul_row: output span size mismatch");
  switch (kind_) {
    case Kind::Grid: {
      // Odometer over the digits of x, tracking (a_j + x_j) mod N_j per axis.
      const std::size_t d = shape_.size();
      std::vector<std::uint64_t> digit(d, 0), rotated(d), stride(d);
      std::uint64_t s = 1, rest = a, value = 0;
      for (std::size_t j = 0; j < d; ++j) {
        stride[j] = s;
        rotated[j] = rest % shape_[j];
        rest /= shape_[j];
        value += rotated[j] * s;
        s *= shape_[j];
      }
      for (std::size_t x = 0; x < order_; ++x) {
        out[x] = static_cast<elem_t>(value);
        for (std::size_t j = 0; j < d; ++j) {
          if (++digit[j] < shape_[j]) {
            if (++rotated[j] == shape_[j]) {
              rotated[j] = 0;
              value -= (shape_[j] - 1) * stride[j];
            } else {
              value += stride[j];
            }
            break;
          }
          // digit j wraps: x_j goes N_j-1 -> 0, so rotated_j returns to a_j.
          digit[j] = 0;
          const std::uint64_t back = rotated[j];
          rotated[j] = (rotated[j] + 1) % shape_[j];
          value += (rotated[j] - back) * stride[j];  // uint wrap-safe
        }
      }
      return;
    }
    case Kind::Table: {
      const elem_t* row = table_.data() + static_cast<std::size_t>(a) * order_;
      std::copy(row, row + order_, out.begin());
      return;
    }
    case Kind::Dihedral: {
      for (std::size_t x = 0; x < order_; ++x)
        out[x] = mul(a, static_cast<elem_t>(x));
      return;
    }
    case Kind::Product: {
      const std::size_t n1 = left_->order();
      const std::size_t n2 = right_->order();
      std::vector<elem_t> row1(n1), row2(n2);
      left_->mul_row(a % n1, row1);
      right_->mul_row(static_cast<elem_t>(a / n1), row2);
      std::size_t x = 0;
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        const std::size_t base = static_cast<std::size_t>(row2[x2]) * n1;
        for (std::size_t x1 = 0; x1 < n1; ++x1)
          out[x++] = static_cast<elem_t>(base + row1[x1]);
      }
      return;
    }
  }
}

void MeasuredGroup::build_inverses() {
  inv_.assign(order_, 0);
  switch (kind_) {
    case Kind::Grid: {
      for (std::size_t a = 0; a < order_; ++a) {
        std::uint64_t out = 0, stride = 1, x = a;
        for (const std::uint64_t radix : shape_) {
          const std::uint64_t d = x % radix;
          out += (d ? radix - d : 0) * stride;
          x /= radix;
          stride *= radix;
        }
        inv_[a] = static_cast<elem_t>(out);
      }
      return;
    }
    case Kind::Dihedral: {
      const std::uint64_t n = dihedral_n_;
      for (std::size_t a = 0; a < order_; ++a) {
        const std::uint64_t i = a % n, j = a / n;
        inv_[a] = static_cast<elem_t>(j ? a : (i ? n - i : 0));
      }
      return;
    }
    case Kind::Table: {
      for (std::size_t a = 0; a < order_; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < order_; ++b) {
          if (mul(static_cast<elem_t>(a), static_cast<elem_t>(b)) ==
                  identity_ &&
              mul(static_cast<elem_t>(b), static_cast<elem_t>(a)) ==
                  identity_) {
            inv_[a] = static_cast<elem_t>(b);
            found = true;
            break;
          }
        }
        require(found, ErrorCode::Validation,
                label_ + ": element " + std::to_string(a) +
                    " has no two-sided inverse");
      }
      return;
    }
    case Kind::Product: {
      const std::size_t n1 = left_->order();
      for (std::size_t a = 0; a < order_; ++a) {
        inv_[a] = static_cast<elem_t>(
            left_->inverse(static_cast<elem_t>(a % n1)) +
            n1 * right_->inverse(static_cast<elem_t>(a / n1)));
      }
      return;
    }
  }
}

GroupPtr MeasuredGroup::cyclic(std::uint64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "cyclic: invalid order 0");
  check_cap(n, "cyclic");
  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->kind_ = Kind::Grid;
  g->order_ = static_cast<std::size_t>(n);
  g->weight_ = 1.0;
  g->shape_ = {n};
  g->abelian_ = true;
  g->label_ = "cyclic(" + std::to_string(n) + ")";
  g->build_inverses();
  return g;
}

GroupPtr MeasuredGroup::torus_grid(std::uint64_t n, std::uint32_t dim) {
  require(n >= 1, ErrorCode::InvalidArgument, "torus_grid: invalid order 0");
  require(dim >= 1, ErrorCode::InvalidArgument,
          "torus_grid: dimension must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t j = 0; j < dim; ++j) {
    if (order > group_size_cap() / n) {
      fail(ErrorCode::Capacity, "torus_grid: " + std::to_string(n) + "^" +
                                    std::to_string(dim) + " exceeds size cap " +
                                    std::to_string(group_size_cap()));
    }
    order *= n;
  }
  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->kind_ = Kind::Grid;
  g->order_ = static_cast<std::size_t>(order);
  g->weight_ = 1.0 / static_cast<double>(order);  // total mass exactly 1
  g->shape_.assign(dim, n);
  g->abelian_ = true;
  g->label_ =
      "torus_grid(" + std::to_string(n) + "," + std::to_string(dim) + ")";
  g->build_inverses();
  return g;
}

GroupPtr MeasuredGroup::dihedral(std::uint64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "dihedral: invalid order 0");
  check_cap(2 * n, "dihedral");
  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->kind_ = Kind::Dihedral;
  g->order_ = static_cast<std::size_t>(2 * n);
  g->weight_ = 1.0;
  g->dihedral_n_ = n;
  g->abelian_ = n <= 2;
  g->label_ = "dihedral(" + std::to_string(n) + ")";
  g->build_inverses();
  return g;
}

GroupPtr MeasuredGroup::symmetric(std::uint32_t n) {
  require(n >= 2 && n <= 5, ErrorCode::InvalidArgument,
          "symmetric: n must be in 2..5");
  // Permutations in lexicographic one-line order; composition (a*b)(i) =
  // a(b(i)), so the identity permutation lands at index 0.
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();

  auto key_of = [n](const std::vector<std::uint8_t>& q) {
    std::uint32_t key = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      key |= static_cast<std::uint32_t>(q[i]) << (3 * i);
    return key;
  };
  std::unordered_map<std::uint32_t, elem_t> index;
  for (std::size_t i = 0; i < order; ++i)
    index.emplace(key_of(perms[i]), static_cast<elem_t>(i));

  std::vector<elem_t> table(order * order);
  std::vector<std::uint8_t> c(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::uint32_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * order + b] = index.at(key_of(c));
    }
  }

  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->kind_ = Kind::Table;
  g->order_ = order;
  g->weight_ = 1.0;
  g->identity_ = 0;
  g->table_ = std::move(table);
  g->abelian_ = n <= 2;
  g->label_ = "symmetric(" + std::to_string(n) + ")";
  g->build_inverses();
  return g;
}

GroupPtr MeasuredGroup::product(GroupPtr a, GroupPtr b) {
  require(a && b, ErrorCode::InvalidArgument, "product: null factor");
  const std::uint64_t order =
      static_cast<std::uint64_t>(a->order()) * b->order();
  check_cap(order, "product");
  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->order_ = static_cast<std::size_t>(order);
  g->weight_ = a->weight() * b->weight();
  g->abelian_ = a->is_abelian() && b->is_abelian();
  g->label_ = "product(" + a->label() + "," + b->label() + ")";
  if (!a->grid_shape().empty() && !b->grid_shape().empty()) {
    // Both factors are cyclic grids: keep the grid structure so the Fourier
    // layer stays applicable. Index digits of the first factor are least
    // significant, matching the i1 + n1*i2 product encoding.
    g->kind_ = Kind::Grid;
    g->shape_ = a->grid_shape();
    g->shape_.insert(g->shape_.end(), b->grid_shape().begin(),
                     b->grid_shape().end());
  } else {
    g->kind_ = Kind::Product;
    g->identity_ = static_cast<elem_t>(
        a->identity() + a->order() * static_cast<std::size_t>(b->identity()));
    g->left_ = std::move(a);
    g->right_ = std::move(b);
  }
  g->build_inverses();
  return g;
}

GroupPtr MeasuredGroup::from_table(std::vector<elem_t> table, std::size_t n,
                                   std::string label) {
  require(n >= 1, ErrorCode::InvalidArgument, label + ": invalid order 0");
  check_cap(n, label);
  require(table.size() == n * n, ErrorCode::Validation,
          label + ": table size is not order^2");
  for (std::size_t i = 0; i < table.size(); ++i) {
    require(table[i] < n, ErrorCode::Validation,
            label + ": entry " + std::to_string(table[i]) + " at position " +
                std::to_string(i) + " is out of range");
  }

  auto g = std::shared_ptr<MeasuredGroup>(new MeasuredGroup());
  g->kind_ = Kind::Table;
  g->order_ = n;
  g->weight_ = 1.0;
  g->table_ = std::move(table);
  g->label_ = std::move(label);

  // Identity: a two-sided unit.
  bool have_identity = false;
  for (std::size_t e = 0; e < n && !have_identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = g->table_[e * n + x] == x && g->table_[x * n + e] == x;
    }
    if (ok) {
      g->identity_ = static_cast<elem_t>(e);
      have_identity = true;
    }
  }
  require(have_identity, ErrorCode::Validation,
          g->label_ + ": no identity element found");

  // Associativity: exhaustive for small orders, seeded sample above.
  auto check = [&](elem_t a, elem_t b, elem_t c) {
    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
      fail(ErrorCode::Validation, triple_msg(g->label_, Triple{a, b, c}));
  };
  if (n <= 64) {
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        for (elem_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    Rng rng(0x7ab1e5eedULL);
    for (int t = 0; t < 10000; ++t) {
      check(static_cast<elem_t>(rng.below(n)),
            static_cast<elem_t>(rng.below(n)),
            static_cast<elem_t>(rng.below(n)));
    }
  }

  g->build_inverses();  // fails if some element lacks a two-sided inverse

  g->abelian_ = true;
  for (std::size_t a = 0; a < n && g->abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g->table_[a * n + b] != g->table_[b * n + a]) {
        g->abelian_ = false;
        break;
      }
    }
  return g;
}

}  // namespace weakconv
