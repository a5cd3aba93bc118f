#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchgroup/error.hpp"

namespace matchgroup {

/// Index of an element of a finite group. The identity is always 0.
using Element = std::uint32_t;

/// Largest order any family constructor will build.
inline constexpr std::size_t kDefaultOrderCap = 5040;

/// The full O(n^3) associativity scan runs up to this order. Larger tables are
/// only produced by `direct_product` of already validated factors.
inline constexpr std::size_t kAssociativityCheckCap = 256;

/// A finite group stored as a validated Cayley table with the identity at
/// index 0. Immutable after construction.
class GroupTable {
 public:
  using element_type = Element;

  /// Validates `table` (identity at 0, Latin square, associativity) and
  /// throws NotAGroupError with the first violating triple otherwise.
  static GroupTable from_cayley_table(const std::vector<std::vector<Element>>& table,
                                      std::vector<std::string> names = {}, std::string label = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorKind::InvalidInput, "Cayley table is empty");
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n)
        throw Error(ErrorKind::InvalidInput, "Cayley table row " + std::to_string(i) + " has " +
                                                 std::to_string(table[i].size()) + " entries, expected " +
                                                 std::to_string(n));
      for (std::size_t j = 0; j < n; ++j)
        if (table[i][j] >= n)
          throw Error(ErrorKind::InvalidInput, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                   ") out of range");
    }
    if (!names.empty() && names.size() != n)
      throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n) + " names, got " +
                                               std::to_string(names.size()));
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
    GroupTable g(n, std::move(flat), std::move(names), std::move(label));
    g.validate(n <= kAssociativityCheckCap);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }
  Element multiply(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  bool valid(Element a) const noexcept { return a < n_; }

  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_names() const noexcept { return !names_.empty(); }

  std::string format(Element a) const { return has_names() ? names_[a] : std::to_string(a); }

  std::optional<Element> lookup(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Element>(i);
    return std::nullopt;
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
    return out;
  }

  bool is_abelian() const noexcept {
    for (Element i = 0; i < n_; ++i)
      for (Element j = i + 1; j < n_; ++j)
        if (multiply(i, j) != multiply(j, i)) return false;
    return true;
  }

  /// Two tables describe the same group object when their laws and names agree.
  bool same_as(const GroupTable& other) const noexcept {
    return this == &other || (n_ == other.n_ && table_ == other.table_ && names_ == other.names_);
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) noexcept { return a.same_as(b); }

  GroupTable with_label(std::string label) const {
    GroupTable copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

 private:
  friend GroupTable direct_product(const GroupTable&, const GroupTable&, std::size_t);

  GroupTable(std::size_t n, std::vector<Element> table, std::vector<std::string> names, std::string label)
      : n_(n), table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {}

  void validate(bool check_associativity) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (multiply(0, static_cast<Element>(j)) != j) throw NotAGroupError(NotAGroupReason::WrongIdentity, 0, j, j);
      if (multiply(static_cast<Element>(j), 0) != j) throw NotAGroupError(NotAGroupReason::WrongIdentity, j, 0, 0);
    }
    std::vector<std::size_t> seen(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), n_);
      for (std::size_t j = 0; j < n_; ++j) {
        const Element v = table_[i * n_ + j];
        if (seen[v] != n_) throw NotAGroupError(NotAGroupReason::NotLatinSquare, i, seen[v], j);
        seen[v] = j;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      std::fill(seen.begin(), seen.end(), n_);
      for (std::size_t i = 0; i < n_; ++i) {
        const Element v = table_[i * n_ + j];
        if (seen[v] != n_) throw NotAGroupError(NotAGroupReason::NotLatinSquare, seen[v], i, j);
        seen[v] = i;
      }
    }
    if (check_associativity) {
      for (Element i = 0; i < n_; ++i)
        for (Element j = 0; j < n_; ++j) {
          const Element ij = multiply(i, j);
          for (Element k = 0; k < n_; ++k)
            if (multiply(ij, k) != multiply(i, multiply(j, k)))
              throw NotAGroupError(NotAGroupReason::NotAssociative, i, j, k);
        }
    }
    compute_inverses();
  }

  void compute_inverses() {
    inverses_.assign(n_, 0);
    for (Element i = 0; i < n_; ++i) {
      bool found = false;
      for (Element j = 0; j < n_; ++j)
        if (multiply(i, j) == 0 && multiply(j, i) == 0) {
          inverses_[i] = j;
          found = true;
          break;
        }
      // Unreachable for a Latin square with identity at 0 that is associative.
      if (!found) throw NotAGroupError(NotAGroupReason::NotAssociative, i, i, i);
    }
  }

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
  std::string label_;
};

inline void enforce_order_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw Error(ErrorKind::SizeLimit, what + " has order " + std::to_string(order) + " above cap " +
                                          std::to_string(cap));
}

/// Builds a table from `law(i, j)` over indices [0, n) and validates it.
template <class Law>
GroupTable make_from_law(std::size_t n, Law&& law, std::string label) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<Element>(law(i, j));
  return GroupTable::from_cayley_table(rows, {}, std::move(label));
}

/// C_n with table[i][j] = (i + j) mod n.
inline GroupTable make_cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group order must be positive");
  enforce_order_cap(n, cap, "C" + std::to_string(n));
  return make_from_law(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }, "C" + std::to_string(n));
}

/// D_m of order 2m. Index k < m is the rotation r^k; index m + k is the
/// reflection r^k s. Uses s r = r^{-1} s.
inline GroupTable make_dihedral(std::size_t m, std::size_t cap = kDefaultOrderCap) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "dihedral parameter must be at least 1");
  enforce_order_cap(2 * m, cap, "D" + std::to_string(m));
  auto law = [m](std::size_t i, std::size_t j) {
    const std::size_t a = i % m, f = i / m;
    const std::size_t b = j % m, g = j / m;
    // (r^a s^f)(r^b s^g) = r^{a + (-1)^f b} s^{f+g}
    const std::size_t rot = f == 0 ? (a + b) % m : (a + m - b) % m;
    return ((f + g) % 2) * m + rot;
  };
  return make_from_law(2 * m, law, "D" + std::to_string(m));
}

/// All permutations of {0..k-1} in lexicographic order (identity first).
inline std::vector<std::vector<std::size_t>> lexicographic_permutations(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// S_k, elements are permutations listed lexicographically; the product
/// p * q is the composition "apply q, then p": (p * q)(x) = p(q(x)).
inline GroupTable make_symmetric(std::size_t k, std::size_t cap = kDefaultOrderCap) {
  if (k < 1 || k > 5) throw Error(ErrorKind::InvalidInput, "symmetric group degree must be in [1, 5]");
  const auto perms = lexicographic_permutations(k);
  enforce_order_cap(perms.size(), cap, "S" + std::to_string(k));
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  auto law = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> r(k);
    for (std::size_t x = 0; x < k; ++x) r[x] = perms[i][perms[j][x]];
    return index_of(r);
  };
  return make_from_law(perms.size(), law, "S" + std::to_string(k));
}

/// Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k.
inline GroupTable make_quaternion() {
  // unit products for {1, i, j, k} as (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto law = [](std::size_t i, std::size_t j) {
    const int sign_i = i % 2 == 0 ? 1 : -1, sign_j = j % 2 == 0 ? 1 : -1;
    const auto [s, u] = units[i / 2][j / 2];
    const int sign = s * sign_i * sign_j;
    return static_cast<std::size_t>(2 * u + (sign == 1 ? 0 : 1));
  };
  return make_from_law(8, law, "Q8");
}

/// G x H with (g, h) at index g * |H| + h.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t cap = kDefaultOrderCap) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::string label = g.label() + "x" + h.label();
  enforce_order_cap(n, cap, label);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = static_cast<Element>(
          g.multiply(static_cast<Element>(a / nh), static_cast<Element>(b / nh)) * nh +
          h.multiply(static_cast<Element>(a % nh), static_cast<Element>(b % nh)));
  GroupTable out(n, std::move(flat), {}, std::move(label));
  out.validate(n <= kAssociativityCheckCap);
  return out;
}

}  // namespace matchgroup
