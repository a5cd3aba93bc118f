#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchgroup/error.hpp"

namespace matchgroup {

/// A point of Z^d. Ordered lexicographically.
using LatticePoint = std::vector<std::int64_t>;

/// Z^d under componentwise addition. Torsion-free by construction: k * x = 0
/// with k >= 1 forces x = 0.
class LatticeGroup {
 public:
  using element_type = LatticePoint;

  explicit LatticeGroup(std::size_t dimension) : d_(dimension) {
    if (d_ == 0) throw Error(ErrorKind::InvalidInput, "lattice dimension must be positive");
  }

  std::size_t dimension() const noexcept { return d_; }
  LatticePoint identity() const { return LatticePoint(d_, 0); }

  LatticePoint multiply(const LatticePoint& a, const LatticePoint& b) const {
    LatticePoint r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = a[i] + b[i];
    return r;
  }

  LatticePoint inverse(const LatticePoint& a) const {
    LatticePoint r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = -a[i];
    return r;
  }

  bool valid(const LatticePoint& a) const noexcept { return a.size() == d_; }
  bool is_identity(const LatticePoint& a) const noexcept {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }

  std::string label() const { return "Z^" + std::to_string(d_); }

  std::string format(const LatticePoint& a) const {
    if (d_ == 1) return std::to_string(a[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < d_; ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }

  bool same_as(const LatticeGroup& other) const noexcept { return d_ == other.d_; }
  friend bool operator==(const LatticeGroup& a, const LatticeGroup& b) noexcept { return a.same_as(b); }

 private:
  std::size_t d_;
};

}  // namespace matchgroup
