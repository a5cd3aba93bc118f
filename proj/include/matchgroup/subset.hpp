#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "matchgroup/error.hpp"
#include "matchgroup/group_table.hpp"
#include "matchgroup/lattice.hpp"

namespace matchgroup {

/// A finite subset of a group. Finite groups use a dense bitset over element
/// indices; lattice groups keep a sorted, duplicate-free point list. Both
/// enumerate their members in ascending element order. The owner group must
/// outlive the subset.
template <class Group>
class Subset;

template <class Group>
inline void require_same_owner(const Group& a, const Group& b) {
  if (!a.same_as(b)) throw Error(ErrorKind::MixedGroups, "subsets belong to different groups");
}

template <>
class Subset<GroupTable> {
 public:
  using group_type = GroupTable;
  using element_type = Element;

  explicit Subset(const GroupTable& owner) : owner_(&owner), words_((owner.order() + 63) / 64, 0) {}

  Subset(const GroupTable& owner, std::initializer_list<Element> members) : Subset(owner) {
    for (Element e : members) insert(e);
  }

  template <class Range>
  static Subset from(const GroupTable& owner, const Range& members) {
    Subset s(owner);
    for (const auto& e : members) s.insert(static_cast<Element>(e));
    return s;
  }

  /// Members are the set bits of `mask` (groups of order <= 64).
  static Subset from_mask(const GroupTable& owner, std::uint64_t mask) {
    Subset s(owner);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  static Subset full(const GroupTable& owner) {
    Subset s(owner);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  const GroupTable& owner() const noexcept { return *owner_; }

  bool contains(Element e) const noexcept {
    return e < owner_->order() && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }

  void insert(Element e) {
    if (!owner_->valid(e))
      throw Error(ErrorKind::InvalidInput, "element " + std::to_string(e) + " not in group of order " +
                                               std::to_string(owner_->order()));
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }

  void erase(Element e) noexcept {
    if (e < owner_->order()) words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        out.push_back(static_cast<Element>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const Subset& other) const {
    require_same_owner(*owner_, *other.owner_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  Subset& operator|=(const Subset& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  Subset& operator&=(const Subset& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  Subset& operator-=(const Subset& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.owner_->same_as(*b.owner_) && a.words_ == b.words_;
  }

  /// Canonical order: lexicographic on the ascending element lists.
  friend bool operator<(const Subset& a, const Subset& b) { return a.elements() < b.elements(); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Element e : elements()) {
      if (!first) s += ",";
      s += owner_->format(e);
      first = false;
    }
    return s + "}";
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  template <class Op>
  Subset& combine(const Subset& o, Op op) {
    require_same_owner(*owner_, *o.owner_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
    return *this;
  }

  void trim() noexcept {
    const std::size_t n = owner_->order();
    if (n % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }

  const GroupTable* owner_;
  std::vector<std::uint64_t> words_;
};

template <>
class Subset<LatticeGroup> {
 public:
  using group_type = LatticeGroup;
  using element_type = LatticePoint;

  explicit Subset(const LatticeGroup& owner) : owner_(&owner) {}

  Subset(const LatticeGroup& owner, std::initializer_list<LatticePoint> members) : Subset(owner) {
    for (const auto& e : members) insert(e);
  }

  template <class Range>
  static Subset from(const LatticeGroup& owner, const Range& members) {
    Subset s(owner);
    for (const auto& e : members) {
      if (!owner.valid(e)) throw Error(ErrorKind::InvalidInput, "point has wrong dimension");
      s.points_.push_back(e);
    }
    std::sort(s.points_.begin(), s.points_.end());
    s.points_.erase(std::unique(s.points_.begin(), s.points_.end()), s.points_.end());
    return s;
  }

  const LatticeGroup& owner() const noexcept { return *owner_; }

  bool contains(const LatticePoint& e) const { return std::binary_search(points_.begin(), points_.end(), e); }

  void insert(const LatticePoint& e) {
    if (!owner_->valid(e)) throw Error(ErrorKind::InvalidInput, "point has wrong dimension");
    auto it = std::lower_bound(points_.begin(), points_.end(), e);
    if (it == points_.end() || *it != e) points_.insert(it, e);
  }

  void erase(const LatticePoint& e) {
    auto it = std::lower_bound(points_.begin(), points_.end(), e);
    if (it != points_.end() && *it == e) points_.erase(it);
  }

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<LatticePoint>& elements() const noexcept { return points_; }

  bool is_subset_of(const Subset& other) const {
    require_same_owner(*owner_, *other.owner_);
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
  }

  Subset& operator|=(const Subset& o) {
    require_same_owner(*owner_, *o.owner_);
    std::vector<LatticePoint> out;
    std::set_union(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(), std::back_inserter(out));
    points_ = std::move(out);
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    require_same_owner(*owner_, *o.owner_);
    std::vector<LatticePoint> out;
    std::set_intersection(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
                          std::back_inserter(out));
    points_ = std::move(out);
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    require_same_owner(*owner_, *o.owner_);
    std::vector<LatticePoint> out;
    std::set_difference(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
                        std::back_inserter(out));
    points_ = std::move(out);
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.owner_->same_as(*b.owner_) && a.points_ == b.points_;
  }
  friend bool operator<(const Subset& a, const Subset& b) { return a.points_ < b.points_; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) s += ",";
      s += owner_->format(points_[i]);
    }
    return s + "}";
  }

 private:
  const LatticeGroup* owner_;
  std::vector<LatticePoint> points_;
};

using GroupSubset = Subset<GroupTable>;
using LatticeSubset = Subset<LatticeGroup>;

template <class Group>
bool is_identity(const Group& g, const typename Group::element_type& e) {
  return e == g.identity();
}

template <class Group>
bool contains_identity(const Subset<Group>& s) {
  return s.contains(s.owner().identity());
}

}  // namespace matchgroup
