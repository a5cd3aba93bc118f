#pragma once

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "matchgroup/subset.hpp"

namespace matchgroup {

/// An element c of AB together with every factorization c = ab.
template <class Group>
struct ProductWitness {
  using element_type = typename Group::element_type;
  element_type value;
  std::vector<std::pair<element_type, element_type>> factorizations;
};

/// AB = {ab : a in A, b in B}. Lattice product sets are Minkowski sums.
template <class Group>
Subset<Group> product_set(const Subset<Group>& a, const Subset<Group>& b) {
  require_same_owner(a.owner(), b.owner());
  const Group& g = a.owner();
  if constexpr (std::is_same_v<Group, GroupTable>) {
    Subset<Group> out(g);
    const auto bs = b.elements();
    for (Element x : a.elements())
      for (Element y : bs) out.insert(g.multiply(x, y));
    return out;
  } else {
    std::vector<typename Group::element_type> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& x : a.elements())
      for (const auto& y : b.elements()) sums.push_back(g.multiply(x, y));
    return Subset<Group>::from(g, sums);
  }
}

/// Every element of AB with exactly one factorization, ascending.
template <class Group>
std::vector<ProductWitness<Group>> unique_products(const Subset<Group>& a, const Subset<Group>& b) {
  require_same_owner(a.owner(), b.owner());
  const Group& g = a.owner();
  using E = typename Group::element_type;
  std::vector<ProductWitness<Group>> out;
  if constexpr (std::is_same_v<Group, GroupTable>) {
    std::vector<std::uint32_t> count(g.order(), 0);
    std::vector<std::pair<E, E>> first(g.order());
    const auto bs = b.elements();
    for (Element x : a.elements())
      for (Element y : bs) {
        const Element c = g.multiply(x, y);
        if (count[c]++ == 0) first[c] = {x, y};
      }
    for (Element c = 0; c < g.order(); ++c)
      if (count[c] == 1) out.push_back({c, {first[c]}});
  } else {
    std::map<E, std::pair<std::size_t, std::pair<E, E>>> seen;
    for (const auto& x : a.elements())
      for (const auto& y : b.elements()) {
        auto [it, inserted] = seen.try_emplace(g.multiply(x, y), 0, std::pair<E, E>{x, y});
        ++it->second.first;
      }
    for (const auto& [c, entry] : seen)
      if (entry.first == 1) out.push_back({c, {entry.second}});
  }
  return out;
}

/// E_a = {x in B : ax not in A}: the elements of B that `a` may be matched to.
template <class Group>
Subset<Group> candidate_set(const Subset<Group>& a_set, const Subset<Group>& b_set,
                            const typename Group::element_type& a) {
  require_same_owner(a_set.owner(), b_set.owner());
  if (!a_set.contains(a)) throw Error(ErrorKind::NotInA, "element " + a_set.owner().format(a) + " is not in A");
  const Group& g = a_set.owner();
  Subset<Group> out(g);
  for (const auto& x : b_set.elements())
    if (!a_set.contains(g.multiply(a, x))) out.insert(x);
  return out;
}

/// V_S = {x in B : sx in A for all s in S}, the intersection of the
/// complements B \ E_s. Always satisfies S * V_S being inside A.
template <class Group>
Subset<Group> stable_set(const Subset<Group>& a_set, const Subset<Group>& b_set, const Subset<Group>& s_set) {
  require_same_owner(a_set.owner(), b_set.owner());
  require_same_owner(a_set.owner(), s_set.owner());
  if (s_set.empty()) throw Error(ErrorKind::EmptyS, "S must be nonempty");
  if (!s_set.is_subset_of(a_set)) throw Error(ErrorKind::NotInA, "S must be a subset of A");
  const Group& g = a_set.owner();
  Subset<Group> out(g);
  for (const auto& x : b_set.elements()) {
    bool stable = true;
    for (const auto& s : s_set.elements())
      if (!a_set.contains(g.multiply(s, x))) {
        stable = false;
        break;
      }
    if (stable) out.insert(x);
  }
  return out;
}

}  // namespace matchgroup
