#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "matchgroup/group_table.hpp"
#include "matchgroup/lattice.hpp"
#include "matchgroup/subset.hpp"

namespace matchgroup {

/// Largest order accepted by `enumerate_subgroups`.
inline constexpr std::size_t kSubgroupCap = 24;

inline bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Least k >= 1 with a^k = 1.
inline std::size_t element_order(const GroupTable& g, Element a) {
  if (!g.valid(a)) throw Error(ErrorKind::InvalidInput, "element out of range");
  std::size_t k = 1;
  for (Element x = a; x != GroupTable::identity(); x = g.multiply(x, a)) ++k;
  return k;
}

/// <a> = {a^k : k >= 0}.
inline GroupSubset cyclic_subgroup(const GroupTable& g, Element a) {
  if (!g.valid(a)) throw Error(ErrorKind::InvalidInput, "element out of range");
  GroupSubset s(g);
  Element x = GroupTable::identity();
  do {
    s.insert(x);
    x = g.multiply(x, a);
  } while (x != GroupTable::identity());
  return s;
}

/// Smallest subgroup containing `generators` (closure under the product; for a
/// finite group that already gives inverses).
inline GroupSubset subgroup_closure(const GroupSubset& generators) {
  const GroupTable& g = generators.owner();
  GroupSubset h(g);
  h.insert(GroupTable::identity());
  std::vector<Element> frontier{GroupTable::identity()};
  const auto gens = generators.elements();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element s : gens) {
        const Element y = g.multiply(x, s);
        if (!h.contains(y)) {
          h.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return h;
}

/// Subgroup test: contains the identity and is closed under products and inverses.
inline bool is_subgroup(const GroupSubset& h) {
  const GroupTable& g = h.owner();
  if (!h.contains(GroupTable::identity())) return false;
  const auto members = h.elements();
  for (Element a : members) {
    if (!h.contains(g.inverse(a))) return false;
    for (Element b : members)
      if (!h.contains(g.multiply(a, b))) return false;
  }
  return true;
}

/// Every subgroup of `g`, duplicate-free, ordered by size then canonically.
/// Built by repeatedly adjoining one element to a known subgroup and closing.
inline std::vector<GroupSubset> enumerate_subgroups(const GroupTable& g, std::size_t cap = kSubgroupCap) {
  enforce_order_cap(g.order(), cap, "subgroup enumeration on " + g.label());
  auto key_less = [](const GroupSubset& a, const GroupSubset& b) { return a.words() < b.words(); };
  std::set<GroupSubset, decltype(key_less)> found(key_less);
  std::vector<GroupSubset> queue;
  GroupSubset trivial(g, {GroupTable::identity()});
  found.insert(trivial);
  queue.push_back(trivial);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const GroupSubset h = queue[qi];
    for (Element x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      GroupSubset gens = h;
      gens.insert(x);
      GroupSubset closed = subgroup_closure(gens);
      if (found.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<GroupSubset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const GroupSubset& a, const GroupSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

struct GroupClassification {
  bool is_trivial = false;
  bool is_cyclic_prime = false;
  bool is_torsion_free = false;
  bool predicted_matching_property = false;
};

/// Every group of prime order is cyclic, so the finite test is on |G| alone.
/// The trivial group is counted as having the matching property.
inline GroupClassification classify(const GroupTable& g) {
  GroupClassification c;
  c.is_trivial = g.order() == 1;
  c.is_cyclic_prime = is_prime(g.order());
  c.is_torsion_free = c.is_trivial;
  c.predicted_matching_property = c.is_trivial || c.is_cyclic_prime;
  return c;
}

inline GroupClassification classify(const LatticeGroup&) {
  GroupClassification c;
  c.is_torsion_free = true;
  c.predicted_matching_property = true;
  return c;
}

}  // namespace matchgroup
