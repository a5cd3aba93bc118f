#pragma once

#include <algorithm>
#include <vector>

#include "matchgroup/group_table.hpp"

namespace matchgroup {

/// Test catalog of finite groups up to order 12: all cyclic groups, small
/// products of cyclic groups, dihedral groups, Q8 and S3. Sorted by order,
/// then by label. D3 and S3 are both kept; their element orderings differ.
inline std::vector<GroupTable> catalog(std::size_t max_order = 12) {
  std::vector<GroupTable> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 12); ++n) out.push_back(make_cyclic(n));
  const auto c2 = make_cyclic(2), c3 = make_cyclic(3), c4 = make_cyclic(4), c6 = make_cyclic(6);
  auto add = [&](GroupTable g) {
    if (g.order() <= max_order) out.push_back(std::move(g));
  };
  add(direct_product(c2, c2));
  add(direct_product(c2, c4));
  add(direct_product(direct_product(c2, c2), c2));
  add(direct_product(c3, c3));
  add(direct_product(c2, c6));
  for (std::size_t m = 3; m <= 6; ++m) add(make_dihedral(m));
  add(make_quaternion());
  add(make_symmetric(3));
  std::stable_sort(out.begin(), out.end(), [](const GroupTable& a, const GroupTable& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.label() < b.label();
  });
  return out;
}

}  // namespace matchgroup
