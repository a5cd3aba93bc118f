#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matchgroup/subset.hpp"
#include "matchgroup/subset_algebra.hpp"

namespace matchgroup {

/// Largest |A| accepted by the factorial-time bijection scan.
inline constexpr std::size_t kBruteForceCap = 7;

/// Bipartite graph on A (left) and B (right) with an edge (a, b) iff ab is not
/// in A. Row i of `adjacency` lists right indices in ascending order and is
/// exactly the candidate set E_a for a = left[i].
template <class Group>
struct MatchabilityGraph {
  using element_type = typename Group::element_type;
  std::vector<element_type> left;
  std::vector<element_type> right;
  std::vector<std::vector<std::size_t>> adjacency;
};

/// A bijection A -> B given as (a, phi(a)) pairs in ascending order of a.
template <class Group>
struct Matching {
  using element_type = typename Group::element_type;
  std::vector<std::pair<element_type, element_type>> pairs;
};

/// S inside A whose neighborhood (union of the E_s) is smaller than S.
template <class Group>
struct HallViolator {
  Subset<Group> s;
  Subset<Group> neighborhood;
  std::size_t deficiency = 0;
};

template <class Group>
using MatchOutcome = std::variant<Matching<Group>, HallViolator<Group>>;

template <class Group>
MatchabilityGraph<Group> build_graph(const Subset<Group>& a, const Subset<Group>& b) {
  require_same_owner(a.owner(), b.owner());
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "A and B must be nonempty");
  const Group& g = a.owner();
  MatchabilityGraph<Group> graph;
  graph.left = a.elements();
  graph.right = b.elements();
  graph.adjacency.resize(graph.left.size());
  for (std::size_t i = 0; i < graph.left.size(); ++i)
    for (std::size_t j = 0; j < graph.right.size(); ++j)
      if (!a.contains(g.multiply(graph.left[i], graph.right[j]))) graph.adjacency[i].push_back(j);
  return graph;
}

namespace detail {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

inline bool augment(const std::vector<std::vector<std::size_t>>& adj, std::size_t u, std::vector<char>& visited,
                    std::vector<std::size_t>& match_left, std::vector<std::size_t>& match_right) {
  for (std::size_t v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] == kUnmatched || augment(adj, match_right[v], visited, match_left, match_right)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Maximum bipartite matching on the matchability graph (Kuhn's algorithm,
/// ascending scan order). Returns a perfect matching, or the set of left
/// vertices reachable by alternating paths from the unmatched ones, which is
/// a Hall violator.
template <class Group>
MatchOutcome<Group> find_matching(const Subset<Group>& a, const Subset<Group>& b) {
  require_same_owner(a.owner(), b.owner());
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "A and B must be nonempty");
  if (a.size() != b.size())
    throw Error(ErrorKind::SizeMismatch,
                "|A| = " + std::to_string(a.size()) + " differs from |B| = " + std::to_string(b.size()));
  if (contains_identity(b)) throw Error(ErrorKind::IdentityInB, "the identity lies in B");

  const auto graph = build_graph(a, b);
  const std::size_t n = graph.left.size();
  std::vector<std::size_t> match_left(n, detail::kUnmatched), match_right(n, detail::kUnmatched);
  std::vector<char> visited(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    detail::augment(graph.adjacency, u, visited, match_left, match_right);
  }

  if (std::none_of(match_left.begin(), match_left.end(), [](std::size_t v) { return v == detail::kUnmatched; })) {
    Matching<Group> m;
    for (std::size_t u = 0; u < n; ++u) m.pairs.emplace_back(graph.left[u], graph.right[match_left[u]]);
    return m;
  }

  std::vector<char> left_seen(n, 0), right_seen(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] == detail::kUnmatched) {
      left_seen[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : graph.adjacency[u]) {
      if (right_seen[v]) continue;
      right_seen[v] = 1;
      // v is matched: an unmatched v would give an augmenting path.
      const std::size_t w = match_right[v];
      if (!left_seen[w]) {
        left_seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  HallViolator<Group> violator{Subset<Group>(a.owner()), Subset<Group>(a.owner()), 0};
  for (std::size_t u = 0; u < n; ++u)
    if (left_seen[u]) violator.s.insert(graph.left[u]);
  for (std::size_t v = 0; v < n; ++v)
    if (right_seen[v]) violator.neighborhood.insert(graph.right[v]);
  violator.deficiency = violator.s.size() - violator.neighborhood.size();
  return violator;
}

template <class Group>
bool has_matching(const Subset<Group>& a, const Subset<Group>& b) {
  return std::holds_alternative<Matching<Group>>(find_matching(a, b));
}

struct VerifyResult {
  bool valid = false;
  std::string reason;
  explicit operator bool() const noexcept { return valid; }
};

/// Checks that `m` is a bijection A -> B with a * phi(a) outside A for every
/// pair. On failure `reason` names the first problem found.
template <class Group>
VerifyResult verify_matching(const Subset<Group>& a, const Subset<Group>& b, const Matching<Group>& m) {
  if (!a.owner().same_as(b.owner())) return {false, "A and B belong to different groups"};
  const Group& g = a.owner();
  if (m.pairs.size() != a.size() || a.size() != b.size())
    return {false, "not bijective: " + std::to_string(m.pairs.size()) + " pairs for |A| = " +
                       std::to_string(a.size()) + ", |B| = " + std::to_string(b.size())};
  Subset<Group> lefts(g), rights(g);
  for (const auto& [x, y] : m.pairs) {
    if (!a.contains(x)) return {false, "not bijective: " + g.format(x) + " is not in A"};
    if (!b.contains(y)) return {false, "not bijective: " + g.format(y) + " is not in B"};
    if (lefts.contains(x)) return {false, "not bijective: " + g.format(x) + " is matched twice"};
    if (rights.contains(y)) return {false, "not bijective: " + g.format(y) + " is used twice"};
    lefts.insert(x);
    rights.insert(y);
  }
  for (const auto& [x, y] : m.pairs) {
    const auto p = g.multiply(x, y);
    if (a.contains(p)) return {false, g.format(x) + "*" + g.format(y) + " = " + g.format(p) + " lies in A"};
  }
  return {true, {}};
}

/// Independent oracle: scans all |A|! bijections in lexicographic order of
/// the image sequence and returns the first valid one. Does not reject 1 in B.
template <class Group>
std::optional<Matching<Group>> brute_force_matching(const Subset<Group>& a, const Subset<Group>& b,
                                                    std::size_t cap = kBruteForceCap) {
  require_same_owner(a.owner(), b.owner());
  if (a.size() != b.size())
    throw Error(ErrorKind::SizeMismatch,
                "|A| = " + std::to_string(a.size()) + " differs from |B| = " + std::to_string(b.size()));
  if (a.size() > cap)
    throw Error(ErrorKind::SizeLimit, "brute force limited to |A| <= " + std::to_string(cap));
  const Group& g = a.owner();
  const auto left = a.elements();
  const auto right = b.elements();
  std::vector<std::size_t> perm(right.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < left.size() && ok; ++i) ok = !a.contains(g.multiply(left[i], right[perm[i]]));
    if (ok) {
      Matching<Group> m;
      for (std::size_t i = 0; i < left.size(); ++i) m.pairs.emplace_back(left[i], right[perm[i]]);
      return m;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace matchgroup
