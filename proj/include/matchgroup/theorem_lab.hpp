#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "matchgroup/group_core.hpp"
#include "matchgroup/matching.hpp"
#include "matchgroup/parallel.hpp"
#include "matchgroup/random.hpp"
#include "matchgroup/report.hpp"
#include "matchgroup/subset_algebra.hpp"

namespace matchgroup {

/// Sweep caps and sampling parameters shared by all checks.
struct LabConfig {
  std::size_t pair_sweep_cap = 6;           // exhaustive Kemperman / Olson / corollary sweeps
  std::size_t property_exhaustive_cap = 7;  // exhaustive matching-property sweep
  std::size_t automatching_cap = 14;
  std::size_t subgroup_cap = kSubgroupCap;
  std::size_t sampled_order_cap = 64;  // largest order any sampled sweep accepts
  std::size_t samples = 2000;
  std::size_t hall_samples = 500;
  std::size_t only_if_max_size = 5;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::uint64_t pow2(std::size_t n) { return std::uint64_t{1} << n; }

inline void require_mask_sized(const GroupTable& g) {
  if (g.order() > 63) throw Error(ErrorKind::SizeLimit, "exhaustive sweeps need order <= 63");
}

/// All k-element combinations of `pool`, lexicographic.
template <class T>
std::vector<std::vector<T>> combinations(const std::vector<T>& pool, std::size_t k) {
  std::vector<std::vector<T>> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<T> c;
    c.reserve(k);
    for (auto i : idx) c.push_back(pool[i]);
    out.push_back(std::move(c));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::vector<Element> all_elements(const GroupTable& g, bool skip_identity) {
  std::vector<Element> out;
  for (Element e = skip_identity ? 1 : 0; e < g.order(); ++e) out.push_back(e);
  return out;
}

inline GroupSubset random_subset(const GroupTable& g, Rng& rng, std::size_t k, bool skip_identity) {
  return GroupSubset::from(g, rng.sample(all_elements(g, skip_identity), k));
}

/// Pair (A, B) of nonempty subsets indexed by i over the (2^n - 1)^2 grid.
inline std::pair<GroupSubset, GroupSubset> pair_from_index(const GroupTable& g, std::uint64_t i) {
  const std::uint64_t side = pow2(g.order()) - 1;
  return {GroupSubset::from_mask(g, i / side + 1), GroupSubset::from_mask(g, i % side + 1)};
}

template <class Group>
Record pair_record(std::string kind, const Subset<Group>& a, const Subset<Group>& b) {
  Record r{std::move(kind), {}};
  r.add("A", a.to_string()).add("B", b.to_string());
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- Kemperman

struct KempermanOutcome {
  bool hypothesis = false;  // some element of AB has a unique factorization
  bool holds = true;
  bool equality = false;
  std::optional<Record> failure;
};

template <class Group>
KempermanOutcome kemperman_instance(const Subset<Group>& a, const Subset<Group>& b) {
  KempermanOutcome out;
  const auto unique = unique_products(a, b);
  if (unique.empty()) return out;
  out.hypothesis = true;
  const std::size_t ab = product_set(a, b).size();
  const std::size_t bound = a.size() + b.size() - 1;
  out.holds = ab >= bound;
  out.equality = ab == bound;
  if (!out.holds) {
    const Group& g = a.owner();
    Record r = detail::pair_record("kemperman-violation", a, b);
    r.add("|A|", std::uint64_t{a.size()}).add("|B|", std::uint64_t{b.size()}).add("|AB|", std::uint64_t{ab});
    r.add("claimed_min", std::uint64_t{bound}).add("unique_c", g.format(unique.front().value));
    out.failure = std::move(r);
  }
  return out;
}

/// |AB| >= |A| + |B| - 1 whenever some c in AB is a unique product. Skipped
/// when no unique product exists.
inline CheckReport check_kemperman(const GroupTable& g, const GroupSubset& a, const GroupSubset& b) {
  detail::Stopwatch clock;
  require_same_owner(g, a.owner());
  require_same_owner(g, b.owner());
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "A and B must be nonempty");
  CheckReport r{"kemperman", g.label()};
  r.instances_tested = 1;
  const auto outcome = kemperman_instance(a, b);
  if (!outcome.hypothesis) {
    r.instances_skipped = 1;
  } else {
    const auto unique = unique_products(a, b);
    Record w = detail::pair_record("unique-product", a, b);
    w.add("c", g.format(unique.front().value))
        .add("factorization", g.format(unique.front().factorizations.front().first) + "*" +
                                  g.format(unique.front().factorizations.front().second))
        .add("|AB|", std::uint64_t{product_set(a, b).size()});
    r.witnesses.push_back(std::move(w));
    if (outcome.failure) r.add_failure(*outcome.failure);
  }
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

/// Exhaustive over all nonempty pairs for |G| <= cfg.pair_sweep_cap, seeded
/// sampling (cfg.samples pairs) above.
inline CheckReport sweep_kemperman(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  CheckReport r{"kemperman", g.label()};
  enforce_order_cap(g.order(), cfg.sampled_order_cap, "kemperman sweep on " + g.label());
  std::vector<KempermanOutcome> outcomes;
  std::vector<std::pair<GroupSubset, GroupSubset>> sampled;
  if (g.order() <= cfg.pair_sweep_cap) {
    detail::require_mask_sized(g);
    const std::uint64_t side = detail::pow2(g.order()) - 1;
    outcomes = parallel_map(side * side, cfg.jobs, [&](std::size_t i) {
      const auto [a, b] = detail::pair_from_index(g, i);
      return kemperman_instance(a, b);
    });
    r.set_counter("mode", "exhaustive");
  } else {
    const std::uint64_t seed = derive_seed(cfg.seed, "kemperman", g.label());
    Rng rng(seed);
    for (std::size_t t = 0; t < cfg.samples; ++t) {
      auto a = detail::random_subset(g, rng, rng.uniform(1, g.order()), false);
      auto b = detail::random_subset(g, rng, rng.uniform(1, g.order()), false);
      sampled.emplace_back(std::move(a), std::move(b));
    }
    outcomes = parallel_map(sampled.size(), cfg.jobs,
                            [&](std::size_t i) { return kemperman_instance(sampled[i].first, sampled[i].second); });
    r.seed = cfg.seed;
    r.set_counter("mode", "sampled");
  }
  std::uint64_t hypothesis = 0, equality = 0;
  for (auto& o : outcomes) {
    ++r.instances_tested;
    if (!o.hypothesis) {
      ++r.instances_skipped;
      continue;
    }
    ++hypothesis;
    equality += o.equality;
    if (o.failure) r.add_failure(std::move(*o.failure));
  }
  r.set_counter("unique_product_instances", hypothesis);
  r.set_counter("equality_instances", equality);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- corollary

struct CorollaryEvaluation {
  std::string x_choice;
  std::size_t x_size = 0;
  bool stated_holds = true;     // |X| >= |U| + |V| + 1 as printed
  bool corrected_holds = true;  // |X| >= |U| + |V|
  Record record;
};

struct CorollaryOutcome {
  bool admissible = false;
  std::vector<CorollaryEvaluation> evaluations;
};

namespace detail {

inline CorollaryEvaluation evaluate_corollary(const GroupSubset& u, const GroupSubset& v, const GroupSubset& x,
                                              std::string choice) {
  CorollaryEvaluation e;
  e.x_choice = std::move(choice);
  e.x_size = x.size();
  e.stated_holds = x.size() >= u.size() + v.size() + 1;
  e.corrected_holds = x.size() >= u.size() + v.size();
  e.record = Record{"", {}};
  e.record.add("U", u.to_string()).add("V", v.to_string()).add("UV", product_set(u, v).to_string());
  e.record.add("X", x.to_string()).add("X_choice", e.x_choice);
  e.record.add("|X|", std::uint64_t{x.size()}).add("|U|+|V|", std::uint64_t{u.size() + v.size()});
  return e;
}

inline bool corollary_admissible(const GroupSubset& u, const GroupSubset& v, const GroupSubset& uv) {
  return !u.empty() && !v.empty() && !contains_identity(u) && !contains_identity(v) && !contains_identity(uv);
}

}  // namespace detail

/// Evaluates both the printed bound |X| >= |U|+|V|+1 and the bound
/// |X| >= |U|+|V| that the proof actually yields (1 = 1*1 lies in AB but not
/// in X). Only the second is asserted; printed-bound failures are flagged.
inline CheckReport check_corollary(const GroupTable& g, const GroupSubset& u, const GroupSubset& v,
                                   const GroupSubset& x) {
  detail::Stopwatch clock;
  CheckReport r{"corollary", g.label()};
  r.instances_tested = 1;
  const auto uv = product_set(u, v);
  const bool admissible = detail::corollary_admissible(u, v, uv) && !contains_identity(x) && u.is_subset_of(x) &&
                          v.is_subset_of(x) && uv.is_subset_of(x);
  if (!admissible) {
    r.instances_skipped = 1;
    Record rec{"precondition-unmet", {}};
    rec.add("U", u.to_string()).add("V", v.to_string()).add("X", x.to_string());
    r.witnesses.push_back(std::move(rec));
  } else {
    auto e = detail::evaluate_corollary(u, v, x, "given");
    r.set_counter("stated_bound", e.stated_holds ? "holds" : "fails");
    r.set_counter("corrected_bound", e.corrected_holds ? "holds" : "fails");
    if (!e.stated_holds) {
      e.record.kind = "stated-bound-counterexample";
      r.add_flagged(e.record);
    }
    if (!e.corrected_holds) {
      e.record.kind = "corrected-bound-violation";
      r.add_failure(e.record);
    }
  }
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

/// Over all nonempty (U, V) with U, V, UV avoiding the identity, tries
/// X = U u V u UV and X = G \ {1}. Printed-bound counterexamples are flagged
/// smallest |X| first.
inline CheckReport sweep_corollary(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  enforce_order_cap(g.order(), cfg.pair_sweep_cap, "corollary sweep on " + g.label());
  detail::require_mask_sized(g);
  CheckReport r{"corollary", g.label()};
  const std::uint64_t side = detail::pow2(g.order()) - 1;
  GroupSubset everything_but_one = GroupSubset::full(g);
  everything_but_one.erase(GroupTable::identity());
  auto outcomes = parallel_map(side * side, cfg.jobs, [&](std::size_t i) {
    const auto [u, v] = detail::pair_from_index(g, i);
    CorollaryOutcome o;
    const auto uv = product_set(u, v);
    if (!detail::corollary_admissible(u, v, uv)) return o;
    o.admissible = true;
    const GroupSubset minimal = u | v | uv;
    o.evaluations.push_back(detail::evaluate_corollary(u, v, minimal, "minimal"));
    if (!(minimal == everything_but_one))
      o.evaluations.push_back(detail::evaluate_corollary(u, v, everything_but_one, "G-minus-identity"));
    return o;
  });
  std::vector<std::tuple<std::size_t, std::size_t, CorollaryEvaluation>> stated;
  std::uint64_t evaluations = 0, corrected_failures = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ++r.instances_tested;
    if (!outcomes[i].admissible) {
      ++r.instances_skipped;
      continue;
    }
    for (auto& e : outcomes[i].evaluations) {
      ++evaluations;
      if (!e.corrected_holds) {
        ++corrected_failures;
        e.record.kind = "corrected-bound-violation";
        r.add_failure(e.record);
      }
      if (!e.stated_holds) stated.emplace_back(e.x_size, i, e);
    }
  }
  std::stable_sort(stated.begin(), stated.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (auto& [size, index, e] : stated) {
    e.record.kind = "stated-bound-counterexample";
    r.add_flagged(e.record);
  }
  r.set_counter("x_evaluations", evaluations);
  r.set_counter("stated_bound_counterexamples", std::uint64_t{stated.size()});
  r.set_counter("corrected_bound_failures", corrected_failures);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- Olson

enum class OlsonSide { Left, Right };

inline const char* to_string(OlsonSide side) { return side == OlsonSide::Left ? "left(HT=T)" : "right(TH=T)"; }

/// A subgroup H and a nonempty H-invariant T inside AB with
/// |T| >= |A| + |B| - |H|.
struct OlsonWitness {
  GroupSubset h;
  GroupSubset t;
  OlsonSide side;
};

/// Largest T inside `ab` with HT = T (Left) or TH = T (Right): the union of
/// the H-cosets fully contained in `ab`.
inline GroupSubset largest_invariant_subset(const GroupSubset& ab, const GroupSubset& h, OlsonSide side) {
  const GroupTable& g = ab.owner();
  GroupSubset t(g);
  const auto hs = h.elements();
  for (Element x : ab.elements()) {
    bool inside = true;
    for (Element y : hs) {
      const Element p = side == OlsonSide::Left ? g.multiply(y, x) : g.multiply(x, y);
      if (!ab.contains(p)) {
        inside = false;
        break;
      }
    }
    if (inside) t.insert(x);
  }
  return t;
}

/// Complete search: any witness T can be enlarged to the maximal invariant
/// subset of AB, so trying that one per (H, side) decides existence.
inline std::optional<OlsonWitness> find_olson_witness(const GroupSubset& a, const GroupSubset& b,
                                                      const std::vector<GroupSubset>& subgroups) {
  const auto ab = product_set(a, b);
  for (const auto& h : subgroups)
    for (OlsonSide side : {OlsonSide::Left, OlsonSide::Right}) {
      auto t = largest_invariant_subset(ab, h, side);
      if (!t.empty() && t.size() + h.size() >= a.size() + b.size()) return OlsonWitness{h, std::move(t), side};
    }
  return std::nullopt;
}

namespace detail {

struct OlsonOutcome {
  bool found = false;
  std::size_t h_size = 0;
  std::optional<Record> failure;
};

inline OlsonOutcome olson_instance(const GroupSubset& a, const GroupSubset& b,
                                   const std::vector<GroupSubset>& subgroups) {
  OlsonOutcome o;
  if (auto w = find_olson_witness(a, b, subgroups)) {
    o.found = true;
    o.h_size = w->h.size();
  } else {
    Record rec = pair_record("olson-no-witness", a, b);
    rec.add("|AB|", std::uint64_t{product_set(a, b).size()});
    o.failure = std::move(rec);
  }
  return o;
}

inline Record witness_record(const OlsonWitness& w, const GroupSubset& a, const GroupSubset& b) {
  Record rec = pair_record("olson-witness", a, b);
  rec.add("H", w.h.to_string()).add("T", w.t.to_string()).add("side", to_string(w.side));
  rec.add("|T|", std::uint64_t{w.t.size()}).add("|A|+|B|-|H|", std::to_string(static_cast<long long>(a.size() + b.size()) - static_cast<long long>(w.h.size())));
  return rec;
}

}  // namespace detail

inline CheckReport check_olson(const GroupTable& g, const GroupSubset& a, const GroupSubset& b,
                               const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  require_same_owner(g, a.owner());
  require_same_owner(g, b.owner());
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "A and B must be nonempty");
  const auto subgroups = enumerate_subgroups(g, cfg.subgroup_cap);
  CheckReport r{"olson", g.label()};
  r.instances_tested = 1;
  if (auto w = find_olson_witness(a, b, subgroups))
    r.witnesses.push_back(detail::witness_record(*w, a, b));
  else
    r.add_failure(*detail::olson_instance(a, b, subgroups).failure);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

/// Exhaustive for |G| <= cfg.pair_sweep_cap, cfg.samples seeded pairs above.
inline CheckReport sweep_olson(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  const auto subgroups = enumerate_subgroups(g, cfg.subgroup_cap);
  CheckReport r{"olson", g.label()};
  std::vector<detail::OlsonOutcome> outcomes;
  if (g.order() <= cfg.pair_sweep_cap) {
    detail::require_mask_sized(g);
    const std::uint64_t side = detail::pow2(g.order()) - 1;
    outcomes = parallel_map(side * side, cfg.jobs, [&](std::size_t i) {
      const auto [a, b] = detail::pair_from_index(g, i);
      return detail::olson_instance(a, b, subgroups);
    });
    r.set_counter("mode", "exhaustive");
  } else {
    Rng rng(derive_seed(cfg.seed, "olson", g.label()));
    std::vector<std::pair<GroupSubset, GroupSubset>> sampled;
    for (std::size_t t = 0; t < cfg.samples; ++t) {
      auto a = detail::random_subset(g, rng, rng.uniform(1, g.order()), false);
      auto b = detail::random_subset(g, rng, rng.uniform(1, g.order()), false);
      sampled.emplace_back(std::move(a), std::move(b));
    }
    outcomes = parallel_map(sampled.size(), cfg.jobs, [&](std::size_t i) {
      return detail::olson_instance(sampled[i].first, sampled[i].second, subgroups);
    });
    r.seed = cfg.seed;
    r.set_counter("mode", "sampled");
  }
  std::uint64_t trivial_h = 0, nontrivial_h = 0;
  for (auto& o : outcomes) {
    ++r.instances_tested;
    if (o.failure) r.add_failure(std::move(*o.failure));
    if (o.found) (o.h_size == 1 ? trivial_h : nontrivial_h)++;
  }
  r.set_counter("subgroups", std::uint64_t{subgroups.size()});
  r.set_counter("witness_trivial_h", trivial_h);
  r.set_counter("witness_nontrivial_h", nontrivial_h);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- automatching

/// Every nonempty identity-free A has a matching A -> A; every A containing 1
/// with |A| <= cfg.only_if_max_size has none (checked by the bijection oracle).
inline CheckReport check_automatching(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  enforce_order_cap(g.order(), cfg.automatching_cap, "automatching sweep on " + g.label());
  CheckReport r{"automatching", g.label()};
  const std::size_t n = g.order();
  // identity-free subsets: masks over elements 1..n-1
  const std::uint64_t free_count = detail::pow2(n - 1) - 1;
  auto free_outcomes = parallel_map(free_count, cfg.jobs, [&](std::size_t i) -> std::optional<Record> {
    const auto a = GroupSubset::from_mask(g, (static_cast<std::uint64_t>(i) + 1) << 1);
    const auto outcome = find_matching(a, a);
    if (const auto* v = std::get_if<HallViolator<GroupTable>>(&outcome)) {
      Record rec{"automatching-missing", {}};
      rec.add("A", a.to_string()).add("violator_S", v->s.to_string()).add("neighborhood", v->neighborhood.to_string());
      return rec;
    }
    const auto check = verify_matching(a, a, std::get<Matching<GroupTable>>(outcome));
    if (!check) {
      Record rec{"invalid-matching", {}};
      rec.add("A", a.to_string()).add("reason", check.reason);
      return rec;
    }
    return std::nullopt;
  });
  // identity-containing subsets with |A| <= only_if_max_size
  std::vector<GroupSubset> with_identity;
  const auto others = detail::all_elements(g, true);
  for (std::size_t k = 0; k + 1 <= std::min(cfg.only_if_max_size, n); ++k)
    for (const auto& rest : detail::combinations(others, k)) {
      GroupSubset a = GroupSubset::from(g, rest);
      a.insert(GroupTable::identity());
      with_identity.push_back(std::move(a));
    }
  auto only_if_outcomes = parallel_map(with_identity.size(), cfg.jobs, [&](std::size_t i) -> std::optional<Record> {
    const auto& a = with_identity[i];
    if (auto m = brute_force_matching(a, a)) {
      Record rec{"identity-set-matched", {}};
      rec.add("A", a.to_string());
      return rec;
    }
    return std::nullopt;
  });
  for (auto& o : free_outcomes) {
    ++r.instances_tested;
    if (o) r.add_failure(std::move(*o));
  }
  for (auto& o : only_if_outcomes) {
    ++r.instances_tested;
    if (o) r.add_failure(std::move(*o));
  }
  r.set_counter("identity_free_sets", free_count);
  r.set_counter("identity_containing_sets", std::uint64_t{with_identity.size()});
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- matching property

namespace detail {

struct PairOutcome {
  bool matched = true;
  std::optional<HallViolator<GroupTable>> violator;
};

inline PairOutcome pair_outcome(const GroupSubset& a, const GroupSubset& b) {
  auto outcome = find_matching(a, b);
  if (auto* v = std::get_if<HallViolator<GroupTable>>(&outcome)) return {false, std::move(*v)};
  return {};
}

}  // namespace detail

/// Sweeps pairs (A, B) with |A| = |B| >= 1 and 1 not in B (exhaustive up to
/// cfg.property_exhaustive_cap, sampled above) and compares "every pair
/// matched" with the classification prediction. When the property fails, the
/// smallest failing pair (by |A|, then lexicographic) is attached.
inline CheckReport check_matching_property(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  enforce_order_cap(g.order(), cfg.sampled_order_cap, "matching-property sweep on " + g.label());
  CheckReport r{"matching-property", g.label()};
  const std::size_t n = g.order();
  const auto everything = detail::all_elements(g, false);
  const auto nonidentity = detail::all_elements(g, true);
  std::vector<std::pair<GroupSubset, GroupSubset>> pairs;
  if (n <= cfg.property_exhaustive_cap) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto as = detail::combinations(everything, k);
      const auto bs = detail::combinations(nonidentity, k);
      for (const auto& a : as)
        for (const auto& b : bs) pairs.emplace_back(GroupSubset::from(g, a), GroupSubset::from(g, b));
    }
    r.set_counter("mode", "exhaustive");
  } else {
    Rng rng(derive_seed(cfg.seed, "matching-property", g.label()));
    for (std::size_t t = 0; t < cfg.samples; ++t) {
      const std::size_t k = rng.uniform(1, n - 1);
      auto a = detail::random_subset(g, rng, k, false);
      auto b = detail::random_subset(g, rng, k, true);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    r.seed = cfg.seed;
    r.set_counter("mode", "sampled");
  }
  auto outcomes = parallel_map(pairs.size(), cfg.jobs,
                               [&](std::size_t i) { return detail::pair_outcome(pairs[i].first, pairs[i].second); });

  std::optional<std::size_t> smallest;
  std::uint64_t unmatched = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ++r.instances_tested;
    if (outcomes[i].matched) continue;
    ++unmatched;
    if (!smallest) {
      smallest = i;
      continue;
    }
    const auto& [a0, b0] = pairs[*smallest];
    const auto& [a1, b1] = pairs[i];
    if (std::make_tuple(a1.size(), a1.elements(), b1.elements()) <
        std::make_tuple(a0.size(), a0.elements(), b0.elements()))
      smallest = i;
  }
  const bool observed = unmatched == 0;
  const bool predicted = classify(g).predicted_matching_property;
  r.set_counter("pairs_without_matching", unmatched);
  r.set_counter("observed_property", observed ? "holds" : "fails");
  r.set_counter("predicted_property", predicted ? "holds" : "fails");
  if (smallest) {
    const auto& [a, b] = pairs[*smallest];
    const auto& v = *outcomes[*smallest].violator;
    Record w = detail::pair_record("counterexample", a, b);
    w.add("violator_S", v.s.to_string()).add("neighborhood", v.neighborhood.to_string());
    w.add("deficiency", std::uint64_t{v.deficiency});
    r.witnesses.push_back(std::move(w));
  }
  if (observed != predicted && r.instances_tested > 0) {
    Record f{"prediction-mismatch", {}};
    f.add("observed", observed ? "holds" : "fails").add("predicted", predicted ? "holds" : "fails");
    r.add_failure(std::move(f));
  }
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- counterexample

/// A = <a> for some a of order >= 2 that does not generate G, and
/// B = A u {g} \ {1} for some g outside A. No matching A -> B exists, since
/// x0 = phi^{-1}(a) gives x0 * a in A.
struct CounterexamplePair {
  GroupSubset a;
  GroupSubset b;
  Element generator;
  Element outsider;
  HallViolator<GroupTable> violator;
  std::optional<bool> oracle_rejects;  // set when |A| is within the brute-force cap
};

/// Picks the least-index a with order >= 2 and <a> != G, and the least-index
/// g outside <a>. Throws NotApplicable for the trivial group and prime orders.
inline CounterexamplePair construct_counterexample(const GroupTable& g) {
  if (g.order() < 2 || is_prime(g.order()))
    throw Error(ErrorKind::NotApplicable, g.label() + " has order " + std::to_string(g.order()) +
                                              "; every non-identity element generates it");
  for (Element a = 1; a < g.order(); ++a) {
    auto sub = cyclic_subgroup(g, a);
    if (sub.size() == g.order()) continue;
    Element outsider = 0;
    while (sub.contains(outsider)) ++outsider;
    GroupSubset b = sub;
    b.erase(GroupTable::identity());
    b.insert(outsider);
    auto outcome = find_matching(sub, b);
    auto* v = std::get_if<HallViolator<GroupTable>>(&outcome);
    if (!v) throw std::logic_error("constructed pair admits a matching on " + g.label());
    CounterexamplePair pair{sub, b, a, outsider, *v, std::nullopt};
    if (sub.size() <= kBruteForceCap) pair.oracle_rejects = !brute_force_matching(sub, b).has_value();
    return pair;
  }
  throw std::logic_error("no proper cyclic subgroup found in composite-order group " + g.label());
}

inline Record counterexample_record(const GroupTable& g, const CounterexamplePair& p) {
  Record w = detail::pair_record("counterexample", p.a, p.b);
  w.add("generator", g.format(p.generator)).add("order", std::uint64_t{p.a.size()}).add("outsider", g.format(p.outsider));
  w.add("violator_S", p.violator.s.to_string()).add("neighborhood", p.violator.neighborhood.to_string());
  w.add("oracle", p.oracle_rejects ? (*p.oracle_rejects ? "rejects" : "ACCEPTS") : "not-run");
  return w;
}

/// Report form of construct_counterexample: fails if the engine or the
/// bijection oracle accepts the constructed pair.
inline CheckReport check_counterexample(const GroupTable& g) {
  detail::Stopwatch clock;
  CheckReport r{"counterexample", g.label()};
  r.instances_tested = 1;
  try {
    const auto p = construct_counterexample(g);
    auto rec = counterexample_record(g, p);
    if (p.oracle_rejects && !*p.oracle_rejects) {
      rec.kind = "oracle-disagreement";
      r.add_failure(rec);
    } else {
      r.witnesses.push_back(std::move(rec));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotApplicable) throw;
    r.instances_skipped = 1;
  }
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- Hall cross-validation

inline constexpr std::size_t kHallCrossCheckCap = 5;

/// Four independent answers to "does a matching A -> B exist".
struct HallAgreement {
  bool engine = false;
  bool brute_force = false;
  bool union_form = false;         // |U_{s in S} E_s| >= |S| for all nonempty S
  bool intersection_form = false;  // |V_S| <= |A| - |S| for all nonempty S
  bool agree() const noexcept {
    return engine == brute_force && brute_force == union_form && union_form == intersection_form;
  }
};

inline HallAgreement cross_validate_hall(const GroupSubset& a, const GroupSubset& b) {
  require_same_owner(a.owner(), b.owner());
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "|A| != |B|");
  if (a.size() > kHallCrossCheckCap)
    throw Error(ErrorKind::SizeLimit, "Hall cross-validation limited to |A| <= " + std::to_string(kHallCrossCheckCap));
  if (contains_identity(b)) throw Error(ErrorKind::IdentityInB, "the identity lies in B");
  const GroupTable& g = a.owner();
  HallAgreement h;
  h.engine = has_matching(a, b);
  h.brute_force = brute_force_matching(a, b).has_value();
  const auto left = a.elements();
  std::vector<GroupSubset> candidates;
  for (Element x : left) candidates.push_back(candidate_set(a, b, x));
  h.union_form = true;
  h.intersection_form = true;
  for (std::uint64_t mask = 1; mask < detail::pow2(left.size()); ++mask) {
    GroupSubset s(g), neighborhood(g);
    for (std::size_t i = 0; i < left.size(); ++i)
      if ((mask >> i) & 1U) {
        s.insert(left[i]);
        neighborhood |= candidates[i];
      }
    if (neighborhood.size() < s.size()) h.union_form = false;
    if (stable_set(a, b, s).size() + s.size() > a.size()) h.intersection_form = false;
  }
  return h;
}

/// cfg.hall_samples seeded pairs with |A| = |B| <= 5 and 1 not in B.
inline CheckReport sweep_hall(const GroupTable& g, const LabConfig& cfg = {}) {
  detail::Stopwatch clock;
  CheckReport r{"hall", g.label()};
  r.seed = cfg.seed;
  if (g.order() < 2) {
    r.finalize();
    return r;
  }
  Rng rng(derive_seed(cfg.seed, "hall", g.label()));
  std::vector<std::pair<GroupSubset, GroupSubset>> pairs;
  const std::size_t max_k = std::min(kHallCrossCheckCap, g.order() - 1);
  for (std::size_t t = 0; t < cfg.hall_samples; ++t) {
    const std::size_t k = rng.uniform(1, max_k);
    auto a = detail::random_subset(g, rng, k, false);
    auto b = detail::random_subset(g, rng, k, true);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  auto outcomes = parallel_map(pairs.size(), cfg.jobs,
                               [&](std::size_t i) { return cross_validate_hall(pairs[i].first, pairs[i].second); });
  std::uint64_t matchable = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ++r.instances_tested;
    const auto& h = outcomes[i];
    matchable += h.engine;
    if (!h.agree()) {
      Record f = detail::pair_record("hall-disagreement", pairs[i].first, pairs[i].second);
      f.add("engine", h.engine).add("brute_force", h.brute_force).add("union_form", h.union_form);
      f.add("intersection_form", h.intersection_form);
      r.add_failure(std::move(f));
    }
  }
  r.set_counter("matchable", matchable);
  r.set_counter("unmatchable", r.instances_tested - matchable);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------- lattices

struct LatticeCheckParams {
  std::size_t dimension = 1;
  std::size_t trials = 1000;
  std::size_t max_size = 8;
  std::int64_t coordinate_bound = 5;
  std::uint64_t seed = 1;
  std::size_t oracle_max_size = 6;
};

inline constexpr std::size_t kLatticeMaxSize = 10;

/// Random pairs A, B in [-bound, bound]^d with |A| = |B| <= max_size. Draws
/// whose B contains 0 are rejected and redrawn; they are not counted. Every
/// instance must be matched, and instances up to oracle_max_size are also
/// confirmed by the bijection oracle.
inline CheckReport check_lattice_matching(const LatticeCheckParams& p, std::size_t jobs = 1) {
  detail::Stopwatch clock;
  if (p.max_size < 1 || p.max_size > kLatticeMaxSize)
    throw Error(ErrorKind::InvalidInput, "max_size must lie in [1, " + std::to_string(kLatticeMaxSize) + "]");
  if (p.coordinate_bound < 0) throw Error(ErrorKind::InvalidInput, "coordinate bound must be nonnegative");
  if (p.oracle_max_size > kBruteForceCap) throw Error(ErrorKind::InvalidInput, "oracle size above brute-force cap");
  const LatticeGroup z(p.dimension);
  double box = 1;
  for (std::size_t i = 0; i < p.dimension; ++i) box *= static_cast<double>(2 * p.coordinate_bound + 1);
  if (box - 1 < static_cast<double>(p.max_size))
    throw Error(ErrorKind::InvalidInput, "coordinate box too small for max_size nonzero points");

  CheckReport r{"lattice-matching", z.label()};
  r.seed = p.seed;
  Rng rng(derive_seed(p.seed, "lattice", z.label()));
  auto draw_point = [&] {
    LatticePoint x(p.dimension);
    for (auto& c : x) c = rng.uniform_signed(-p.coordinate_bound, p.coordinate_bound);
    return x;
  };
  auto draw_set = [&](std::size_t k) {
    LatticeSubset s(z);
    while (s.size() < k) s.insert(draw_point());
    return s;
  };
  std::vector<std::pair<LatticeSubset, LatticeSubset>> instances;
  std::uint64_t rejected = 0;
  while (instances.size() < p.trials) {
    const std::size_t k = rng.uniform(1, p.max_size);
    auto a = draw_set(k);
    auto b = draw_set(k);
    if (contains_identity(b)) {
      ++rejected;
      continue;
    }
    instances.emplace_back(std::move(a), std::move(b));
  }
  struct Outcome {
    bool oracle_run = false;
    std::optional<Record> failure;
  };
  auto outcomes = parallel_map(instances.size(), jobs, [&](std::size_t i) {
    const auto& [a, b] = instances[i];
    Outcome o;
    const auto result = find_matching(a, b);
    const auto* m = std::get_if<Matching<LatticeGroup>>(&result);
    if (!m) {
      const auto& v = std::get<HallViolator<LatticeGroup>>(result);
      Record f = detail::pair_record("lattice-unmatched", a, b);
      f.add("violator_S", v.s.to_string());
      o.failure = std::move(f);
      return o;
    }
    if (auto check = verify_matching(a, b, *m); !check) {
      Record f = detail::pair_record("invalid-matching", a, b);
      f.add("reason", check.reason);
      o.failure = std::move(f);
      return o;
    }
    if (a.size() <= p.oracle_max_size) {
      o.oracle_run = true;
      if (!brute_force_matching(a, b)) o.failure = detail::pair_record("oracle-disagreement", a, b);
    }
    return o;
  });
  std::uint64_t confirmed = 0, eligible = 0;
  for (const auto& [a, b] : instances) eligible += a.size() <= p.oracle_max_size;
  for (auto& o : outcomes) {
    ++r.instances_tested;
    if (o.oracle_run && !o.failure) ++confirmed;
    if (o.failure) r.add_failure(std::move(*o.failure));
  }
  r.set_counter("oracle_eligible", eligible);
  r.set_counter("oracle_confirmed", confirmed);
  r.set_counter("rejected_draws", rejected);
  r.finalize();
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace matchgroup
