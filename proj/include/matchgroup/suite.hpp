#pragma once

#include <ostream>
#include <vector>

#include "matchgroup/catalog.hpp"
#include "matchgroup/theorem_lab.hpp"

namespace matchgroup {

struct SuiteOptions {
  LabConfig lab;
  std::size_t catalog_order = 10;      // automatching, matching property, Hall agreement
  std::size_t small_order = 6;         // exhaustive Kemperman / Olson / corollary
  std::size_t olson_sampled_order = 12;
  std::size_t lattice_trials = 1000;
  std::size_t lattice_max_size = 8;
  std::int64_t lattice_bound = 5;
};

/// Every check over the catalog, in a fixed order.
inline std::vector<CheckReport> run_suite(const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  const auto groups = catalog(std::max(opt.olson_sampled_order, opt.catalog_order));
  LabConfig olson_cfg = opt.lab;
  olson_cfg.pair_sweep_cap = opt.small_order;
  for (const auto& g : groups) {
    if (g.order() < 2) continue;
    if (g.order() <= opt.catalog_order) {
      out.push_back(check_automatching(g, opt.lab));
      out.push_back(check_matching_property(g, opt.lab));
      out.push_back(sweep_hall(g, opt.lab));
    }
    if (!is_prime(g.order())) out.push_back(check_counterexample(g));
    if (g.order() <= opt.small_order) {
      out.push_back(sweep_kemperman(g, opt.lab));
      out.push_back(sweep_corollary(g, opt.lab));
    }
    if (g.order() <= opt.olson_sampled_order) out.push_back(sweep_olson(g, olson_cfg));
  }
  for (std::size_t d = 1; d <= 3; ++d) {
    LatticeCheckParams p;
    p.dimension = d;
    p.trials = opt.lattice_trials;
    p.max_size = opt.lattice_max_size;
    p.coordinate_bound = opt.lattice_bound;
    p.seed = opt.lab.seed;
    out.push_back(check_lattice_matching(p, opt.lab.jobs));
  }
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return false;
  return true;
}

}  // namespace matchgroup
