#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "matchgroup/io.hpp"
#include "matchgroup/matching.hpp"
#include "matchgroup/suite.hpp"
#include "matchgroup/theorem_lab.hpp"

namespace matchgroup::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // certified non-existence / failed check
inline constexpr int kInputError = 2;
inline constexpr int kNotApplicable = 3;

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> checks{"kemperman", "corollary", "olson",
                                               "automatching", "matching-property", "hall"};
  return checks;
}

/// A group argument is a path to a Cayley-table file when one exists there,
/// otherwise a family string such as C4, D3, C2xC4 or Z^2.
inline AnyGroup resolve_group(const std::string& spec, std::size_t cap = kDefaultOrderCap) {
  constexpr std::string_view kFilePrefix = "file:";
  if (spec.rfind(kFilePrefix, 0) == 0) return load_cayley_table(spec.substr(kFilePrefix.size()));
  if (std::filesystem::is_regular_file(spec)) return load_cayley_table(spec);
  return parse_group_spec(spec, cap);
}

namespace detail {

inline void print_error(std::ostream& err, const ReportFormat format, const Error& e) {
  if (format == ReportFormat::Machine) {
    nlohmann::ordered_json j;
    j["record"] = "error";
    j["error"] = to_string(e.kind());
    j["message"] = e.what();
    err << j.dump() << '\n';
  } else {
    err << "error: " << e.what() << '\n';
  }
}

template <class Group>
int run_match(const Group& g, const std::string& a_lit, const std::string& b_lit, ReportFormat format,
              std::ostream& out) {
  const auto a = parse_subset(g, a_lit);
  const auto b = parse_subset(g, b_lit);
  const auto outcome = find_matching(a, b);
  nlohmann::ordered_json j;
  j["record"] = "match";
  j["group"] = g.label();
  j["A"] = a.to_string();
  j["B"] = b.to_string();
  if (const auto* m = std::get_if<Matching<Group>>(&outcome)) {
    if (format == ReportFormat::Machine) {
      j["result"] = "matching";
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [x, y] : m->pairs) pairs.push_back({g.format(x), g.format(y)});
      j["pairs"] = pairs;
      out << j.dump() << '\n';
    } else {
      out << "matching from " << a.to_string() << " to " << b.to_string() << " in " << g.label() << ":\n";
      for (const auto& [x, y] : m->pairs)
        out << "  " << g.format(x) << " -> " << g.format(y) << "   (product " << g.format(g.multiply(x, y))
            << ")\n";
    }
    return kOk;
  }
  const auto& v = std::get<HallViolator<Group>>(outcome);
  if (format == ReportFormat::Machine) {
    j["result"] = "hall-violator";
    j["S"] = v.s.to_string();
    j["neighborhood"] = v.neighborhood.to_string();
    j["deficiency"] = v.deficiency;
    out << j.dump() << '\n';
  } else {
    out << "no matching from " << a.to_string() << " to " << b.to_string() << " in " << g.label() << "\n"
        << "  Hall violator S = " << v.s.to_string() << ", candidates N(S) = " << v.neighborhood.to_string()
        << ", deficiency " << v.deficiency << '\n';
  }
  return kNegative;
}

inline void print_counterexample(const GroupTable& g, const CounterexamplePair& p, ReportFormat format,
                                 std::ostream& out) {
  const Record rec = counterexample_record(g, p);
  if (format == ReportFormat::Machine) {
    nlohmann::ordered_json j;
    j["record"] = "counterexample";
    j["group"] = g.label();
    for (const auto& f : rec.fields) j[f.key] = f.value;
    out << j.dump() << '\n';
    return;
  }
  out << "counterexample in " << g.label() << ": generator " << g.format(p.generator) << " of order "
      << p.a.size() << ", outsider " << g.format(p.outsider) << '\n'
      << "  A = " << p.a.to_string() << '\n'
      << "  B = " << p.b.to_string() << '\n'
      << "  engine: Hall violator S = " << p.violator.s.to_string() << ", N(S) = "
      << p.violator.neighborhood.to_string() << '\n'
      << "  brute-force oracle: "
      << (p.oracle_rejects ? (*p.oracle_rejects ? "no bijection works" : "FOUND A MATCHING") : "not run (|A| > 7)")
      << '\n';
}

}  // namespace detail

/// Exit 0 with a matching, 1 with a Hall violator, 2 on input errors
/// (including SizeMismatch and IdentityInB).
inline int cmd_match(const std::string& group, const std::string& a_lit, const std::string& b_lit,
                     ReportFormat format, std::ostream& out, std::ostream& err) {
  try {
    const AnyGroup g = resolve_group(group);
    return std::visit([&](const auto& grp) { return detail::run_match(grp, a_lit, b_lit, format, out); }, g);
  } catch (const Error& e) {
    detail::print_error(err, format, e);
    return kInputError;
  }
}

/// Runs the selected checks; exit 0 iff none fails. Printed-corollary
/// counterexamples are flagged and do not fail the run.
inline int cmd_verify(const std::string& group, std::vector<std::string> checks, const LabConfig& cfg,
                      ReportFormat format, std::ostream& out, std::ostream& err) {
  if (checks.empty() || std::find(checks.begin(), checks.end(), "all") != checks.end()) checks = all_checks();
  std::string current;
  try {
    const AnyGroup any = resolve_group(group);
    const auto* g = std::get_if<GroupTable>(&any);
    if (!g) throw Error(ErrorKind::InvalidInput, "verify needs a finite group; use 'lattice' for Z^d");
    std::vector<CheckReport> reports;
    for (const auto& check : checks) {
      current = check;
      if (check == "kemperman")
        reports.push_back(sweep_kemperman(*g, cfg));
      else if (check == "corollary")
        reports.push_back(sweep_corollary(*g, cfg));
      else if (check == "olson")
        reports.push_back(sweep_olson(*g, cfg));
      else if (check == "automatching")
        reports.push_back(check_automatching(*g, cfg));
      else if (check == "matching-property")
        reports.push_back(check_matching_property(*g, cfg));
      else if (check == "hall")
        reports.push_back(sweep_hall(*g, cfg));
      else
        throw Error(ErrorKind::InvalidInput, "unknown check '" + check + "'");
    }
    for (const auto& r : reports) write_report(out, r, format);
    return all_passed(reports) ? kOk : kNegative;
  } catch (const Error& e) {
    if (!current.empty() && e.kind() == ErrorKind::SizeLimit)
      detail::print_error(err, format, Error(e.kind(), "check '" + current + "': " + e.what()));
    else
      detail::print_error(err, format, e);
    return kInputError;
  }
}

/// Exit 0 with a machine-confirmed pair, 3 when the group has prime or
/// trivial order.
inline int cmd_counterexample(const std::string& group, ReportFormat format, std::ostream& out,
                              std::ostream& err) {
  try {
    const AnyGroup any = resolve_group(group);
    const auto* g = std::get_if<GroupTable>(&any);
    if (!g) throw Error(ErrorKind::NotApplicable, "Z^d is torsion-free and has the matching property");
    detail::print_counterexample(*g, construct_counterexample(*g), format, out);
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, format, e);
    return e.kind() == ErrorKind::NotApplicable ? kNotApplicable : kInputError;
  }
}

/// Exit 0 on pass, 1 on failure, 2 when no instances ran or input is invalid.
inline int cmd_lattice(const LatticeCheckParams& params, std::size_t jobs, ReportFormat format, std::ostream& out,
                       std::ostream& err) {
  try {
    const auto report = check_lattice_matching(params, jobs);
    write_report(out, report, format);
    if (report.status == Status::Skipped) return kInputError;
    return report.passed() ? kOk : kNegative;
  } catch (const Error& e) {
    detail::print_error(err, format, e);
    return kInputError;
  }
}

inline int cmd_suite(const SuiteOptions& opt, ReportFormat format, std::ostream& out, std::ostream& err) {
  try {
    const auto reports = run_suite(opt);
    for (const auto& r : reports) write_report(out, r, format);
    return all_passed(reports) ? kOk : kNegative;
  } catch (const Error& e) {
    detail::print_error(err, format, e);
    return kInputError;
  }
}

/// Writes a finite group in the Cayley-table file format.
inline int cmd_table(const std::string& group, std::ostream& out, std::ostream& err) {
  try {
    const AnyGroup any = resolve_group(group);
    const auto* g = std::get_if<GroupTable>(&any);
    if (!g) throw Error(ErrorKind::InvalidInput, "Z^d has no finite Cayley table");
    write_cayley_table(out, *g);
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, ReportFormat::Text, e);
    return kInputError;
  }
}

}  // namespace matchgroup::cli
