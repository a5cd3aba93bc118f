#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace matchgroup {

/// Records kept per list in a report; totals are still counted past this.
inline constexpr std::size_t kMaxRecords = 25;

struct Field {
  std::string key;
  std::string value;
  friend bool operator==(const Field&, const Field&) = default;
};

/// One failure, witness or flagged finding: a kind tag plus ordered fields.
struct Record {
  std::string kind;
  std::vector<Field> fields;

  Record& add(std::string key, std::string value) {
    fields.push_back({std::move(key), std::move(value)});
    return *this;
  }
  Record& add(std::string key, std::uint64_t value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

  const std::string* find(const std::string& key) const {
    for (const auto& f : fields)
      if (f.key == key) return &f.value;
    return nullptr;
  }
  friend bool operator==(const Record&, const Record&) = default;
};

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

/// Outcome of one theorem check.
///
/// `failures` are violations of an asserted invariant. `flagged` collects
/// findings that are documented but not asserted (the printed corollary bound).
/// `witnesses` carry constructive evidence such as counterexample pairs.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string name, std::string group_label)
      : check_name(std::move(name)), group(std::move(group_label)) {}

  std::string check_name;
  std::string group;
  std::uint64_t instances_tested = 0;
  std::uint64_t instances_skipped = 0;
  std::vector<Record> failures;
  std::uint64_t failure_count = 0;
  std::vector<Record> witnesses;
  std::vector<Record> flagged;
  std::uint64_t flagged_count = 0;
  std::vector<Field> counters;
  std::optional<std::uint64_t> seed;
  Status status = Status::Skipped;
  std::chrono::nanoseconds elapsed{0};

  void add_failure(Record r) {
    ++failure_count;
    if (failures.size() < kMaxRecords) failures.push_back(std::move(r));
  }

  void add_flagged(Record r) {
    ++flagged_count;
    if (flagged.size() < kMaxRecords) flagged.push_back(std::move(r));
  }

  void set_counter(const std::string& key, std::string value) {
    for (auto& f : counters)
      if (f.key == key) {
        f.value = std::move(value);
        return;
      }
    counters.push_back({key, std::move(value)});
  }
  void set_counter(const std::string& key, std::uint64_t value) { set_counter(key, std::to_string(value)); }

  const std::string* counter(const std::string& key) const {
    for (const auto& f : counters)
      if (f.key == key) return &f.value;
    return nullptr;
  }

  /// pass iff no failures and at least one instance met the hypotheses.
  void finalize() {
    if (failure_count > 0)
      status = Status::Fail;
    else if (instances_tested > instances_skipped)
      status = Status::Pass;
    else
      status = Status::Skipped;
  }

  bool passed() const noexcept { return status == Status::Pass; }
};

enum class ReportFormat { Text, Machine };

namespace detail {

inline nlohmann::ordered_json record_json(const char* record, const CheckReport& r, const Record& rec) {
  nlohmann::ordered_json j;
  j["record"] = record;
  j["check"] = r.check_name;
  j["group"] = r.group;
  j["kind"] = rec.kind;
  for (const auto& f : rec.fields) j[f.key] = f.value;
  return j;
}

}  // namespace detail

/// JSON Lines: one line per failure, witness and flagged record, then one
/// summary line. Timing is omitted so equal seeds give identical bytes.
inline void write_machine(std::ostream& os, const CheckReport& r) {
  for (const auto& rec : r.failures) os << detail::record_json("failure", r, rec).dump() << '\n';
  for (const auto& rec : r.witnesses) os << detail::record_json("witness", r, rec).dump() << '\n';
  for (const auto& rec : r.flagged) os << detail::record_json("flagged", r, rec).dump() << '\n';
  nlohmann::ordered_json s;
  s["record"] = "summary";
  s["check"] = r.check_name;
  s["group"] = r.group;
  s["status"] = to_string(r.status);
  s["instances_tested"] = r.instances_tested;
  s["instances_skipped"] = r.instances_skipped;
  s["failures"] = r.failure_count;
  s["flagged"] = r.flagged_count;
  if (r.seed) s["seed"] = *r.seed;
  else s["seed"] = nullptr;
  nlohmann::ordered_json counters = nlohmann::ordered_json::object();
  for (const auto& f : r.counters) {
    const bool numeric = !f.value.empty() && f.value.find_first_not_of("0123456789") == std::string::npos;
    if (numeric)
      counters[f.key] = std::stoull(f.value);
    else
      counters[f.key] = f.value;
  }
  s["counters"] = counters;
  os << s.dump() << '\n';
}

inline void write_record_text(std::ostream& os, const char* label, const Record& rec) {
  os << "  " << label << " " << rec.kind << ":";
  for (const auto& f : rec.fields) os << ' ' << f.key << '=' << f.value;
  os << '\n';
}

inline void write_text(std::ostream& os, const CheckReport& r, bool with_timing = true) {
  os << '[' << to_string(r.status) << "] " << r.check_name << " on " << r.group << ": " << r.instances_tested
     << " instances (" << r.instances_skipped << " skipped), " << r.failure_count << " failures";
  if (r.flagged_count) os << ", " << r.flagged_count << " flagged";
  if (r.seed) os << ", seed " << *r.seed;
  if (with_timing) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << std::chrono::duration<double, std::milli>(r.elapsed).count();
    os << ", " << ms.str() << " ms";
  }
  os << '\n';
  if (!r.counters.empty()) {
    os << "  counters:";
    for (const auto& f : r.counters) os << ' ' << f.key << '=' << f.value;
    os << '\n';
  }
  for (const auto& rec : r.failures) write_record_text(os, "FAILURE", rec);
  if (r.failure_count > r.failures.size())
    os << "  ... " << (r.failure_count - r.failures.size()) << " more failures\n";
  for (const auto& rec : r.witnesses) write_record_text(os, "witness", rec);
  for (const auto& rec : r.flagged) write_record_text(os, "flagged", rec);
  if (r.flagged_count > r.flagged.size())
    os << "  ... " << (r.flagged_count - r.flagged.size()) << " more flagged\n";
}

inline void write_report(std::ostream& os, const CheckReport& r, ReportFormat format) {
  if (format == ReportFormat::Machine)
    write_machine(os, r);
  else
    write_text(os, r);
}

}  // namespace matchgroup
