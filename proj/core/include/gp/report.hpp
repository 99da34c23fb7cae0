#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gp {

// Schema tag embedded in every JSON report. Bump when the layout changes.
std::string report_schema_version();

// One verified inequality or identity: `value` is the measured quantity,
// `bound` what it was compared against, `slack` the signed margin (>= 0
// passes). The direction of the comparison is baked into the slack so
// consumers never need to know it.
struct CheckRecord {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
};

// A per-step numeric table, e.g. one row per exhaustion radius.
struct SeriesRecord {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string command;
  // label -> content digest of each input file (fnv1a64 hex)
  std::vector<std::pair<std::string, std::string>> inputs;
  // free-form key -> value annotations (seeds, classifications, counts)
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<CheckRecord> checks;
  std::vector<SeriesRecord> series;
  // the only field allowed to differ between identical runs
  std::int64_t wall_ms = 0;

  bool pass() const;
  void note(std::string key, std::string value);
  void check(std::string name, double value, double bound, double slack);
  const CheckRecord* find(const std::string& name) const;
  // appends another report's notes, checks and series under a name prefix
  void absorb(const std::string& prefix, const ExperimentReport& sub);
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
// digest of a file's raw bytes; throws input_error if unreadable
std::string digest_file(const std::string& path);

// Deterministic serialization: same report (wall_ms aside) -> same bytes.
std::string report_json(const ExperimentReport& report);
// Series tables as CSV, one block per series, '#' comment line between blocks.
std::string report_csv(const ExperimentReport& report);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace gp
