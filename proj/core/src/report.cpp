#include "gp/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gp/errors.hpp"
#include "gp/io.hpp"
#include "nlohmann/json.hpp"

namespace gp {

std::string report_schema_version() { return "gp-report/1"; }

bool ExperimentReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

void ExperimentReport::note(std::string key, std::string value) {
  notes.emplace_back(std::move(key), std::move(value));
}

void ExperimentReport::check(std::string name, double value, double bound,
                             double slack) {
  CheckRecord c;
  c.name = std::move(name);
  c.value = value;
  c.bound = bound;
  c.slack = slack;
  c.pass = slack >= 0.0;
  checks.push_back(std::move(c));
}

const CheckRecord* ExperimentReport::find(const std::string& name) const {
  for (const CheckRecord& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void ExperimentReport::absorb(const std::string& prefix,
                              const ExperimentReport& sub) {
  for (const auto& [key, value] : sub.notes) notes.emplace_back(prefix + "." + key, value);
  for (CheckRecord c : sub.checks) {
    c.name = prefix + "." + c.name;
    checks.push_back(std::move(c));
  }
  for (SeriesRecord s : sub.series) {
    s.name = prefix + "." + s.name;
    series.push_back(std::move(s));
  }
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string digest_file(const std::string& path) {
  return fnv1a64_hex(load_text(path));
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw input_error("write to " + path + " failed");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pairs_to_object(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : pairs) obj[key] = value;
  return obj;
}

}  // namespace

std::string report_json(const ExperimentReport& report) {
  ordered_json j;
  j["schema"] = report_schema_version();
  j["command"] = report.command;
  j["inputs"] = pairs_to_object(report.inputs);
  j["notes"] = pairs_to_object(report.notes);
  j["checks"] = ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["bound"] = c.bound;
    jc["slack"] = c.slack;
    jc["pass"] = c.pass;
    j["checks"].push_back(std::move(jc));
  }
  j["series"] = ordered_json::array();
  for (const SeriesRecord& s : report.series) {
    ordered_json js;
    js["name"] = s.name;
    js["columns"] = s.columns;
    js["rows"] = s.rows;
    j["series"].push_back(std::move(js));
  }
  j["pass"] = report.pass();
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

std::string report_csv(const ExperimentReport& report) {
  std::string out;
  bool first = true;
  for (const SeriesRecord& s : report.series) {
    if (!first) out += "\n";
    first = false;
    out += "# series: " + s.name + "\n";
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
      if (i) out += ",";
      out += s.columns[i];
    }
    out += "\n";
    for (const auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += format_double(row[i]);
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace gp
