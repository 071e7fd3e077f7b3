#include "tmac/experiments/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tmac/core/error.hpp"

namespace tmac::experiments {

bool Report::all_pass() const {
  for (const auto& t : thresholds)
    if (!t.pass) return false;
  return true;
}

void Report::check(std::string name, std::string rule, double observed, bool pass) {
  thresholds.push_back({std::move(name), std::move(rule), observed, pass});
}

nlohmann::ordered_json estimate_json(const games::Estimate& e) {
  return {{"hits", e.hits}, {"trials", e.trials}, {"rate", e.rate}, {"ci_lo", e.lo}, {"ci_hi", e.hi}};
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json th = nlohmann::ordered_json::array();
  for (const auto& t : r.thresholds)
    th.push_back({{"name", t.name}, {"rule", t.rule}, {"observed", t.observed}, {"pass", t.pass}});
  nlohmann::ordered_json out{{"experiment", r.experiment}, {"config", r.config}};
  if (!r.columns.empty()) {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) obj[r.columns[i]] = row[i];
      table.push_back(obj);
    }
    out["rows"] = table;
  }
  out["results"] = r.results;
  out["thresholds"] = th;
  out["all_pass"] = r.all_pass();
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "# experiment: " << r.experiment << "\n";
  os << "# config: " << r.config.dump() << "\n";
  for (const auto& t : r.thresholds)
    os << "# threshold: " << t.name << " | " << t.rule << " | observed " << format_number(t.observed) << " | "
       << (t.pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << "\n";
  }
  return os.str();
}

void write_report(const Report& r, const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  const std::string body = csv ? to_csv(r) : to_json(r).dump(2) + "\n";
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::InvalidArgument, "cannot open " + path + " for writing");
  f << body;
}

}  // namespace tmac::experiments
