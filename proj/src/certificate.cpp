#include "symdes/certificate.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace symdes {

namespace {

std::string now_utc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_field(const nlohmann::json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_null())
    s = "";
  else
    s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_json(const Certificate& c, bool stable) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["version"] = kArtifactVersion;
  j["parameters"] = c.parameters;
  j["columns"] = c.columns;
  j["rows"] = c.rows;
  j["summary"] = nlohmann::ordered_json{{"pass", c.pass}, {"note", c.summary}};
  if (!stable) j["meta"] = nlohmann::ordered_json{{"generated", now_utc()}};
  return j.dump(2) + "\n";
}

std::string to_csv(const Certificate& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(c.columns[i]);
  os << "\n";
  for (const auto& row : c.rows) {
    for (size_t i = 0; i < c.columns.size(); ++i) {
      const auto it = row.find(c.columns[i]);
      os << (i ? "," : "") << (it == row.end() ? "" : csv_field(*it));
    }
    os << "\n";
  }
  return os.str();
}

int emit(const Certificate& c, const std::string& format, const std::string& out_path,
         bool stable) {
  std::string payload;
  if (format == "json")
    payload = to_json(c, stable);
  else if (format == "csv")
    payload = to_csv(c);
  else
    throw std::invalid_argument("unknown output format: " + format);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
  }
  return c.pass ? 0 : 2;
}

}  // namespace symdes
