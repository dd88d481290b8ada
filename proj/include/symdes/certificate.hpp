#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace symdes {

inline constexpr const char* kArtifactVersion = "1.0.0";

// One emitted table: what ran, with which parameters, the per-candidate rows
// and an overall pass verdict.  Everything below `meta` is deterministic;
// `meta` carries the timestamp and is omitted in --stable mode.
struct Certificate {
  std::string command;            // e.g. "sieve product"
  nlohmann::json parameters;      // effective options, echoed back
  std::vector<std::string> columns;  // frozen CSV column order
  nlohmann::json rows = nlohmann::json::array();
  bool pass = true;
  std::string summary;            // one-line human note, incl. citations
};

// Canonical JSON rendering (sorted keys via ordered construction, 2-space
// indent, trailing newline).  stable=true drops the run-metadata header.
std::string to_json(const Certificate& c, bool stable);

// Frozen-column CSV: header line, then one line per row in order.  Fields
// are quoted only when they contain a comma or quote.
std::string to_csv(const Certificate& c);

// Writes to `out_path` or stdout when the path is empty.  Returns the
// process exit code: 0 when c.pass, 2 otherwise.
int emit(const Certificate& c, const std::string& format, const std::string& out_path,
         bool stable);

}  // namespace symdes
