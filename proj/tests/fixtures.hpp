#pragma once

// Shared helpers for locating fixture files and reading the JSON formats the
// CLI uses.  Tests honour SYMDES_FIXTURES so they run from any directory.

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdes/designs.hpp"
#include "symdes/incidence.hpp"
#include "symdes/permgroup.hpp"

inline std::string fixture(const std::string& name) {
  const char* dir = std::getenv("SYMDES_FIXTURES");
  return std::string(dir ? dir : "data") + "/" + name;
}

inline nlohmann::json load_fixture_json(const std::string& name) {
  std::ifstream f(fixture(name));
  if (!f) throw std::runtime_error("missing fixture: " + fixture(name));
  nlohmann::json j;
  f >> j;
  return j;
}

inline symdes::IncidenceStructure load_fixture_design(const std::string& name) {
  auto j = load_fixture_json(name);
  symdes::IncidenceStructure D;
  D.v = j["v"].get<int>();
  for (const auto& b : j["blocks"]) D.blocks.push_back(b.get<std::vector<int>>());
  return D;
}

inline symdes::PermutationGroup load_fixture_group(const std::string& name) {
  auto j = load_fixture_json(name);
  int n = j["degree"].get<int>();
  std::vector<symdes::Permutation> gens;
  for (const auto& g : j["generators"])
    gens.push_back(symdes::Permutation(g.get<std::vector<int>>()));
  return symdes::PermutationGroup(n, std::move(gens));
}

inline symdes::GroupTable load_fixture_table(const std::string& name) {
  auto j = load_fixture_json(name);
  symdes::GroupTable G;
  G.table = j["table"].get<std::vector<std::vector<int>>>();
  G.n = static_cast<int>(G.table.size());
  G.identity = j["identity"].get<int>();
  symdes::validate(G);
  return G;
}

inline symdes::IncidenceStructure make_fano() {
  symdes::IncidenceStructure F;
  F.v = 7;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> b{i % 7, (i + 1) % 7, (i + 3) % 7};
    std::sort(b.begin(), b.end());
    F.blocks.push_back(b);
  }
  return F;
}
