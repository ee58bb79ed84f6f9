// Scenario DSL: named rings, graded matrices, ring maps, exterior-entry
// matrices and a job list. Parsing validates shapes, homogeneity and name
// references and reports line/column on error.
#pragma once

#include <map>

#include "tango/exterior.hpp"
#include "tango/gmodule.hpp"

namespace tango {

struct ScenarioError : std::runtime_error {
  int line, col;
  ScenarioError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

struct ExteriorMatrix {
  std::vector<std::vector<ExteriorElement>> entries;  // rows of columns
  size_t rows() const { return entries.size(); }
  size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

struct Scenario {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, GradedMatrix> matrices;
  std::map<std::string, RingMap> maps;
  std::map<std::string, ExteriorMatrix> emats;

  struct Job {
    std::string kind;
    std::vector<std::string> args;
    int line = 0;
  };
  std::vector<Job> jobs;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// Stable content digest (FNV-1a over a canonical rendering) for fixture
// integrity checks.
uint64_t matrix_digest(const GradedMatrix& m);

}  // namespace tango
