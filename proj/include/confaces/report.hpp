#ifndef CONFACES_REPORT_HPP
#define CONFACES_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "confaces/oracle.hpp"
#include "confaces/system_file.hpp"

namespace confaces {

inline constexpr const char* kToolName = "confaces";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
  bool force_general = false;
  int n_max = 12;
};

// Report plus the graph that backed it (absent when the fast path decided
// alone). Reports are byte-stable across runs except for the "run" object,
// which holds the timestamp and timings.
struct AnalysisResult {
  nlohmann::ordered_json report;
  std::optional<FaceGraph> graph;
};

// Validates, routes (fast path for two undirected stochastic matrices
// unless forced general, custom fixture when the file carries one, face
// graph otherwise), decides both problems, and re-verifies every witness
// before it is embedded.
AnalysisResult analyze(const SystemFile& sf, const AnalyzeOptions& opts = {});

struct OracleRunOptions {
  bool compare = false;  // also run the graph path; flag disagreement
  int n_max = 12;
  OracleOptions oracle;
};

struct OracleResult {
  nlohmann::ordered_json report;
  bool disagreement = false;
};

OracleResult run_oracle(const SystemFile& sf, const OracleRunOptions& opts = {});

}  // namespace confaces

#endif  // CONFACES_REPORT_HPP
