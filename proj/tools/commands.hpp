#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypertrees/mosaic.hpp"
#include "hypertrees/schlafli.hpp"

namespace hypertrees::cli {

enum class Format { Markdown, Csv, JsonLines };
enum class ProbMode { Asymptotic, Exact, Both };
enum class ExportWhat { Forest, Spanning, MosaicEdges };

struct RunConfig {
  int p = 4;
  int q = 5;
  std::size_t levels = 10;
  int precision = 30;
  Format format = Format::Markdown;
  std::string out;  // empty: standard output
  std::size_t vertex_cap = kDefaultVertexCap;
  ProbMode mode = ProbMode::Both;
  std::vector<SchlafliSymbol> symbols;
  ExportWhat what = ExportWhat::Forest;
  bool inject_fault = false;

  SchlafliSymbol symbol() const { return {p, q}; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default vertex cap, overridable through HYPERTREES_VERTEX_CAP.
std::size_t default_vertex_cap();

Format parse_format(const std::string& s);
ProbMode parse_mode(const std::string& s);
ExportWhat parse_what(const std::string& s);
std::vector<SchlafliSymbol> parse_symbol_list(const std::string& s);

// Each command writes its complete output to `out` and returns an exit code.
// Library errors propagate; run() maps them to kExitUsage.
int cmd_counts(const RunConfig& config, std::ostream& out);
int cmd_constants(const RunConfig& config, std::ostream& out);
int cmd_probs(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_export(const RunConfig& config, std::ostream& out);

/// Runs a command into a buffer and only then writes it to config.out or
/// `out`, so failures never leave partial output. Errors go to `err`.
int run(const std::string& command, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hypertrees::cli
