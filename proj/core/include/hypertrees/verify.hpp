#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypertrees/mosaic.hpp"
#include "hypertrees/schlafli.hpp"

namespace hypertrees {

/// Three-way cross-validation of one symbol: the enumerated mosaic and
/// forest, the integer recursion, and the closed form.
struct VerifyOptions {
  std::size_t levels = 6;
  std::size_t closed_form_levels = 200;
  std::size_t vertex_cap = kDefaultVertexCap;
  /// Detach one vertex of the grown forest before checking (negative control).
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SymbolReport {
  SchlafliSymbol symbol;
  std::size_t levels = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Propagates precondition errors (p = 3, q = 3, spherical, vertex cap).
SymbolReport verify_symbol(const SchlafliSymbol& pq, const VerifyOptions& options);

/// Symbols run concurrently; reports come back in input order.
std::vector<SymbolReport> verify_symbols(std::span<const SchlafliSymbol> symbols,
                                         const VerifyOptions& options);

/// {4,5}, {5,4}, {4,6}, {6,4}, {5,5}, {4,4}
std::vector<SchlafliSymbol> default_verify_symbols();

}  // namespace hypertrees
