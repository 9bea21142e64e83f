#pragma once

#include <cstdint>
#include <string>

namespace hypertrees {

enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string to_string(Geometry g);

/// A regular tessellation {p,q}: p-gons, q of them around every vertex.
class SchlafliSymbol {
 public:
  /// Throws InvalidSymbol for p < 3 or q < 3.
  SchlafliSymbol(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Sign of (p-2)(q-2) - 4.
  Geometry geometry() const noexcept;

  /// Trace of the recursion matrix, (p-2)(q-2) - 2.
  std::int64_t trace() const noexcept;

  bool is_hyperbolic() const noexcept { return geometry() == Geometry::Hyperbolic; }
  bool is_euclidean() const noexcept { return geometry() == Geometry::Euclidean; }

  SchlafliSymbol dual() const { return SchlafliSymbol(q_, p_); }

  /// "{p,q}"
  std::string to_string() const;

  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;

 private:
  int p_;
  int q_;
};

/// Rejects p = 3 or q = 3 (DegenerateSymbol) and spherical symbols
/// (SphericalSymbol). Used by every operation on the tree recursion.
void require_tree_symbol(const SchlafliSymbol& pq);

/// Parses "p:q" or "{p,q}".
SchlafliSymbol parse_symbol(const std::string& text);

}  // namespace hypertrees
