#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertrees/mosaic.hpp"
#include "hypertrees/schlafli.hpp"

namespace hypertrees {

enum class VertexClass : std::uint8_t {
  A,        // joined to exactly one vertex of the previous layer
  B,        // root of a new tree
  Outside,  // above the grown levels
};

struct GrowOptions {
  /// Accept p = 3. Parents are then chosen greedily (see grow).
  bool allow_triangles = false;
};

struct LevelCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t total() const { return a + b; }
  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Trees grown layer by layer on a mosaic. Vertex ids are the mosaic's.
class Forest {
 public:
  static constexpr VertexId kNoParent = 0xFFFFFFFFU;

  const SchlafliSymbol& symbol() const noexcept { return symbol_; }
  std::size_t levels() const noexcept { return level_counts_.size() - 1; }
  VertexId main_root() const noexcept { return 0; }
  std::size_t vertex_count() const noexcept { return cls_.size(); }

  VertexClass class_of(VertexId v) const { return cls_.at(v); }
  std::optional<VertexId> parent(VertexId v) const;
  VertexId root(VertexId v) const { return root_.at(v); }
  std::uint32_t root_level(VertexId v) const { return root_level_.at(v); }
  std::uint32_t layer_of(VertexId v) const { return layer_.at(v); }
  std::uint32_t child_count(VertexId v) const { return children_.at(v); }

  /// Layer i in counter-clockwise order.
  std::span<const VertexId> layer(std::size_t i) const;
  const LevelCounts& level_counts(std::size_t i) const;

  /// (parent, child) pairs ordered by child id.
  std::vector<Edge> edges() const;

  /// Turns v into a root, detaching it from its parent. Fault injection for
  /// verification tests; the forest no longer follows the growth rules.
  void reclassify_as_root(VertexId v);

 private:
  friend Forest grow(const Mosaic& mosaic, std::size_t levels, const GrowOptions& options);

  explicit Forest(SchlafliSymbol pq) : symbol_(pq) {}
  void recount();

  SchlafliSymbol symbol_;
  std::vector<VertexClass> cls_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> root_;
  std::vector<std::uint32_t> root_level_;
  std::vector<std::uint32_t> layer_;
  std::vector<std::uint32_t> children_;
  std::vector<std::size_t> layer_offsets_;
  std::vector<VertexId> layer_vertices_;
  std::vector<LevelCounts> level_counts_;
};

/// Grows the trees on layers 0..levels. A layer-i vertex with a neighbour on
/// layer i-1 is joined to it; every other layer-i vertex becomes a root.
///
/// For p >= 4 the upward neighbour is unique; a second one raises
/// ForcedParentViolation. q = 3 is rejected with DegenerateSymbol, and so is
/// p = 3 unless options.allow_triangles is set, in which case each vertex is
/// joined, in layer order, to a still childless upward neighbour if there is
/// one, ties going to the smallest id.
Forest grow(const Mosaic& mosaic, std::size_t levels, const GrowOptions& options = {});

/// Empirical (a_i, b_i).
LevelCounts counts(const Forest& forest, std::size_t i);

/// Entry j counts the layer-i vertices whose root lies on layer j.
std::vector<std::uint64_t> root_level_histogram(const Forest& forest, std::size_t i);

/// Layer-i vertices in the tree of the main root.
std::uint64_t main_root_descendants(const Forest& forest, std::size_t i);

struct SpanningTree {
  std::vector<Edge> tree_edges;  // the forest's (parent, child) edges
  std::vector<Edge> connectors;  // (root, its counter-clockwise layer neighbour)
  std::size_t vertex_count = 0;

  std::size_t edge_count() const { return tree_edges.size() + connectors.size(); }
};

/// Joins every non-main root to the vertex after it on its layer cycle.
SpanningTree spanning_tree(const Forest& forest, const Mosaic& mosaic);

struct DotOptions {
  std::string graph_name = "forest";
  /// Drawn dashed when set.
  const SpanningTree* spanning = nullptr;
};

/// Graphviz text. A vertices are circles, roots squares, the main root a
/// double square; every node carries its layer and class.
std::string export_dot(const Forest& forest, const DotOptions& options = {});

struct StructureIssue {
  std::string law;
  VertexId vertex;
  std::string message;
};

/// Checks the growth laws on a grown forest: parents one layer down, parent
/// chains ending at the recorded root, no leaves below the last layer, a
/// single upward neighbour (p >= 4), roots exactly where there is no upward
/// neighbour, fan-out q-3 / q-2 / q, and
/// q(q-3)^(i-1) descendants of the main root on layer i.
std::vector<StructureIssue> check_structure(const Forest& forest, const Mosaic& mosaic);

}  // namespace hypertrees
