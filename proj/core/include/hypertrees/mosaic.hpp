#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hypertrees/schlafli.hpp"

namespace hypertrees {

using VertexId = std::uint32_t;
using CellId = std::uint32_t;

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

/// How a cell of belt k meets belt k-1.
enum class Attachment : std::uint8_t {
  Center,  // a belt-1 cell around the fixed vertex
  Edge,    // shares at least one edge with the previous layer
  Vertex,  // shares exactly one vertex with the previous layer
};

struct BuildOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// The first belts of a regular {p,q} tessellation around a fixed vertex, as
/// a rotation system: every vertex lists its neighbours counter-clockwise.
/// Cells are stored as counter-clockwise vertex cycles. Vertex 0 is the fixed
/// vertex; layer i is the outer boundary cycle of belts 0..i.
class Mosaic {
 public:
  const SchlafliSymbol& symbol() const noexcept { return symbol_; }
  std::size_t belts() const noexcept { return layer_offsets_.size() - 2; }

  std::size_t vertex_count() const noexcept { return vertex_layer_.size(); }
  std::size_t cell_count() const noexcept { return cell_belt_.size(); }
  std::size_t edge_count() const noexcept { return neighbours_.size() / 2; }

  /// Neighbours of v in counter-clockwise order. For a vertex on the outer
  /// layer the list starts and ends with its two outer boundary edges.
  std::span<const VertexId> neighbours(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbours(v).size(); }
  std::uint32_t layer_of(VertexId v) const { return vertex_layer_.at(v); }
  /// Number of cells incident to v.
  std::uint32_t cells_at(VertexId v) const { return vertex_cells_.at(v); }

  /// Layer i as a cycle in counter-clockwise order; layer 0 is {0}.
  std::span<const VertexId> layer(std::size_t i) const;

  std::span<const VertexId> cell(CellId c) const;
  std::uint32_t belt_of(CellId c) const { return cell_belt_.at(c); }
  Attachment attachment(CellId c) const { return cell_attachment_.at(c); }

  /// Cells per belt, index 0 (the fixed vertex, no cells) included.
  std::vector<std::size_t> belt_sizes() const;
  /// Vertices per layer.
  std::vector<std::size_t> layer_sizes() const;

  bool has_edge(VertexId u, VertexId v) const;

  /// Drops the edge u-v from both rotations. Intended for fault injection in
  /// validation tests; the result is no longer a valid mosaic.
  void remove_edge(VertexId u, VertexId v);

 private:
  friend Mosaic build(const SchlafliSymbol& pq, std::size_t belts, const BuildOptions& options);

  explicit Mosaic(SchlafliSymbol pq) : symbol_(pq) {}

  SchlafliSymbol symbol_;
  std::vector<std::uint32_t> vertex_layer_;
  std::vector<std::uint32_t> vertex_cells_;
  std::vector<std::size_t> rotation_offsets_;
  std::vector<VertexId> neighbours_;
  std::vector<std::size_t> layer_offsets_;
  std::vector<VertexId> layer_vertices_;
  std::vector<VertexId> cell_vertices_;  // p per cell
  std::vector<std::uint32_t> cell_belt_;
  std::vector<Attachment> cell_attachment_;
};

/// Builds belts 1..belts around vertex 0. Rejects spherical symbols and
/// throws ResourceLimit once more than options.vertex_cap vertices would be
/// created.
Mosaic build(const SchlafliSymbol& pq, std::size_t belts, const BuildOptions& options = {});

struct ValidationIssue {
  std::string check;
  std::string element;  // "vertex 17", "cell 4", "layer 2", ...
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::size_t checks_run = 0;

  bool ok() const noexcept { return issues.empty(); }
  bool failed(const std::string& check) const;
};

/// Checks cell sizes, degrees, edge coverage, rotation consistency (face
/// tracing recovers the cells plus one outer walk) and layer simplicity.
ValidationReport validate(const Mosaic& mosaic);

/// Plain edge list: a "# p=.. q=.. belts=.. vertices=.. edges=.." header,
/// then one "u v" line per edge with u < v, sorted.
void write_edge_list(const Mosaic& mosaic, std::ostream& out);

}  // namespace hypertrees
