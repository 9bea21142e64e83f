#include "hypertrees/mosaic.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "hypertrees/errors.hpp"

namespace hypertrees {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

std::uint64_t half_edge_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32U) | v;
}

// Frontier-filling construction. The frontier is the current outer boundary,
// a cycle kept counter-clockwise (built region on the left). A new cell is
// glued onto a frontier edge; whenever a vertex receives its q-th cell the
// cell also swallows the next frontier edge at that vertex.
class Builder {
 public:
  Builder(const SchlafliSymbol& pq, std::size_t cap)
      : p_(static_cast<std::uint32_t>(pq.p())), q_(static_cast<std::uint32_t>(pq.q())), cap_(cap) {}

  void build_first_belt() {
    belt_ = 1;
    new_vertex();  // the fixed vertex
    vertex_layer_[0] = 0;
    const std::uint32_t span = p_ - 2;  // spoke plus p-3 corners per cell
    for (std::uint32_t j = 0; j < q_ * span; ++j) new_vertex();
    for (std::uint32_t j = 0; j < q_; ++j) {
      const VertexId spoke = 1 + j * span;
      const VertexId next_spoke = 1 + ((j + 1) % q_) * span;
      std::vector<VertexId> cell{0, spoke};
      for (std::uint32_t k = 1; k < span; ++k) cell.push_back(spoke + k);
      cell.push_back(next_spoke);
      for (VertexId v : cell) ++cells_[v];
      add_cell(cell, Attachment::Center);
    }
    const auto n = static_cast<VertexId>(vertex_layer_.size());
    for (VertexId v = 1; v < n; ++v) {
      next_[v] = v + 1 < n ? v + 1 : 1;
      prev_[v] = v > 1 ? v - 1 : n - 1;
    }
    frontier_start_ = 1;
  }

  void build_next_belt() {
    ++belt_;
    const std::vector<VertexId> old_layer = frontier_cycle();
    const auto first_new = static_cast<VertexId>(vertex_layer_.size());
    for (VertexId v : old_layer) {
      while (cells_[v] < q_) glue(prev_[v], v);
    }
    const auto created = vertex_layer_.size() - first_new;
    if (created == 0 || cells_[first_new] >= q_) {
      throw InvariantViolation("belt " + std::to_string(belt_) +
                               " left its first vertex off the new layer");
    }
    frontier_start_ = first_new;
    if (frontier_cycle().size() != created) {
      throw InvariantViolation("belt " + std::to_string(belt_) +
                               " created vertices that lie on no layer");
    }
  }

  std::vector<VertexId> frontier_cycle() const {
    std::vector<VertexId> out;
    VertexId v = frontier_start_;
    do {
      out.push_back(v);
      v = next_[v];
      if (out.size() > vertex_layer_.size()) throw InvariantViolation("frontier is not a cycle");
    } while (v != frontier_start_);
    return out;
  }

  std::uint32_t p() const { return p_; }
  std::vector<std::uint32_t>& vertex_layers() { return vertex_layer_; }
  std::vector<std::uint32_t>& vertex_cells() { return cells_; }
  std::vector<VertexId>& cell_vertices() { return cell_vertices_; }
  std::vector<std::uint32_t>& cell_belts() { return cell_belt_; }
  std::vector<Attachment>& cell_attachments() { return cell_attachment_; }

 private:
  VertexId new_vertex() {
    if (vertex_layer_.size() >= cap_) {
      throw ResourceLimit("mosaic build exceeds the vertex cap of " + std::to_string(cap_));
    }
    const auto id = static_cast<VertexId>(vertex_layer_.size());
    vertex_layer_.push_back(belt_);
    cells_.push_back(0);
    next_.push_back(kNone);
    prev_.push_back(kNone);
    return id;
  }

  void add_cell(const std::vector<VertexId>& cycle, Attachment how) {
    cell_vertices_.insert(cell_vertices_.end(), cycle.begin(), cycle.end());
    cell_belt_.push_back(belt_);
    cell_attachment_.push_back(how);
  }

  // Glues a cell onto frontier edge x -> y.
  void glue(VertexId x, VertexId y) {
    ++cells_[x];
    ++cells_[y];
    std::vector<VertexId> ahead{y};
    std::vector<VertexId> behind;
    VertexId start = x;
    VertexId end = y;
    while (cells_[end] == q_) {
      end = next_[end];
      if (end == start) throw InvariantViolation("cell would swallow the whole frontier");
      ++cells_[end];
      ahead.push_back(end);
    }
    while (cells_[start] == q_) {
      start = prev_[start];
      if (start == end) throw InvariantViolation("cell would swallow the whole frontier");
      ++cells_[start];
      behind.push_back(start);
    }
    // Frontier run start .. end, in frontier order.
    std::vector<VertexId> run(behind.rbegin(), behind.rend());
    run.push_back(x);
    run.insert(run.end(), ahead.begin(), ahead.end());
    if (run.size() > p_) {
      throw InvariantViolation("a " + std::to_string(p_) + "-gon would touch " +
                               std::to_string(run.size()) + " frontier vertices");
    }

    // Counter-clockwise: the run backwards, then the fresh vertices.
    std::vector<VertexId> cycle(run.rbegin(), run.rend());
    const std::size_t fresh = p_ - run.size();
    VertexId last = start;
    for (std::size_t k = 0; k < fresh; ++k) {
      const VertexId v = new_vertex();
      cells_[v] = 1;
      cycle.push_back(v);
      next_[last] = v;
      prev_[v] = last;
      last = v;
    }
    next_[last] = end;
    prev_[end] = last;
    for (std::size_t k = 1; k + 1 < run.size(); ++k) {
      next_[run[k]] = kNone;
      prev_[run[k]] = kNone;
    }
    add_cell(cycle, Attachment::Edge);
  }

  std::uint32_t p_;
  std::uint32_t q_;
  std::size_t cap_;
  std::uint32_t belt_ = 0;
  std::vector<std::uint32_t> vertex_layer_;
  std::vector<std::uint32_t> cells_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<VertexId> cell_vertices_;
  std::vector<std::uint32_t> cell_belt_;
  std::vector<Attachment> cell_attachment_;
  VertexId frontier_start_ = 0;
};

// Counter-clockwise neighbour order from the cell corners. A corner
// a -> v -> b of a counter-clockwise cell means edge v-a follows v-b.
void assemble_rotations(std::size_t n, std::uint32_t p, std::span<const VertexId> cells,
                        std::vector<std::size_t>& offsets, std::vector<VertexId>& neighbours) {
  struct Corner {
    VertexId from;
    VertexId to;
  };
  std::vector<std::size_t> corner_offsets(n + 1, 0);
  for (VertexId v : cells) ++corner_offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) corner_offsets[v + 1] += corner_offsets[v];
  std::vector<Corner> corners(cells.size());
  std::vector<std::size_t> fill(corner_offsets.begin(), corner_offsets.end() - 1);
  for (std::size_t c = 0; c < cells.size() / p; ++c) {
    const auto cycle = cells.subspan(c * p, p);
    for (std::uint32_t k = 0; k < p; ++k) {
      const VertexId v = cycle[k];
      const VertexId a = cycle[(k + p - 1) % p];
      const VertexId b = cycle[(k + 1) % p];
      corners[fill[v]++] = {b, a};
    }
  }

  offsets.assign(n + 1, 0);
  neighbours.clear();
  for (std::size_t v = 0; v < n; ++v) {
    const std::span<const Corner> mine(corners.data() + corner_offsets[v],
                                       corner_offsets[v + 1] - corner_offsets[v]);
    VertexId start = kNone;
    for (const auto& c : mine) {
      const bool has_predecessor =
          std::any_of(mine.begin(), mine.end(), [&](const Corner& o) { return o.to == c.from; });
      if (!has_predecessor) {
        start = c.from;
        break;
      }
    }
    if (start == kNone && !mine.empty()) {
      start = std::min_element(mine.begin(), mine.end(), [](const Corner& l, const Corner& r) {
                return l.from < r.from;
              })->from;
    }
    const std::size_t before = neighbours.size();
    VertexId cur = start;
    while (cur != kNone && neighbours.size() - before <= mine.size()) {
      neighbours.push_back(cur);
      auto it = std::find_if(mine.begin(), mine.end(), [&](const Corner& c) { return c.from == cur; });
      if (it == mine.end() || it->to == start) break;
      cur = it->to;
    }
    offsets[v + 1] = neighbours.size();
  }
}

}  // namespace

std::span<const VertexId> Mosaic::neighbours(VertexId v) const {
  if (v >= vertex_count()) throw PreconditionError("vertex id out of range");
  return {neighbours_.data() + rotation_offsets_[v], rotation_offsets_[v + 1] - rotation_offsets_[v]};
}

std::span<const VertexId> Mosaic::layer(std::size_t i) const {
  if (i > belts()) {
    throw PreconditionError("layer " + std::to_string(i) + " requested but only " +
                            std::to_string(belts()) + " belts are built");
  }
  return {layer_vertices_.data() + layer_offsets_[i], layer_offsets_[i + 1] - layer_offsets_[i]};
}

std::span<const VertexId> Mosaic::cell(CellId c) const {
  if (c >= cell_count()) throw PreconditionError("cell id out of range");
  const auto p = static_cast<std::size_t>(symbol_.p());
  return {cell_vertices_.data() + c * p, p};
}

std::vector<std::size_t> Mosaic::belt_sizes() const {
  std::vector<std::size_t> out(belts() + 1, 0);
  for (auto b : cell_belt_) ++out[b];
  return out;
}

std::vector<std::size_t> Mosaic::layer_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= belts(); ++i) out.push_back(layer(i).size());
  return out;
}

bool Mosaic::has_edge(VertexId u, VertexId v) const {
  const auto ns = neighbours(u);
  return std::find(ns.begin(), ns.end(), v) != ns.end();
}

void Mosaic::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) throw PreconditionError("no edge to remove");
  std::vector<std::size_t> offsets(rotation_offsets_.size(), 0);
  std::vector<VertexId> kept;
  kept.reserve(neighbours_.size() - 2);
  for (VertexId w = 0; w < vertex_count(); ++w) {
    for (VertexId x : neighbours(w)) {
      if ((w == u && x == v) || (w == v && x == u)) continue;
      kept.push_back(x);
    }
    offsets[w + 1] = kept.size();
  }
  rotation_offsets_ = std::move(offsets);
  neighbours_ = std::move(kept);
}

Mosaic build(const SchlafliSymbol& pq, std::size_t belts, const BuildOptions& options) {
  if (pq.geometry() == Geometry::Spherical) {
    throw SphericalSymbol(pq.to_string() + " is spherical; its belts terminate");
  }
  if (belts < 1) throw PreconditionError("a mosaic needs at least one belt");

  Builder builder(pq, options.vertex_cap);
  std::vector<std::size_t> layer_offsets{0, 1};
  std::vector<VertexId> layer_vertices{0};

  builder.build_first_belt();
  auto append_layer = [&] {
    const auto cycle = builder.frontier_cycle();
    layer_vertices.insert(layer_vertices.end(), cycle.begin(), cycle.end());
    layer_offsets.push_back(layer_vertices.size());
  };
  append_layer();
  for (std::size_t b = 2; b <= belts; ++b) {
    builder.build_next_belt();
    append_layer();
  }

  Mosaic m(pq);
  assemble_rotations(builder.vertex_layers().size(), builder.p(), builder.cell_vertices(),
                     m.rotation_offsets_, m.neighbours_);
  m.vertex_layer_ = std::move(builder.vertex_layers());
  m.vertex_cells_ = std::move(builder.vertex_cells());
  m.cell_vertices_ = std::move(builder.cell_vertices());
  m.cell_belt_ = std::move(builder.cell_belts());
  m.cell_attachment_ = std::move(builder.cell_attachments());
  m.layer_offsets_ = std::move(layer_offsets);
  m.layer_vertices_ = std::move(layer_vertices);

  const std::size_t p = m.cell_vertices_.size() / std::max<std::size_t>(m.cell_belt_.size(), 1);
  for (CellId c = 0; c < m.cell_count(); ++c) {
    const auto belt = m.cell_belt_[c];
    if (belt < 2) continue;
    std::size_t touching = 0;
    for (std::size_t k = 0; k < p; ++k) {
      if (m.vertex_layer_[m.cell_vertices_[c * p + k]] + 1 == belt) ++touching;
    }
    m.cell_attachment_[c] = touching == 1 ? Attachment::Vertex : Attachment::Edge;
  }
  return m;
}

bool ValidationReport::failed(const std::string& check) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.check == check; });
}

ValidationReport validate(const Mosaic& m) {
  ValidationReport report;
  auto fail = [&](std::string check, std::string element, std::string message) {
    report.issues.push_back({std::move(check), std::move(element), std::move(message)});
  };
  const auto p = static_cast<std::size_t>(m.symbol().p());
  const auto q = static_cast<std::size_t>(m.symbol().q());
  const auto outer = static_cast<std::uint32_t>(m.belts());

  // Cells: p distinct vertices joined by edges.
  ++report.checks_run;
  for (CellId c = 0; c < m.cell_count(); ++c) {
    auto cyc = m.cell(c);
    std::vector<VertexId> sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail("cell-size", "cell " + std::to_string(c), "repeats a vertex");
    }
    for (std::size_t k = 0; k < p; ++k) {
      if (!m.has_edge(cyc[k], cyc[(k + 1) % p])) {
        fail("cell-size", "cell " + std::to_string(c),
             "side " + std::to_string(cyc[k]) + "-" + std::to_string(cyc[(k + 1) % p]) +
                 " is not an edge");
      }
    }
  }

  // Degrees.
  ++report.checks_run;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    const bool interior = m.layer_of(v) < outer;
    if (interior && (m.degree(v) != q || m.cells_at(v) != q)) {
      fail("degree", "vertex " + std::to_string(v),
           "interior vertex has degree " + std::to_string(m.degree(v)) + " and " +
               std::to_string(m.cells_at(v)) + " cells, expected " + std::to_string(q));
    } else if (!interior && (m.cells_at(v) >= q || m.degree(v) > q)) {
      fail("degree", "vertex " + std::to_string(v), "outer vertex is already saturated");
    }
  }

  // Edge coverage: one cell on outer layer edges, two elsewhere.
  ++report.checks_run;
  std::unordered_map<std::uint64_t, CellId> cell_of_half_edge;
  cell_of_half_edge.reserve(m.cell_count() * p);
  std::unordered_map<std::uint64_t, int> coverage;
  for (CellId c = 0; c < m.cell_count(); ++c) {
    auto cyc = m.cell(c);
    for (std::size_t k = 0; k < p; ++k) {
      const VertexId u = cyc[k];
      const VertexId v = cyc[(k + 1) % p];
      cell_of_half_edge[half_edge_key(u, v)] = c;
      ++coverage[half_edge_key(std::min(u, v), std::max(u, v))];
    }
  }
  const auto outer_layer = m.layer(outer);
  std::unordered_map<std::uint64_t, bool> outer_edges;
  for (std::size_t k = 0; k < outer_layer.size(); ++k) {
    const VertexId u = outer_layer[k];
    const VertexId v = outer_layer[(k + 1) % outer_layer.size()];
    outer_edges[half_edge_key(std::min(u, v), std::max(u, v))] = true;
  }
  for (VertexId u = 0; u < m.vertex_count(); ++u) {
    for (VertexId v : m.neighbours(u)) {
      if (u > v) continue;
      const auto key = half_edge_key(u, v);
      const int expected = outer_edges.count(key) != 0 ? 1 : 2;
      const auto it = coverage.find(key);
      const int got = it == coverage.end() ? 0 : it->second;
      if (got != expected) {
        fail("edge-coverage", "edge " + std::to_string(u) + "-" + std::to_string(v),
             "covered by " + std::to_string(got) + " cells, expected " + std::to_string(expected));
      }
    }
  }

  // Rotation consistency: trace every face of the rotation system.
  ++report.checks_run;
  std::unordered_map<std::uint64_t, bool> visited;
  visited.reserve(2 * m.edge_count());
  std::vector<std::size_t> cell_hits(m.cell_count(), 0);
  std::vector<std::vector<VertexId>> extra_faces;
  bool broken = false;
  for (VertexId u = 0; u < m.vertex_count() && !broken; ++u) {
    for (VertexId v : m.neighbours(u)) {
      if (visited.count(half_edge_key(u, v)) != 0) continue;
      std::vector<VertexId> face;
      VertexId a = u;
      VertexId b = v;
      while (visited.count(half_edge_key(a, b)) == 0) {
        visited[half_edge_key(a, b)] = true;
        face.push_back(a);
        const auto around = m.neighbours(b);
        const auto pos = std::find(around.begin(), around.end(), a);
        if (pos == around.end()) {
          fail("rotation", "vertex " + std::to_string(b),
               "does not list neighbour " + std::to_string(a));
          broken = true;
          break;
        }
        const std::size_t idx = static_cast<std::size_t>(pos - around.begin());
        const VertexId c = around[(idx + around.size() - 1) % around.size()];
        a = b;
        b = c;
      }
      if (broken) break;
      const auto first = cell_of_half_edge.find(half_edge_key(face[0], face[1 % face.size()]));
      bool is_cell = first != cell_of_half_edge.end() && face.size() == p;
      for (std::size_t k = 0; is_cell && k < face.size(); ++k) {
        const auto it = cell_of_half_edge.find(half_edge_key(face[k], face[(k + 1) % face.size()]));
        is_cell = it != cell_of_half_edge.end() && it->second == first->second;
      }
      if (is_cell) {
        ++cell_hits[first->second];
      } else {
        extra_faces.push_back(std::move(face));
      }
    }
  }
  if (!broken) {
    for (CellId c = 0; c < m.cell_count(); ++c) {
      if (cell_hits[c] != 1) {
        fail("rotation", "cell " + std::to_string(c),
             "traced " + std::to_string(cell_hits[c]) + " times");
      }
    }
    if (extra_faces.size() != 1) {
      fail("rotation", "outer face",
           "expected one non-cell face, traced " + std::to_string(extra_faces.size()));
    } else {
      // The outer walk runs clockwise, i.e. the outer layer reversed.
      std::vector<VertexId> walk = extra_faces.front();
      std::vector<VertexId> expected(outer_layer.rbegin(), outer_layer.rend());
      auto canon = [](std::vector<VertexId> cyc) {
        if (!cyc.empty()) std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        return cyc;
      };
      if (canon(walk) != canon(expected)) {
        fail("rotation", "outer face", "outer walk does not match the outer layer");
      }
    }
  }

  // Layers: simple cycles, consistent labels, every vertex on its layer.
  ++report.checks_run;
  std::vector<std::size_t> labelled(m.belts() + 1, 0);
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (m.layer_of(v) <= m.belts()) ++labelled[m.layer_of(v)];
  }
  for (std::size_t i = 0; i <= m.belts(); ++i) {
    const auto cyc = m.layer(i);
    const std::string name = "layer " + std::to_string(i);
    std::vector<VertexId> sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail("layer", name, "repeats a vertex");
    }
    if (cyc.size() != labelled[i]) {
      fail("layer", name,
           "cycle has " + std::to_string(cyc.size()) + " vertices but " +
               std::to_string(labelled[i]) + " carry the label");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (m.layer_of(cyc[k]) != i) fail("layer", name, "vertex " + std::to_string(cyc[k]) + " is mislabelled");
      if (i > 0 && !m.has_edge(cyc[k], cyc[(k + 1) % cyc.size()])) {
        fail("layer", name,
             "consecutive vertices " + std::to_string(cyc[k]) + " and " +
                 std::to_string(cyc[(k + 1) % cyc.size()]) + " are not adjacent");
      }
    }
  }
  return report;
}

void write_edge_list(const Mosaic& m, std::ostream& out) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m.edge_count());
  for (VertexId u = 0; u < m.vertex_count(); ++u) {
    for (VertexId v : m.neighbours(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  out << "# p=" << m.symbol().p() << " q=" << m.symbol().q() << " belts=" << m.belts()
      << " vertices=" << m.vertex_count() << " edges=" << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace hypertrees
