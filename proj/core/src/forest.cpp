#include "hypertrees/forest.hpp"

#include <algorithm>
#include <sstream>

#include "hypertrees/errors.hpp"

namespace hypertrees {

std::optional<VertexId> Forest::parent(VertexId v) const {
  const VertexId p = parent_.at(v);
  if (p == kNoParent) return std::nullopt;
  return p;
}

std::span<const VertexId> Forest::layer(std::size_t i) const {
  if (i > levels()) {
    throw PreconditionError("level " + std::to_string(i) + " requested but the forest has " +
                            std::to_string(levels()) + " levels");
  }
  return {layer_vertices_.data() + layer_offsets_[i], layer_offsets_[i + 1] - layer_offsets_[i]};
}

const LevelCounts& Forest::level_counts(std::size_t i) const {
  if (i > levels()) {
    throw PreconditionError("level " + std::to_string(i) + " requested but the forest has " +
                            std::to_string(levels()) + " levels");
  }
  return level_counts_[i];
}

std::vector<Edge> Forest::edges() const {
  std::vector<Edge> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (parent_[v] != kNoParent) out.emplace_back(parent_[v], v);
  }
  return out;
}

void Forest::reclassify_as_root(VertexId v) {
  if (cls_.at(v) != VertexClass::A) throw PreconditionError("only an A vertex can be detached");
  --children_[parent_[v]];
  cls_[v] = VertexClass::B;
  parent_[v] = kNoParent;
  root_[v] = v;
  root_level_[v] = layer_[v];
  recount();
}

void Forest::recount() {
  for (std::size_t i = 0; i < level_counts_.size(); ++i) {
    LevelCounts c;
    for (VertexId v : layer(i)) {
      if (cls_[v] == VertexClass::A) ++c.a;
      if (cls_[v] == VertexClass::B) ++c.b;
    }
    level_counts_[i] = c;
  }
}

Forest grow(const Mosaic& mosaic, std::size_t levels, const GrowOptions& options) {
  const SchlafliSymbol& pq = mosaic.symbol();
  if (pq.q() == 3) {
    throw DegenerateSymbol(pq.to_string() + ": q = 3 leaves a single edge between layers, no trees exist");
  }
  const bool triangles = pq.p() == 3;
  if (triangles && !options.allow_triangles) {
    throw DegenerateSymbol(pq.to_string() +
                           ": p = 3 parents are not forced; enable allow_triangles to grow greedily");
  }
  if (levels > mosaic.belts()) {
    throw PreconditionError("growing " + std::to_string(levels) + " levels needs as many belts, have " +
                            std::to_string(mosaic.belts()));
  }

  Forest f(pq);
  const std::size_t n = mosaic.vertex_count();
  f.cls_.assign(n, VertexClass::Outside);
  f.parent_.assign(n, Forest::kNoParent);
  f.root_.assign(n, Forest::kNoParent);
  f.root_level_.assign(n, 0);
  f.layer_.resize(n);
  f.children_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) f.layer_[v] = mosaic.layer_of(v);

  f.layer_offsets_.push_back(0);
  for (std::size_t i = 0; i <= levels; ++i) {
    const auto cyc = mosaic.layer(i);
    f.layer_vertices_.insert(f.layer_vertices_.end(), cyc.begin(), cyc.end());
    f.layer_offsets_.push_back(f.layer_vertices_.size());
  }

  f.cls_[0] = VertexClass::B;
  f.root_[0] = 0;

  std::vector<VertexId> upward;
  for (std::size_t i = 1; i <= levels; ++i) {
    for (VertexId v : mosaic.layer(i)) {
      upward.clear();
      for (VertexId u : mosaic.neighbours(v)) {
        if (mosaic.layer_of(u) + 1 == i) upward.push_back(u);
      }
      if (upward.empty()) {
        f.cls_[v] = VertexClass::B;
        f.root_[v] = v;
        f.root_level_[v] = static_cast<std::uint32_t>(i);
        continue;
      }
      if (upward.size() > 1 && !triangles) {
        throw ForcedParentViolation(pq.to_string() + ": vertex " + std::to_string(v) + " on layer " +
                                    std::to_string(i) + " has " + std::to_string(upward.size()) +
                                    " neighbours on the previous layer");
      }
      const VertexId parent = *std::min_element(upward.begin(), upward.end(), [&](VertexId l, VertexId r) {
        const bool l_free = f.children_[l] == 0;
        const bool r_free = f.children_[r] == 0;
        if (l_free != r_free) return l_free;
        return l < r;
      });
      f.cls_[v] = VertexClass::A;
      f.parent_[v] = parent;
      f.root_[v] = f.root_[parent];
      f.root_level_[v] = f.root_level_[parent];
      ++f.children_[parent];
    }
  }
  f.level_counts_.resize(levels + 1);
  f.recount();
  return f;
}

LevelCounts counts(const Forest& forest, std::size_t i) { return forest.level_counts(i); }

std::vector<std::uint64_t> root_level_histogram(const Forest& forest, std::size_t i) {
  std::vector<std::uint64_t> hist(i + 1, 0);
  for (VertexId v : forest.layer(i)) ++hist.at(forest.root_level(v));
  return hist;
}

std::uint64_t main_root_descendants(const Forest& forest, std::size_t i) {
  if (i < 1) throw PreconditionError("main-root descendants are counted from level 1");
  const auto l = forest.layer(i);
  return static_cast<std::uint64_t>(
      std::count_if(l.begin(), l.end(), [&](VertexId v) { return forest.root(v) == forest.main_root(); }));
}

SpanningTree spanning_tree(const Forest& forest, const Mosaic& mosaic) {
  SpanningTree t;
  t.tree_edges = forest.edges();
  for (std::size_t i = 0; i <= forest.levels(); ++i) {
    const auto cyc = forest.layer(i);
    t.vertex_count += cyc.size();
    if (i == 0) continue;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const VertexId v = cyc[k];
      if (forest.class_of(v) != VertexClass::B) continue;
      const VertexId next = cyc[(k + 1) % cyc.size()];
      if (!mosaic.has_edge(v, next)) {
        throw InvariantViolation("layer neighbours " + std::to_string(v) + " and " + std::to_string(next) +
                                 " are not adjacent");
      }
      t.connectors.emplace_back(v, next);
    }
  }
  return t;
}

std::string export_dot(const Forest& forest, const DotOptions& options) {
  std::ostringstream out;
  out << "// " << forest.symbol().to_string() << " trees, levels 0.." << forest.levels() << '\n';
  out << "graph " << options.graph_name << " {\n";
  out << "  node [shape=circle];\n";
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i <= forest.levels(); ++i) {
    const auto cyc = forest.layer(i);
    vertices.insert(vertices.end(), cyc.begin(), cyc.end());
  }
  std::sort(vertices.begin(), vertices.end());
  for (VertexId v : vertices) {
    const bool root = forest.class_of(v) == VertexClass::B;
    out << "  " << v << " [layer=" << forest.layer_of(v) << ", class=" << (root ? 'B' : 'A');
    if (root) out << ", shape=square";
    if (v == forest.main_root()) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [parent, child] : forest.edges()) out << "  " << parent << " -- " << child << ";\n";
  if (options.spanning != nullptr) {
    for (const auto& [root, next] : options.spanning->connectors) {
      out << "  " << root << " -- " << next << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::vector<StructureIssue> check_structure(const Forest& forest, const Mosaic& mosaic) {
  std::vector<StructureIssue> issues;
  const SchlafliSymbol& pq = forest.symbol();
  const bool triangles = pq.p() == 3;
  const auto q = static_cast<std::uint32_t>(pq.q());
  const std::size_t last = forest.levels();

  for (std::size_t i = 0; i <= last; ++i) {
    for (VertexId v : forest.layer(i)) {
      const auto parent = forest.parent(v);
      if (parent && forest.layer_of(*parent) + 1 != forest.layer_of(v)) {
        issues.push_back({"parent-layer", v, "parent " + std::to_string(*parent) + " is not one layer down"});
      }
      if (forest.class_of(v) == VertexClass::B && parent) {
        issues.push_back({"parent-layer", v, "root has a parent"});
      }

      // Parent chain ends at the recorded root.
      VertexId walk = v;
      std::size_t steps = 0;
      while (forest.parent(walk) && steps <= last) {
        walk = *forest.parent(walk);
        ++steps;
      }
      if (forest.class_of(walk) != VertexClass::B || walk != forest.root(v) ||
          forest.layer_of(walk) != forest.root_level(v)) {
        issues.push_back({"root-chain", v, "parent chain does not end at the recorded root"});
      }

      if (i < last && forest.child_count(v) == 0) {
        issues.push_back({"no-leaf", v, "leaf below the last layer"});
      }

      if (triangles) {
        if (i > 0 && forest.class_of(v) == VertexClass::B) {
          issues.push_back({"single-tree", v, "p = 3 forest has a root besides the main one"});
        }
        continue;
      }

      std::size_t up = 0;
      for (VertexId u : mosaic.neighbours(v)) {
        if (mosaic.layer_of(u) + 1 == i) ++up;
      }
      if (up > 1) issues.push_back({"forced-parent", v, std::to_string(up) + " upward neighbours"});
      if (i > 0 && (forest.class_of(v) == VertexClass::B) != (up == 0)) {
        issues.push_back({"root-definition", v,
                          forest.class_of(v) == VertexClass::B ? "root with a neighbour one layer down"
                                                               : "non-root without a neighbour one layer down"});
      }

      if (i < last) {
        const std::uint32_t expected = v == forest.main_root()                  ? q
                                       : forest.class_of(v) == VertexClass::B ? q - 2
                                                                               : q - 3;
        if (forest.child_count(v) != expected) {
          issues.push_back({"fan-out", v,
                            std::to_string(forest.child_count(v)) + " children, expected " +
                                std::to_string(expected)});
        }
      }
    }
  }

  if (!triangles) {
    std::uint64_t expected = q;
    for (std::size_t i = 1; i <= last; ++i) {
      const auto got = main_root_descendants(forest, i);
      if (got != expected) {
        issues.push_back({"main-root-descendants", forest.main_root(),
                          "layer " + std::to_string(i) + " has " + std::to_string(got) +
                              " descendants, expected " + std::to_string(expected)});
      }
      expected *= q - 3;
    }
  }
  return issues;
}

}  // namespace hypertrees
