#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zxconn {

using Node = std::size_t;

// Unordered pair {u, v}; u == v is a self-loop. Stored as given, compared
// canonically.
struct Edge {
  Node u = 0;
  Node v = 0;

  bool is_loop() const noexcept { return u == v; }
  Edge canonical() const noexcept { return u <= v ? Edge{u, v} : Edge{v, u}; }

  friend bool operator==(const Edge& a, const Edge& b) noexcept {
    return a.u == b.u && a.v == b.v;
  }
  friend auto operator<=>(const Edge& a, const Edge& b) noexcept {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

// Undirected multigraph on dense node ids [0, node_count). Loops and
// duplicate edges are kept; edge order is significant for scheduling.
class Graph {
 public:
  Graph() = default;
  // Throws RangeError if any endpoint is >= node_count.
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Edges that are not self-loops.
  std::size_t proper_edge_count() const noexcept;

  // Canonicalized, sorted copy of the edge multiset.
  std::vector<Edge> sorted_edge_multiset() const;

  // Original labels when the graph was parsed from sparse ids; empty otherwise.
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::int64_t> labels) { labels_ = std::move(labels); }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> labels_;
};

// Component assignment in canonical form: component ids are numbered in
// order of each component's smallest node, and every member list is sorted.
struct ComponentPartition {
  std::vector<std::size_t> assignment;
  std::vector<std::vector<Node>> components;

  std::size_t component_count() const noexcept { return components.size(); }
  std::size_t node_count() const noexcept { return assignment.size(); }

  // Builds the canonical form from arbitrary labels (any equal label = same group).
  template <typename Label>
  static ComponentPartition from_labels(const std::vector<Label>& labels);

  // True if every group of `this` lies inside a single group of `coarser`.
  bool refines(const ComponentPartition& coarser) const;

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

struct ParseOptions {
  // When set, endpoints must be < node_count and ids are used as-is.
  std::optional<std::size_t> node_count;
  // Remap arbitrary nonnegative ids to dense ids in order of first
  // appearance, keeping the original ids in Graph::labels(). Ignored when
  // node_count is set.
  bool remap_sparse_labels = false;
};

// Line-oriented "u v" pairs; '#' starts a comment, blank lines are skipped.
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});
Graph read_edge_list_file(const std::string& path, const ParseOptions& options = {});
std::string to_edge_list(const Graph& graph);

// G(n, p): every simple pair independently with probability p, emitted in
// lexicographic order.
Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
// m distinct simple pairs drawn uniformly without replacement, sorted.
Graph generate_fixed_edge_count(std::size_t n, std::size_t m, std::uint64_t seed);
// m pairs drawn independently with replacement; loops only if allow_loops.
Graph generate_random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed,
                                 bool allow_loops);
// K_n with lexicographically sorted edges.
Graph generate_complete(std::size_t n);

Graph shuffle_edges(const Graph& graph, std::uint64_t seed);

// Classical ground truth: breadth-first search over the adjacency lists.
ComponentPartition bfs_components(const Graph& graph);

// ---- template impl ----

template <typename Label>
ComponentPartition ComponentPartition::from_labels(const std::vector<Label>& labels) {
  ComponentPartition out;
  out.assignment.assign(labels.size(), 0);
  std::map<Label, std::size_t> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(labels[i], out.components.size());
    if (inserted) out.components.emplace_back();
    out.assignment[i] = it->second;
    out.components[it->second].push_back(i);
  }
  return out;
}

}  // namespace zxconn
