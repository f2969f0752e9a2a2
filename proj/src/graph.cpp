#include "zxconn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <span>
#include <sstream>
#include <unordered_set>

#include "zxconn/errors.hpp"
#include "zxconn/rng.hpp"

namespace zxconn {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= node_count_ || e.v >= node_count_) {
      throw RangeError("edge " + std::to_string(i) + " (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") exceeds node count " +
                       std::to_string(node_count_));
    }
  }
}

std::size_t Graph::proper_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.is_loop(); }));
}

std::vector<Edge> Graph::sorted_edge_multiset() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

bool ComponentPartition::refines(const ComponentPartition& coarser) const {
  if (coarser.node_count() != node_count()) return false;
  for (const auto& group : components) {
    const auto target = coarser.assignment[group.front()];
    for (Node v : group) {
      if (coarser.assignment[v] != target) return false;
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\v\f");
  return s.substr(first, last - first + 1);
}

// Parses one nonnegative integer token starting at `pos`; advances past it.
std::optional<std::uint64_t> next_integer(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  if (pos >= line.size()) return std::nullopt;
  std::uint64_t value = 0;
  const char* begin = line.data() + pos;
  const char* end = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) return std::nullopt;
  if (ptr != end && *ptr != ' ' && *ptr != '\t') return std::nullopt;
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::size_t pos = 0;
    const auto u = next_integer(line, pos);
    const auto v = u ? next_integer(line, pos) : std::nullopt;
    if (!u || !v || !trim(line.substr(pos)).empty()) {
      throw ParseError(line_no, "expected two nonnegative integers, got '" + std::string(line) +
                                    "'");
    }
    if (options.node_count && (*u >= *options.node_count || *v >= *options.node_count)) {
      throw RangeError("line " + std::to_string(line_no) + ": endpoint exceeds node count " +
                       std::to_string(*options.node_count));
    }
    raw.emplace_back(*u, *v);
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (options.node_count || !options.remap_sparse_labels) {
    std::size_t n = options.node_count.value_or(0);
    for (auto [u, v] : raw) {
      edges.push_back({static_cast<Node>(u), static_cast<Node>(v)});
      if (!options.node_count) n = std::max<std::size_t>(n, std::max(u, v) + 1);
    }
    return Graph(n, std::move(edges));
  }

  std::map<std::uint64_t, Node> dense;
  std::vector<std::int64_t> labels;
  auto id_of = [&](std::uint64_t label) {
    auto [it, inserted] = dense.try_emplace(label, labels.size());
    if (inserted) labels.push_back(static_cast<std::int64_t>(label));
    return it->second;
  };
  for (auto [u, v] : raw) {
    const Node a = id_of(u);
    const Node b = id_of(v);
    edges.push_back({a, b});
  }
  Graph g(labels.size(), std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

Graph read_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open edge list '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str(), options);
}

std::string to_edge_list(const Graph& graph) {
  std::string out;
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("Erdos-Renyi graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_fixed_edge_count(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw DomainError("random graph needs n >= 1");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    throw DomainError("cannot place " + std::to_string(m) + " distinct edges on " +
                      std::to_string(n) + " nodes");
  }
  // Floyd's sampling of m distinct pair indices.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());

  std::vector<Edge> edges;
  edges.reserve(m);
  Node row = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t idx : indices) {
    while (idx >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    edges.push_back({row, static_cast<Node>(row + 1 + (idx - row_start))});
  }
  return Graph(n, std::move(edges));
}

Graph generate_random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed,
                                 bool allow_loops) {
  if (n < 1) throw DomainError("random graph needs n >= 1");
  if (n == 1 && m > 0 && !allow_loops) throw DomainError("no non-loop pair exists on one node");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const Node u = rng.below(n);
    const Node v = rng.below(n);
    if (u == v && !allow_loops) continue;
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph generate_complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph shuffle_edges(const Graph& graph, std::uint64_t seed) {
  std::vector<Edge> edges = graph.edges();
  Rng rng(seed);
  rng.shuffle(std::span<Edge>(edges));
  Graph out(graph.node_count(), std::move(edges));
  out.set_labels(graph.labels());
  return out;
}

ComponentPartition bfs_components(const Graph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<Node>> adjacency(n);
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  ComponentPartition out;
  out.assignment.assign(n, kUnvisited);
  std::queue<Node> frontier;
  for (Node start = 0; start < n; ++start) {
    if (out.assignment[start] != kUnvisited) continue;
    const std::size_t id = out.components.size();
    out.components.emplace_back();
    out.assignment[start] = id;
    frontier.push(start);
    while (!frontier.empty()) {
      const Node u = frontier.front();
      frontier.pop();
      out.components[id].push_back(u);
      for (Node w : adjacency[u]) {
        if (out.assignment[w] == kUnvisited) {
          out.assignment[w] = id;
          frontier.push(w);
        }
      }
    }
    std::sort(out.components[id].begin(), out.components[id].end());
  }
  return out;
}

}  // namespace zxconn
