#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "demkit/error.hpp"

namespace demkit {

// Canonical undirected edge: u < v, index = position in the graph's edge
// list sorted lexicographically by (u, v).
struct EdgeId {
  int u = 0;
  int v = 0;
  int index = 0;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// Adjacency entry carrying the incident edge index alongside the neighbor.
struct Arc {
  int to = 0;
  int edge = 0;
};

// Immutable simple undirected graph. Vertices are 0..n-1; the edge list is
// canonical (sorted, u < v) and edge indices are stable.
class Graph {
 public:
  Graph() = default;

  // Throws Error on self-loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<EdgeId>& edges() const { return edges_; }
  const EdgeId& edge(int index) const { return edges_[index]; }

  const std::vector<Arc>& arcs(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }
  std::optional<int> edge_index(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Arc>> adj_;
  std::vector<EdgeId> edges_;
};

// --- traversal ---

// Unreachable vertices carry an empty distance; arithmetic on them is
// impossible by construction.
struct BfsLayers {
  int source = 0;
  std::vector<std::optional<int>> dist;
  std::vector<std::vector<int>> layers;  // layers[i] sorted ascending
};

BfsLayers bfs_layers(const Graph& g, int source);

// Low-level BFS into a reusable buffer; -1 marks unreachable. skip_edge is
// an edge index excluded from traversal (-1 for none).
void bfs_dist(const Graph& g, int source, std::vector<int>& dist,
              int skip_edge = -1);
void bfs_dist_skip(const Graph& g, int source,
                   const std::vector<char>& skipped_edges,
                   std::vector<int>& dist);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
int max_degree(const Graph& g);

// min/max eccentricity; both require a connected input
int radius(const Graph& g);
int diameter(const Graph& g);

// --- structure ---

std::vector<EdgeId> bridges(const Graph& g);

struct BaseGraphResult {
  Graph graph;
  std::vector<std::optional<int>> old_to_new;  // empty = vertex dropped
  std::vector<int> new_to_old;
};

// Iteratively strips vertices of degree <= 1. The result has minimum degree
// >= 2 or is empty.
BaseGraphResult base_graph(const Graph& g);

// feedback edge set number: m - n + (number of components)
int fes(const Graph& g);

struct CorePath {
  std::vector<int> vertices;  // endpoints first/last; equal for a cycle
  bool is_cycle = false;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct CorePathDecomposition {
  std::vector<int> core_vertices;  // degree >= 3, ascending
  std::vector<CorePath> core_paths;
};

// Decomposes a connected graph of minimum degree >= 2 into edge-disjoint
// core paths. A bare cycle yields no core vertices and a single core cycle
// anchored at its lowest-index vertex.
CorePathDecomposition core_decomposition(const Graph& g);

// --- families ---

struct FamilySpec {
  enum class Kind {
    path,
    cycle,
    tree,
    grid,
    hypercube,
    complete,
    complete_bipartite,
    gnp_connected,
  };

  Kind kind = Kind::path;
  int n = 0;             // path, cycle, tree, complete, gnp_connected
  int a = 0, b = 0;      // grid, complete_bipartite
  int d = 0;             // hypercube
  double p = 0.0;        // gnp_connected
  std::uint64_t seed = 0;  // tree, gnp_connected
};

// Canonical labeled constructions; deterministic given the spec (seeds
// drive an mt19937_64 with a platform-independent uniform mapping).
Graph generate(const FamilySpec& spec);

// New universal vertex n adjacent to all of 0..n-1.
Graph join_universal(const Graph& g);

// --- text format ---

// Edge-list document: first non-comment line "n m", then m lines "u v";
// lines starting with '#' are ignored. Errors carry 1-based line numbers.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

}  // namespace demkit
