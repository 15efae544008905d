#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

// M(x): the edges whose removal changes some distance from x. Induces a
// forest, contains every edge incident to x and every bridge of the graph.
struct MonitoredEdges {
  int source = 0;
  std::vector<EdgeId> edges;  // sorted by canonical edge index
};

// P(M, e) for a probe set M: all (probe, witness) pairs whose distance
// changes when e is removed. Disconnection counts as a change.
struct Signature {
  EdgeId edge;
  std::vector<std::pair<int, int>> pairs;  // sorted by (probe, witness)
};

struct LocalizationTable {
  std::vector<int> probes;          // sorted
  std::vector<Signature> entries;   // one per edge, sorted by edge index
};

struct MultiSignature {
  std::vector<int> failed_edges;  // edge indices, sorted
  std::vector<std::pair<int, int>> pairs;
};

struct DemCheck {
  bool ok = false;
  std::optional<EdgeId> uncovered;  // lowest-index uncovered edge on failure
};

// One BFS plus one edge scan: edge (u,v) is monitored by x iff the deeper
// endpoint has the other as its unique neighbor in the previous layer.
MonitoredEdges monitored_edges_fast(const Graph& g, int x);

// Definitional route: per-edge removal and distance comparison.
MonitoredEdges monitored_edges_oracle(const Graph& g, int x);

Signature signature(const Graph& g, const std::vector<int>& probes,
                    const EdgeId& e);

// true iff the union of M(x) over probes covers every edge
DemCheck is_dem_set(const Graph& g, const std::vector<int>& probes);

// Requires probes to be a distance-edge-monitoring set. Fails loudly if two
// edges collide on the same signature (that would contradict the theory and
// indicates a bug).
LocalizationTable localization_table(const Graph& g,
                                     const std::vector<int>& probes);

// Exact-match lookup of an observed change set; errors when no single-edge
// signature matches.
EdgeId locate_failure(const LocalizationTable& table,
                      const std::vector<std::pair<int, int>>& observed);

// true iff M(x) is exactly the set of edges incident to x
bool incident_only(const Graph& g, int x);

MultiSignature multi_signature(const Graph& g, const std::vector<int>& probes,
                               const std::vector<int>& failed_edge_indices);

// Exhaustively checks that E -> P(M, E) is injective over all edge subsets
// and that probes form a monitoring set. Guarded to m <= 20.
bool is_strong_dem(const Graph& g, const std::vector<int>& probes);

}  // namespace demkit
