#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

// Distance grid for a vertex pair (u, v): cell(x) = (d(u,x), d(v,x)) and
// buckets B_{i,j} collecting the vertices per cell.
struct BijGrid {
  int u = 0;
  int v = 0;
  std::vector<std::pair<int, int>> cell;  // per vertex
  std::map<std::pair<int, int>, std::vector<int>> buckets;
};

BijGrid bij_grid(const Graph& g, int u, int v);

struct Dem2Verdict {
  bool holds = false;
  std::optional<std::string> violated;  // "I".."IV"
  std::vector<int> witness;             // vertices of the first violation
};

// Literal evaluation of the four bucket conditions for a pair (u, v) on a
// connected base graph containing a cycle. First violation wins, scanned in
// canonical vertex order.
Dem2Verdict check_pair(const Graph& g_base, int u, int v);

struct Dem2Result {
  bool holds = false;
  std::optional<std::pair<int, int>> pair;  // in the input graph's ids
};

// Decides whether two probes suffice: false for trees, otherwise scans all
// ordered pairs of base-graph vertices and returns the first passing pair.
Dem2Result has_dem2(const Graph& g);

}  // namespace demkit
