#include "demkit/dem2.hpp"

#include <algorithm>

namespace demkit {

namespace {

void require_base_cyclic(const Graph& g) {
  if (g.vertex_count() == 0)
    fail("invalid-parameters", "empty graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2)
      fail("degree-one-vertex",
           "vertex " + std::to_string(v) + " has degree < 2");
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  if (g.edge_count() < g.vertex_count())
    fail("invalid-parameters", "graph contains no cycle");
}

}  // namespace

BijGrid bij_grid(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    fail("vertex-out-of-range", "grid pair out of range");
  std::vector<int> du, dv;
  bfs_dist(g, u, du);
  bfs_dist(g, v, dv);
  for (int x = 0; x < g.vertex_count(); ++x)
    if (du[x] < 0 || dv[x] < 0) fail("disconnected", "graph is not connected");

  BijGrid grid;
  grid.u = u;
  grid.v = v;
  grid.cell.resize(g.vertex_count());
  for (int x = 0; x < g.vertex_count(); ++x) {
    grid.cell[x] = {du[x], dv[x]};
    grid.buckets[grid.cell[x]].push_back(x);
  }
  return grid;
}

Dem2Verdict check_pair(const Graph& g_base, int u, int v) {
  require_base_cyclic(g_base);
  if (u == v) fail("invalid-parameters", "pair vertices must be distinct");
  BijGrid grid = bij_grid(g_base, u, v);
  const auto& cell = grid.cell;
  int n = g_base.vertex_count();

  // (I) every bucket is an independent set
  for (const EdgeId& e : g_base.edges())
    if (cell[e.u] == cell[e.v]) return {false, "I", {e.u, e.v}};

  // (II) at most one neighbor in each of the four level unions
  for (int x = 0; x < n; ++x) {
    auto [i, j] = cell[x];
    const std::pair<int, int> unions[4][2] = {
        {{i - 1, j}, {i - 1, j - 1}},
        {{i - 1, j}, {i - 1, j + 1}},
        {{i, j - 1}, {i - 1, j - 1}},
        {{i, j - 1}, {i + 1, j - 1}},
    };
    for (const auto& u2 : unions) {
      int first = -1;
      for (const Arc& a : g_base.arcs(x)) {
        if (cell[a.to] != u2[0] && cell[a.to] != u2[1]) continue;
        if (first < 0) {
          first = a.to;
        } else {
          return {false, "II", {x, first, a.to}};
        }
      }
    }
  }

  // (III) no 4-vertex path z x y z' across the stated buckets
  for (int x = 0; x < n; ++x) {
    auto [i, j] = cell[x];
    for (const Arc& ay : g_base.arcs(x)) {
      int y = ay.to;
      if (cell[y] != std::pair{i - 1, j + 1}) continue;
      for (const Arc& az : g_base.arcs(x)) {
        int z = az.to;
        if (z == y) continue;
        if (cell[z].first != i - 1) continue;
        if (cell[z].second != j - 1 && cell[z].second != j + 1) continue;
        for (const Arc& az2 : g_base.arcs(y)) {
          int zp = az2.to;
          if (zp == x || zp == z) continue;
          if (cell[zp].second != j) continue;
          if (cell[zp].first != i - 2 && cell[zp].first != i) continue;
          return {false, "III", {z, x, y, zp}};
        }
      }
    }
  }

  // (IV) neighbors in at most two of B_{i-1,j+1}, B_{i-1,j-1}, B_{i+1,j-1}
  for (int x = 0; x < n; ++x) {
    auto [i, j] = cell[x];
    int in_a = -1, in_b = -1, in_c = -1;
    for (const Arc& a : g_base.arcs(x)) {
      auto c = cell[a.to];
      if (c == std::pair{i - 1, j + 1} && in_a < 0) in_a = a.to;
      if (c == std::pair{i - 1, j - 1} && in_b < 0) in_b = a.to;
      if (c == std::pair{i + 1, j - 1} && in_c < 0) in_c = a.to;
    }
    if (in_a >= 0 && in_b >= 0 && in_c >= 0)
      return {false, "IV", {x, in_a, in_b, in_c}};
  }

  return {true, std::nullopt, {}};
}

Dem2Result has_dem2(const Graph& g) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  if (g.edge_count() == g.vertex_count() - 1) return {false, std::nullopt};

  BaseGraphResult bg = base_graph(g);
  int n = bg.graph.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (check_pair(bg.graph, u, v).holds)
        return {true, std::pair{bg.new_to_old[u], bg.new_to_old[v]}};
    }
  return {false, std::nullopt};
}

}  // namespace demkit
