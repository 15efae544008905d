#include "demkit/monitor.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "demkit/bitset.hpp"

namespace demkit {

namespace {

void require_connected_from(const Graph& g, const std::vector<int>& dist) {
  for (int d : dist)
    if (d < 0) fail("disconnected", "graph is not connected");
}

void check_vertex(const Graph& g, int x) {
  if (x < 0 || x >= g.vertex_count())
    fail("vertex-out-of-range", "vertex " + std::to_string(x));
}

void check_probes(const Graph& g, const std::vector<int>& probes) {
  for (int x : probes) check_vertex(g, x);
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MonitoredEdges monitored_edges_fast(const Graph& g, int x) {
  check_vertex(g, x);
  thread_local std::vector<int> dist;
  bfs_dist(g, x, dist);
  require_connected_from(g, dist);

  MonitoredEdges out;
  out.source = x;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == x) continue;
    int below = dist[v] - 1;
    int parents = 0, parent_edge = -1;
    for (const Arc& a : g.arcs(v)) {
      if (dist[a.to] == below) {
        ++parents;
        parent_edge = a.edge;
        if (parents > 1) break;
      }
    }
    if (parents == 1) out.edges.push_back(g.edge(parent_edge));
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const EdgeId& a, const EdgeId& b) { return a.index < b.index; });
  return out;
}

MonitoredEdges monitored_edges_oracle(const Graph& g, int x) {
  check_vertex(g, x);
  thread_local std::vector<int> base, probe;
  bfs_dist(g, x, base);
  require_connected_from(g, base);

  MonitoredEdges out;
  out.source = x;
  for (const EdgeId& e : g.edges()) {
    bfs_dist(g, x, probe, e.index);
    for (int y = 0; y < g.vertex_count(); ++y) {
      if (probe[y] != base[y]) {  // includes newly unreachable
        out.edges.push_back(e);
        break;
      }
    }
  }
  return out;
}

Signature signature(const Graph& g, const std::vector<int>& probes,
                    const EdgeId& e) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  auto idx = g.edge_index(e.u, e.v);
  if (!idx || *idx != e.index)
    fail("unknown-edge", "edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") not in graph");
  check_probes(g, probes);

  Signature sig;
  sig.edge = e;
  thread_local std::vector<int> base, removed;
  for (int x : sorted_unique(probes)) {
    bfs_dist(g, x, base);
    bfs_dist(g, x, removed, e.index);
    for (int y = 0; y < g.vertex_count(); ++y)
      if (base[y] != removed[y]) sig.pairs.push_back({x, y});
  }
  return sig;
}

DemCheck is_dem_set(const Graph& g, const std::vector<int>& probes) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  check_probes(g, probes);

  std::vector<char> covered(g.edge_count(), 0);
  for (int x : sorted_unique(probes))
    for (const EdgeId& e : monitored_edges_fast(g, x)) covered[e.index] = 1;

  for (const EdgeId& e : g.edges())
    if (!covered[e.index]) return {false, e};
  return {true, std::nullopt};
}

LocalizationTable localization_table(const Graph& g,
                                     const std::vector<int>& probes) {
  DemCheck check = is_dem_set(g, probes);
  if (!check.ok)
    fail("not-a-dem-set",
         "probe set leaves edge (" + std::to_string(check.uncovered->u) + "," +
             std::to_string(check.uncovered->v) + ") unmonitored");

  LocalizationTable table;
  table.probes = sorted_unique(probes);
  std::map<std::vector<std::pair<int, int>>, int> seen;
  for (const EdgeId& e : g.edges()) {
    Signature sig = signature(g, table.probes, e);
    auto [it, fresh] = seen.emplace(sig.pairs, e.index);
    if (!fresh) {
      const EdgeId& other = g.edge(it->second);
      fail("signature-collision",
           "edges (" + std::to_string(other.u) + "," + std::to_string(other.v) +
               ") and (" + std::to_string(e.u) + "," + std::to_string(e.v) +
               ") share a signature");
    }
    table.entries.push_back(std::move(sig));
  }
  return table;
}

EdgeId locate_failure(const LocalizationTable& table,
                      const std::vector<std::pair<int, int>>& observed) {
  std::vector<std::pair<int, int>> key = observed;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (const Signature& sig : table.entries)
    if (sig.pairs == key) return sig.edge;
  fail("no-matching-signature",
       "observed change set is not a single-edge failure consistent with the "
       "table");
}

bool incident_only(const Graph& g, int x) {
  MonitoredEdges m = monitored_edges_fast(g, x);
  if (static_cast<int>(m.edges.size()) != g.degree(x)) return false;
  for (const EdgeId& e : m.edges)
    if (e.u != x && e.v != x) return false;
  return true;
}

MultiSignature multi_signature(const Graph& g, const std::vector<int>& probes,
                               const std::vector<int>& failed_edge_indices) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  check_probes(g, probes);

  MultiSignature out;
  out.failed_edges = sorted_unique(failed_edge_indices);
  std::vector<char> skipped(g.edge_count(), 0);
  for (int idx : out.failed_edges) {
    if (idx < 0 || idx >= g.edge_count())
      fail("unknown-edge", "edge index " + std::to_string(idx));
    skipped[idx] = 1;
  }

  thread_local std::vector<int> base, removed;
  for (int x : sorted_unique(probes)) {
    bfs_dist(g, x, base);
    bfs_dist_skip(g, x, skipped, removed);
    for (int y = 0; y < g.vertex_count(); ++y)
      if (base[y] != removed[y]) out.pairs.push_back({x, y});
  }
  return out;
}

bool is_strong_dem(const Graph& g, const std::vector<int>& probes) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  int m = g.edge_count();
  if (m > 20)
    fail("size-limit",
         "strong monitoring check enumerates 2^m edge subsets; m <= 20 "
         "required");
  check_probes(g, probes);

  if (!is_dem_set(g, probes).ok) return false;

  std::vector<int> ps = sorted_unique(probes);
  int n = g.vertex_count();

  // base distances per probe
  std::vector<std::vector<int>> base(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) bfs_dist(g, ps[i], base[i]);

  std::vector<char> skipped(m, 0);
  thread_local std::vector<int> removed;
  std::unordered_map<std::string, std::uint32_t> seen;
  seen.reserve(std::size_t{1} << m);

  std::string key;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    for (int e = 0; e < m; ++e) skipped[e] = (mask >> e) & 1;
    key.clear();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      bfs_dist_skip(g, ps[i], skipped, removed);
      for (int y = 0; y < n; ++y)
        if (removed[y] != base[i][y]) {
          key.push_back(static_cast<char>(ps[i]));
          key.push_back(static_cast<char>(y));
        }
    }
    if (!seen.emplace(key, mask).second) return false;
  }
  return true;
}

}  // namespace demkit
