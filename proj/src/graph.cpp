#include "demkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

namespace demkit {

namespace {

std::pair<int, int> normalized(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail("invalid-parameters", "vertex count must be non-negative");
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("vertex-out-of-range", "edge endpoint " +
                                      std::to_string(u < 0 || u >= n ? u : v) +
                                      " outside 0.." + std::to_string(n - 1));
    if (u == v) fail("self-loop", "self-loop at vertex " + std::to_string(u));
    norm.push_back(normalized(u, v));
  }
  std::sort(norm.begin(), norm.end());
  for (std::size_t i = 1; i < norm.size(); ++i)
    if (norm[i] == norm[i - 1])
      fail("duplicate-edge", "duplicate edge (" + std::to_string(norm[i].first) +
                                 "," + std::to_string(norm[i].second) + ")");

  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.edges_.reserve(norm.size());
  for (std::size_t i = 0; i < norm.size(); ++i) {
    auto [u, v] = norm[i];
    int idx = static_cast<int>(i);
    g.edges_.push_back({u, v, idx});
    g.adj_[u].push_back({v, idx});
    g.adj_[v].push_back({u, idx});
  }
  for (auto& arcs : g.adj_)
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  return g;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
  auto [a, b] = normalized(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair{a, b},
      [](const EdgeId& e, const std::pair<int, int>& key) {
        return std::pair{e.u, e.v} < key;
      });
  if (it != edges_.end() && it->u == a && it->v == b) return it->index;
  return std::nullopt;
}

// --- traversal ---

void bfs_dist(const Graph& g, int source, std::vector<int>& dist,
              int skip_edge) {
  thread_local std::vector<int> queue;
  int n = g.vertex_count();
  dist.assign(n, -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int dv = dist[v];
    for (const Arc& a : g.arcs(v)) {
      if (a.edge == skip_edge) continue;
      if (dist[a.to] < 0) {
        dist[a.to] = dv + 1;
        queue.push_back(a.to);
      }
    }
  }
}

void bfs_dist_skip(const Graph& g, int source,
                   const std::vector<char>& skipped_edges,
                   std::vector<int>& dist) {
  thread_local std::vector<int> queue;
  int n = g.vertex_count();
  dist.assign(n, -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int dv = dist[v];
    for (const Arc& a : g.arcs(v)) {
      if (skipped_edges[a.edge]) continue;
      if (dist[a.to] < 0) {
        dist[a.to] = dv + 1;
        queue.push_back(a.to);
      }
    }
  }
}

BfsLayers bfs_layers(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    fail("vertex-out-of-range", "bfs source " + std::to_string(source));
  std::vector<int> dist;
  bfs_dist(g, source, dist);
  BfsLayers out;
  out.source = source;
  out.dist.resize(g.vertex_count());
  int maxd = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] >= 0) {
      out.dist[v] = dist[v];
      maxd = std::max(maxd, dist[v]);
    }
  }
  out.layers.assign(maxd + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) out.layers[dist[v]].push_back(v);
  return out;
}

int component_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : g.arcs(v))
        if (!seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return component_count(g) == 1;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : g.arcs(v)) {
        if (color[a.to] < 0) {
          color[a.to] = color[v] ^ 1;
          stack.push_back(a.to);
        } else if (color[a.to] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace {

std::pair<int, int> eccentricity_range(const Graph& g) {
  if (g.vertex_count() == 0)
    fail("invalid-parameters", "eccentricity of the empty graph");
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  std::vector<int> dist;
  int rad = -1, diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bfs_dist(g, v, dist);
    int ecc = *std::max_element(dist.begin(), dist.end());
    rad = rad < 0 ? ecc : std::min(rad, ecc);
    diam = std::max(diam, ecc);
  }
  return {rad, diam};
}

}  // namespace

int radius(const Graph& g) { return eccentricity_range(g).first; }
int diameter(const Graph& g) { return eccentricity_range(g).second; }

// --- bridges (iterative lowlink) ---

std::vector<EdgeId> bridges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_bridge(g.edge_count(), 0);
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next_arc;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& arcs = g.arcs(f.v);
      if (f.next_arc < arcs.size()) {
        const Arc& a = arcs[f.next_arc++];
        if (a.edge == f.parent_edge) continue;
        if (disc[a.to] < 0) {
          disc[a.to] = low[a.to] = timer++;
          stack.push_back({a.to, a.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) is_bridge[pe] = 1;
        }
      }
    }
  }

  std::vector<EdgeId> out;
  for (const EdgeId& e : g.edges())
    if (is_bridge[e.index]) out.push_back(e);
  return out;
}

// --- base graph ---

BaseGraphResult base_graph(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (removed[v]) continue;
    removed[v] = 1;
    for (const Arc& a : g.arcs(v)) {
      if (removed[a.to]) continue;
      if (--deg[a.to] <= 1) queue.push_back(a.to);
    }
  }

  BaseGraphResult out;
  out.old_to_new.assign(n, std::nullopt);
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const EdgeId& e : g.edges())
    if (!removed[e.u] && !removed[e.v])
      edges.push_back({*out.old_to_new[e.u], *out.old_to_new[e.v]});
  out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

int fes(const Graph& g) {
  return g.edge_count() - g.vertex_count() + component_count(g);
}

// --- core decomposition ---

CorePathDecomposition core_decomposition(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) fail("invalid-parameters", "core decomposition of empty graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2)
      fail("degree-one-vertex",
           "vertex " + std::to_string(v) + " has degree < 2");
  if (!is_connected(g)) fail("disconnected", "graph is not connected");

  CorePathDecomposition out;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) out.core_vertices.push_back(v);

  std::vector<char> used(g.edge_count(), 0);

  auto walk = [&](int start, const Arc& first) {
    CorePath path;
    path.vertices.push_back(start);
    used[first.edge] = 1;
    int cur = first.to;
    path.vertices.push_back(cur);
    while (g.degree(cur) == 2) {
      const Arc* next = nullptr;
      for (const Arc& a : g.arcs(cur))
        if (!used[a.edge]) next = &a;
      if (!next) break;  // closed the walk at its start
      used[next->edge] = 1;
      path.vertices.push_back(next->to);
      cur = next->to;
    }
    path.is_cycle = path.vertices.front() == path.vertices.back();
    return path;
  };

  if (out.core_vertices.empty()) {
    // 2-regular connected: a single cycle, anchored at vertex 0
    out.core_paths.push_back(walk(0, g.arcs(0).front()));
  } else {
    for (int c : out.core_vertices)
      for (const Arc& a : g.arcs(c))
        if (!used[a.edge]) out.core_paths.push_back(walk(c, a));
  }

  for (char u : used)
    if (!u)
      fail("validation-failed", "core decomposition did not cover all edges");
  return out;
}

// --- families ---

namespace {

// platform-independent uniform double in [0,1)
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph make_path(int n) {
  if (n < 1) fail("invalid-parameters", "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
  if (n < 3) fail("invalid-parameters", "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph::from_edges(n, e);
}

Graph make_tree(int n, std::uint64_t seed) {
  if (n < 1) fail("invalid-parameters", "tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(rng() % n);
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<std::pair<int, int>> edges;
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  for (int x : pruefer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

Graph make_grid(int a, int b) {
  if (a < 1 || b < 1) fail("invalid-parameters", "grid needs a,b >= 1");
  std::vector<std::pair<int, int>> e;
  auto id = [b](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b) e.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < a) e.push_back({id(i, j), id(i + 1, j)});
    }
  return Graph::from_edges(a * b, e);
}

Graph make_hypercube(int d) {
  if (d < 1) fail("invalid-parameters", "hypercube needs d >= 1");
  if (d > 20) fail("invalid-parameters", "hypercube dimension too large");
  int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v) e.push_back({v, u});
    }
  return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
  if (n < 1) fail("invalid-parameters", "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    fail("invalid-parameters", "complete bipartite needs a,b >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::from_edges(a + b, e);
}

Graph make_gnp_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) fail("invalid-parameters", "gnp needs n >= 1");
  if (p < 0.0 || p > 1.0) fail("invalid-parameters", "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (next_uniform(rng) < p) e.push_back({u, v});
    Graph g = Graph::from_edges(n, e);
    if (is_connected(g)) return g;
  }
  fail("invalid-parameters",
       "gnp_connected: no connected sample within retry budget");
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::path:
      return make_path(spec.n);
    case Kind::cycle:
      return make_cycle(spec.n);
    case Kind::tree:
      return make_tree(spec.n, spec.seed);
    case Kind::grid:
      return make_grid(spec.a, spec.b);
    case Kind::hypercube:
      return make_hypercube(spec.d);
    case Kind::complete:
      return make_complete(spec.n);
    case Kind::complete_bipartite:
      return make_complete_bipartite(spec.a, spec.b);
    case Kind::gnp_connected:
      return make_gnp_connected(spec.n, spec.p, spec.seed);
  }
  fail("invalid-parameters", "unknown family");
}

Graph join_universal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> e;
  for (const EdgeId& ed : g.edges()) e.push_back({ed.u, ed.v});
  for (int v = 0; v < n; ++v) e.push_back({v, n});
  return Graph::from_edges(n + 1, e);
}

// --- text format ---

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<long long, int> seen;  // edge key -> first line
  int line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (n < 0) {
      int a, b;
      if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b))
        fail("parse-error",
             "line " + std::to_string(line_no) + ": expected \"n m\"");
      if (a < 0 || b < 0)
        fail("parse-error",
             "line " + std::to_string(line_no) + ": negative n or m");
      n = a;
      m = b;
      continue;
    }

    if (static_cast<int>(edges.size()) >= m)
      fail("parse-error",
           "line " + std::to_string(line_no) + ": trailing content after " +
               std::to_string(m) + " edges");

    int u, v;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      fail("parse-error",
           "line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("vertex-out-of-range", "line " + std::to_string(line_no) +
                                      ": vertex index outside 0.." +
                                      std::to_string(n - 1));
    if (u == v)
      fail("self-loop", "line " + std::to_string(line_no) + ": self-loop at " +
                            std::to_string(u));
    auto [a, b] = normalized(u, v);
    long long key = (static_cast<long long>(a) << 32) | b;
    auto [it, fresh] = seen.emplace(key, line_no);
    if (!fresh)
      fail("duplicate-edge", "line " + std::to_string(line_no) +
                                 ": duplicate of edge at line " +
                                 std::to_string(it->second));
    edges.push_back({u, v});
  }

  if (n < 0) fail("parse-error", "missing \"n m\" header line");
  if (static_cast<int>(edges.size()) != m)
    fail("parse-error", "expected " + std::to_string(m) + " edges, got " +
                            std::to_string(edges.size()));
  return Graph::from_edges(n, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const EdgeId& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace demkit
