#include "demkit/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>

#include "cover_search.hpp"
#include "demkit/bitset.hpp"
#include "demkit/monitor.hpp"

namespace demkit {

std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::greedy: return "greedy";
    case Method::fes_constructive: return "fes-constructive";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::optimal: return "optimal";
    case Certificate::feasible_with_ratio_bound:
      return "feasible-with-ratio-bound";
    case Certificate::feasible: return "feasible";
  }
  return "?";
}

int Bounds::lower() const {
  int lb = std::max({arboricity, density_lb, clique_lb});
  return std::max(lb, 0);
}

int Bounds::upper() const { return std::min({vc_ub, fes_ub, trivial_ub}); }

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const EdgeId& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

// --- exact vertex cover, branch and bound over bitmasks ---

struct VcSearch {
  int n;
  const std::vector<std::uint64_t>& adj;
  int best;

  void run(std::uint64_t alive, int cur) {
    // pendant/isolated closure
    for (;;) {
      if (cur >= best) return;
      bool changed = false;
      std::uint64_t scan = alive;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        std::uint64_t nb = adj[v] & alive;
        if (nb == 0) {
          alive &= ~(std::uint64_t{1} << v);
          changed = true;
        } else if (std::popcount(nb) == 1) {
          int u = std::countr_zero(nb);
          ++cur;
          alive &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
          changed = true;
          if (cur >= best) return;
        }
      }
      if (!changed) break;
    }

    int pick = -1, maxdeg = 0;
    std::uint64_t scan = alive;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(adj[v] & alive);
      if (d > maxdeg) {
        maxdeg = d;
        pick = v;
      }
    }
    if (maxdeg == 0) {
      best = std::min(best, cur);
      return;
    }
    if (maxdeg == 2) {
      // after the closure every remaining component is a cycle
      int add = 0;
      std::uint64_t rest = alive;
      while (rest) {
        int s = std::countr_zero(rest);
        std::uint64_t comp = std::uint64_t{1} << s;
        for (;;) {
          std::uint64_t grow = comp;
          std::uint64_t it = comp;
          while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            grow |= adj[v] & alive;
          }
          if (grow == comp) break;
          comp = grow;
        }
        add += ceil_div(std::popcount(comp), 2);
        rest &= ~comp;
      }
      if (cur + add < best) best = cur + add;
      return;
    }

    std::uint64_t nb = adj[pick] & alive;
    run(alive & ~(nb | (std::uint64_t{1} << pick)), cur + std::popcount(nb));
    run(alive & ~(std::uint64_t{1} << pick), cur + 1);
  }
};

int greedy_vertex_cover(const Graph& g) {
  std::vector<int> deg(g.vertex_count());
  std::vector<char> covered(g.edge_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  int size = 0, left = g.edge_count();
  while (left > 0) {
    int pick = -1, maxdeg = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (deg[v] > maxdeg) {
        maxdeg = deg[v];
        pick = v;
      }
    ++size;
    for (const Arc& a : g.arcs(pick)) {
      if (!covered[a.edge]) {
        covered[a.edge] = 1;
        --left;
        --deg[a.to];
      }
    }
    deg[pick] = 0;
  }
  return size;
}

int max_clique_exact(const Graph& g) {
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  int best = n >= 1 ? 1 : 0;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool clique = true;
    std::uint64_t it = mask;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      if (mask & ~(adj[v] | (std::uint64_t{1} << v))) {
        clique = false;
        break;
      }
    }
    if (clique) best = std::popcount(mask);
  }
  return best;
}

int greedy_clique(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  auto adj = adjacency_masks(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair{-g.degree(a), a} < std::pair{-g.degree(b), b};
  });
  int best = 1;
  for (int s : order) {
    std::uint64_t clique = std::uint64_t{1} << s;
    int size = 1;
    for (int v : order) {
      if (v == s) continue;
      if ((clique & ~adj[v]) == 0) {
        clique |= std::uint64_t{1} << v;
        ++size;
      }
    }
    best = std::max(best, size);
  }
  return best;
}

int arboricity_exhaustive(const Graph& g) {
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  int best = 0;
  std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t mask = 3; mask < lim; ++mask) {
    int pc = std::popcount(mask);
    if (pc < 2) continue;
    int twice = 0;
    std::uint64_t it = mask;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      twice += std::popcount(adj[v] & mask);
    }
    if (twice == 0) continue;
    best = std::max(best, ceil_div(twice / 2, pc - 1));
  }
  return best;
}

}  // namespace

int exact_vertex_cover(const Graph& g) {
  int n = g.vertex_count();
  if (n > 64) fail("size-limit", "vertex cover solver supports n <= 64");
  if (g.edge_count() == 0) return 0;
  auto adj = adjacency_masks(g);
  VcSearch search{n, adj, greedy_vertex_cover(g)};
  std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.run(all, 0);
  return search.best;
}

Bounds bounds(const Graph& g) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  int n = g.vertex_count();
  int m = g.edge_count();

  Bounds b;
  b.trivial_ub = std::max(n - 1, 0);
  int k = fes(base_graph(g).graph);
  b.fes_ub = k <= 2 ? k + 1 : 2 * k - 2;
  b.density_lb = m == 0 ? 0 : ceil_div(m, n - 1);

  if (m == 0) {
    b.arboricity = 0;
    b.clique_lb = 0;
  } else if (n <= 20) {
    b.arboricity = arboricity_exhaustive(g);
    b.clique_lb = ceil_div(max_clique_exact(g), 2);
  } else {
    b.arboricity = b.density_lb;
    b.arboricity_exact = false;
    b.clique_lb = ceil_div(greedy_clique(g), 2);
    b.clique_exact = false;
  }

  if (n <= 40) {
    b.vc_ub = exact_vertex_cover(g);
  } else {
    b.vc_ub = greedy_vertex_cover(g);
    b.vc_exact = false;
  }
  return b;
}

// --- exact minimum monitoring set ---

SolveResult exact_min_dem(const Graph& g, const SolveOptions& opts) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  if (g.edge_count() == 0)
    return {{}, 0, Method::exact, Certificate::optimal, std::nullopt};

  Graph target = g;
  std::vector<int> new_to_old;
  if (opts.use_base_reduction) {
    BaseGraphResult bg = base_graph(g);
    if (bg.graph.vertex_count() == 0) {
      // tree: any single vertex monitors every (bridge) edge
      return {{0}, 1, Method::exact, Certificate::optimal, std::nullopt};
    }
    target = std::move(bg.graph);
    new_to_old = std::move(bg.new_to_old);
  } else {
    new_to_old.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) new_to_old[v] = v;
  }

  int nt = target.vertex_count();
  int mt = target.edge_count();
  if (nt > opts.max_n)
    fail("size-limit", "exact search limited to " + std::to_string(opts.max_n) +
                           " vertices (got " + std::to_string(nt) + ")");

  int words = (mt + 63) / 64;
  std::vector<EdgeBitset> sets(nt, EdgeBitset(mt));
  for (int x = 0; x < nt; ++x)
    for (const EdgeId& e : monitored_edges_fast(target, x))
      sets[x].set(e.index);

  // dominance: drop x when some earlier y monitors a superset
  std::vector<int> cand;
  for (int x = 0; x < nt; ++x) {
    bool dominated = false;
    for (int y = 0; y < x && !dominated; ++y)
      dominated = sets[x].is_subset_of(sets[y]);
    if (!dominated) cand.push_back(x);
  }

  internal::CoverSearch search;
  search.words = words;
  search.candidates = static_cast<int>(cand.size());
  search.set_words.assign(cand.size() * words, 0);
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (int e = 0; e < mt; ++e)
      if (sets[cand[i]].test(e))
        search.set_words[i * words + (e >> 6)] |= std::uint64_t{1} << (e & 63);
  search.universe.assign(words, 0);
  for (int e = 0; e < mt; ++e)
    search.universe[e >> 6] |= std::uint64_t{1} << (e & 63);

  int floor = std::max(bounds(target).lower(), 1);
  auto found = search.run(floor);
  if (!found.found)
    fail("validation-failed", "exact search exhausted without a cover");

  SolveResult res;
  for (int i : found.chosen) res.probes.push_back(new_to_old[cand[i]]);
  std::sort(res.probes.begin(), res.probes.end());
  res.size = static_cast<int>(res.probes.size());
  res.method = Method::exact;
  res.certificate = Certificate::optimal;
  return res;
}

SolveResult greedy_dem(const Graph& g) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  int n = g.vertex_count();
  int m = g.edge_count();

  SolveResult res;
  res.method = Method::greedy;
  res.certificate = Certificate::feasible_with_ratio_bound;
  res.ratio_bound = std::log(static_cast<double>(m) + 1.0);
  if (m == 0) return res;

  std::vector<EdgeBitset> sets(n, EdgeBitset(m));
  for (int x = 0; x < n; ++x)
    for (const EdgeId& e : monitored_edges_fast(g, x)) sets[x].set(e.index);

  EdgeBitset covered(m);
  int left = m;
  while (left > 0) {
    int pick = -1, gain = 0;
    for (int x = 0; x < n; ++x) {
      int cu = sets[x].count_uncovered_in(covered);
      if (cu > gain) {
        gain = cu;
        pick = x;
      }
    }
    if (pick < 0)
      fail("validation-failed", "greedy stalled with uncovered edges");
    covered |= sets[pick];
    left -= gain;
    res.probes.push_back(pick);
  }
  std::sort(res.probes.begin(), res.probes.end());
  res.size = static_cast<int>(res.probes.size());
  return res;
}

// --- constructive route from the feedback edge set structure ---

namespace {

// farthest vertex from the anchor on a core cycle; lowest index on ties
int cycle_far_vertex(const CorePath& p) {
  int len = p.length();
  if (len % 2 == 0) return p.vertices[len / 2];
  return std::min(p.vertices[(len - 1) / 2], p.vertices[(len + 1) / 2]);
}

// interior vertex adjacent to the lower-index endpoint; for a cycle the
// lower-index of the two interior neighbors of the anchor
int inner_near_low_end(const CorePath& p) {
  int len = p.length();
  if (p.is_cycle) return std::min(p.vertices[1], p.vertices[len - 1]);
  if (p.vertices.front() <= p.vertices.back()) return p.vertices[1];
  return p.vertices[len - 1];
}

// central vertex of a path, measured from its lower-index endpoint
int middle_vertex(const CorePath& p) {
  std::vector<int> seq = p.vertices;
  if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
  return seq[p.length() / 2];
}

int neighbor_on_path(const CorePath& p, int endpoint) {
  if (p.vertices.front() == endpoint) return p.vertices[1];
  return p.vertices[p.vertices.size() - 2];
}

}  // namespace

SolveResult fes_constructive(const Graph& g) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  if (is_tree(g)) fail("tree-input", "graph is a tree; any single vertex works");

  BaseGraphResult bg = base_graph(g);
  const Graph& core = bg.graph;
  int k = fes(core);
  CorePathDecomposition decomp = core_decomposition(core);

  std::set<int> probes;  // in base-graph ids

  if (k == 1) {
    const CorePath& cycle = decomp.core_paths.front();
    int len = cycle.length();
    probes.insert(cycle.vertices.front());
    probes.insert(cycle.vertices[len / 2]);
  } else if (k == 2) {
    std::vector<const CorePath*> cycles, paths;
    for (const CorePath& p : decomp.core_paths)
      (p.is_cycle ? cycles : paths).push_back(&p);
    if (!cycles.empty()) {
      if (cycles.size() != 2)
        fail("validation-failed", "unexpected core structure at fes 2");
      for (const CorePath* c : cycles) probes.insert(cycle_far_vertex(*c));
    } else {
      if (decomp.core_vertices.size() != 2 || paths.size() != 3)
        fail("validation-failed", "unexpected core structure at fes 2");
      int x = decomp.core_vertices[0];
      int y = decomp.core_vertices[1];
      if (!core.has_edge(x, y)) {
        probes.insert(x);
        probes.insert(y);
      } else {
        probes.insert(std::min(x, y));
        for (const CorePath* p : paths)
          if (p->length() >= 2) probes.insert(middle_vertex(*p));
      }
    }
  } else {
    // start from the core vertices, then repair the problematic core paths
    std::vector<int> deg(core.vertex_count());
    for (int v = 0; v < core.vertex_count(); ++v) deg[v] = core.degree(v);

    std::vector<const CorePath*> problematic;
    for (const CorePath& p : decomp.core_paths) {
      if (p.is_cycle) {
        if (p.length() % 2 == 1) problematic.push_back(&p);
      } else if (p.length() >= 3 && p.length() % 2 == 1 &&
                 core.has_edge(p.vertices.front(), p.vertices.back())) {
        problematic.push_back(&p);
      }
    }

    std::vector<const CorePath*> deleted, kept;
    for (const CorePath* p : problematic) {
      int c0 = p->vertices.front();
      int c1 = p->vertices.back();
      int drop = 0;
      if (p->is_cycle) {
        if (deg[c0] >= 3 && deg[c0] - 2 < 3) drop = 1;
      } else {
        if (deg[c0] >= 3 && deg[c0] - 1 < 3) ++drop;
        if (deg[c1] >= 3 && deg[c1] - 1 < 3) ++drop;
      }
      if (drop <= 1) {
        if (p->is_cycle) {
          deg[c0] -= 2;
        } else {
          --deg[c0];
          --deg[c1];
        }
        deleted.push_back(p);
      } else {
        kept.push_back(p);
      }
    }

    for (int c : decomp.core_vertices) probes.insert(c);
    for (const CorePath* p : deleted) probes.insert(inner_near_low_end(*p));
    for (const CorePath* p : kept) {
      int c = std::min(p->vertices.front(), p->vertices.back());
      probes.erase(c);
      probes.insert(neighbor_on_path(*p, c));
    }
  }

  SolveResult res;
  for (int v : probes) res.probes.push_back(bg.new_to_old[v]);
  std::sort(res.probes.begin(), res.probes.end());
  res.size = static_cast<int>(res.probes.size());
  res.method = Method::fes_constructive;
  res.certificate = Certificate::feasible;

  int bound = k <= 2 ? k + 1 : 2 * k - 2;
  if (res.size > bound)
    fail("validation-failed",
         "constructive set exceeds its size bound: " +
             std::to_string(res.size) + " > " + std::to_string(bound));
  DemCheck check = is_dem_set(g, res.probes);
  if (!check.ok)
    fail("validation-failed",
         "constructive set leaves edge (" +
             std::to_string(check.uncovered->u) + "," +
             std::to_string(check.uncovered->v) + ") unmonitored");
  return res;
}

std::optional<int> closed_form(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::path:
      if (spec.n < 1) return std::nullopt;
      return spec.n >= 2 ? 1 : 0;
    case Kind::tree:
      if (spec.n < 1) return std::nullopt;
      return spec.n >= 2 ? 1 : 0;
    case Kind::cycle:
      return spec.n >= 3 ? std::optional<int>(2) : std::nullopt;
    case Kind::grid: {
      int a = spec.a, b = spec.b;
      if (a < 1 || b < 1) return std::nullopt;
      if (a >= 2 && b >= 2) return std::max(a, b);
      return std::max(a, b) >= 2 ? 1 : 0;  // 1 x a grid is a path
    }
    case Kind::hypercube:
      return spec.d >= 1 ? std::optional<int>(1 << (spec.d - 1))
                         : std::nullopt;
    case Kind::complete:
      if (spec.n < 1) return std::nullopt;
      return spec.n >= 2 ? spec.n - 1 : 0;
    case Kind::complete_bipartite:
      if (spec.a < 1 || spec.b < 1) return std::nullopt;
      return std::min(spec.a, spec.b);
    case Kind::gnp_connected:
      return std::nullopt;
  }
  return std::nullopt;
}

UniversalVertexReport vc_universal_check(const Graph& g,
                                         const SolveOptions& opts) {
  if (!is_connected(g)) fail("disconnected", "graph is not connected");
  if (g.vertex_count() > 40)
    fail("size-limit", "exact vertex cover limited to n <= 40");

  UniversalVertexReport rep;
  rep.vc = exact_vertex_cover(g);
  rep.radius = radius(g);
  Graph join = join_universal(g);
  SolveOptions jopts = opts;
  jopts.max_n = std::max(jopts.max_n, join.vertex_count());
  rep.em_join = exact_min_dem(join, jopts).size;
  rep.sandwich_holds = rep.vc <= rep.em_join && rep.em_join <= rep.vc + 1;
  rep.equality_case = rep.radius >= 4;
  rep.equality_holds = rep.em_join == rep.vc;
  return rep;
}

}  // namespace demkit
