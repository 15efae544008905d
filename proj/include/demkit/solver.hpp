#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

enum class Method { exact, greedy, fes_constructive, closed_form };
enum class Certificate { optimal, feasible_with_ratio_bound, feasible };

std::string to_string(Method m);
std::string to_string(Certificate c);

struct SolveResult {
  std::vector<int> probes;  // sorted
  int size = 0;
  Method method = Method::exact;
  Certificate certificate = Certificate::feasible;
  std::optional<double> ratio_bound;  // ln(m+1) for the greedy route
};

// Lower/upper sandwich for the minimum monitoring set size. Fields beyond
// the stated exhaustive-scan limits degrade to weaker (still valid) bounds
// and are flagged inexact.
struct Bounds {
  int arboricity = 0;
  bool arboricity_exact = true;
  int density_lb = 0;  // ceil(m / (n-1))
  int clique_lb = 0;   // ceil(omega / 2)
  bool clique_exact = true;
  int vc_ub = 0;
  bool vc_exact = true;
  int fes_ub = 0;      // k+1 if k <= 2 else 2k-2, k = fes of the base graph
  int trivial_ub = 0;  // n-1

  int lower() const;
  int upper() const;
};

struct SolveOptions {
  int max_n = 24;                 // exact search size guard
  bool use_base_reduction = true; // solve on the base graph (size-invariant)
};

// Optimal monitoring set: reduce to the base graph, build the covering
// instance with universe E and sets M(x), then iterative deepening over the
// target size with a lower-bound floor. Deterministic: lexicographically
// least optimum.
SolveResult exact_min_dem(const Graph& g, const SolveOptions& opts = {});

// Largest-uncovered-first with lowest-index tie break; carries the ln(m+1)
// ratio bound.
SolveResult greedy_dem(const Graph& g);

Bounds bounds(const Graph& g);

// Constructive set from the feedback-edge-set structure of the base graph;
// size <= k+1 for k <= 2 and <= 2k-2 for k >= 3. Always validated before
// being returned.
SolveResult fes_constructive(const Graph& g);

// Known closed forms for generated families; empty when not covered.
std::optional<int> closed_form(const FamilySpec& spec);

struct UniversalVertexReport {
  int vc = 0;
  int em_join = 0;
  int radius = 0;
  bool sandwich_holds = false;  // vc <= em_join <= vc + 1
  bool equality_case = false;   // radius >= 4
  bool equality_holds = false;  // em_join == vc (meaningful when radius >= 4)
};

// Compares the vertex cover number of g with the monitoring number of
// g joined to a universal vertex.
UniversalVertexReport vc_universal_check(const Graph& g,
                                         const SolveOptions& opts = {});

// exact minimum vertex cover, branch and bound (n <= 64 internally)
int exact_vertex_cover(const Graph& g);

}  // namespace demkit
