#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

// Hypergraph (X, S) with X = {0..universe_size-1} and S a list of sorted
// element lists.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;

  bool empty() const { return universe_size == 0; }
};

// Text format: first line "|X| |S|", then |S| lines of space-separated
// 0-based element indices (a blank line is an empty set).
SetCoverInstance parse_set_cover(std::string_view text);
std::string write_set_cover(const SetCoverInstance& inst);

struct PreprocessResult {
  SetCoverInstance instance;     // elements renumbered, forced sets removed
  std::vector<int> forced_sets;  // original 0-based indices, forcing order
};

// Fixpoint of: any set containing a uniquely-covered element is forced into
// the cover, removed, and its elements deleted everywhere. Afterwards every
// surviving element lies in at least two sets.
PreprocessResult preprocess(const SetCoverInstance& inst);

enum class ReductionVariant { diam4, bip6, subcubic };

std::string to_string(ReductionVariant v);
ReductionVariant reduction_variant_from(const std::string& name);

struct ReductionOutput {
  Graph graph;
  int offset = 0;  // min-DEM = min-set-cover + offset
  std::vector<std::string> labels;  // role per vertex
  ReductionVariant variant = ReductionVariant::diam4;
  std::vector<int> set_vertices;      // vertex id of C_i per set
  int recommended_probe_a = -1;       // with the cover, forms a DEM set
  int recommended_probe_b = -1;       // -1 when the variant needs just one
};

// The three gadget constructions. All require a preprocessed, nonempty
// instance (every element in >= 2 sets).
ReductionOutput reduce_diam4(const SetCoverInstance& inst);
ReductionOutput reduce_bip6(const SetCoverInstance& inst);
ReductionOutput reduce_subcubic(const SetCoverInstance& inst);

struct SetCoverSolution {
  int size = 0;
  std::vector<int> cover;  // set indices, sorted
};

// minimum cover by subset enumeration in increasing size (|S| <= 25)
SetCoverSolution set_cover_exact(const SetCoverInstance& inst);
// largest-uncovered-first, lowest index on ties
SetCoverSolution set_cover_greedy(const SetCoverInstance& inst);

struct ReductionReport {
  ReductionVariant variant = ReductionVariant::diam4;
  std::vector<int> forced_sets;
  int min_set_cover = 0;          // on the preprocessed instance
  int min_dem = 0;
  int offset = 0;
  bool size_match = false;        // min_dem == min_set_cover + offset
  bool structure_ok = false;
  std::string structure_details;
  std::vector<int> cover;         // preprocessed-instance set indices
  std::vector<int> dem_probes;    // gadget vertex ids
};

// Preprocesses, builds the gadget, solves both sides exactly and checks the
// variant's structural claims.
ReductionReport verify_reduction(const SetCoverInstance& inst,
                                 ReductionVariant variant);

}  // namespace demkit
