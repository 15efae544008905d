#include "demkit/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cover_search.hpp"
#include "demkit/monitor.hpp"
#include "demkit/solver.hpp"

namespace demkit {

std::string to_string(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::diam4: return "diam4";
    case ReductionVariant::bip6: return "bip6";
    case ReductionVariant::subcubic: return "subcubic";
  }
  return "?";
}

ReductionVariant reduction_variant_from(const std::string& name) {
  if (name == "diam4") return ReductionVariant::diam4;
  if (name == "bip6") return ReductionVariant::bip6;
  if (name == "subcubic") return ReductionVariant::subcubic;
  fail("invalid-parameters", "unknown reduction variant \"" + name + "\"");
}

// --- instance text format ---

namespace {

void validate_instance(const SetCoverInstance& inst) {
  if (inst.universe_size < 0)
    fail("invalid-parameters", "negative universe size");
  for (const auto& s : inst.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= inst.universe_size)
        fail("invalid-parameters",
             "set element " + std::to_string(s[i]) + " outside universe");
      if (i > 0 && s[i] <= s[i - 1])
        fail("invalid-parameters", "set elements must be sorted and unique");
    }
  }
}

std::vector<int> coverage_counts(const SetCoverInstance& inst) {
  std::vector<int> cov(inst.universe_size, 0);
  for (const auto& s : inst.sets)
    for (int e : s) ++cov[e];
  return cov;
}

}  // namespace

SetCoverInstance parse_set_cover(std::string_view text) {
  std::vector<std::vector<int>> lines;
  std::size_t pos = 0;
  bool header = false;
  int nx = 0, ns = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::vector<int> nums;
    std::size_t i = 0;
    bool bad = false;
    while (i < line.size()) {
      while (i < line.size() &&
             (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
        ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r')
        ++j;
      if (j > i) {
        int x;
        auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, x);
        if (ec != std::errc{} || p != line.data() + j) bad = true;
        nums.push_back(x);
      }
      i = j;
    }
    if (bad) fail("parse-error", "non-numeric token in set cover file");

    if (!header) {
      if (nums.empty()) continue;  // leading blank lines
      if (nums.size() != 2)
        fail("parse-error", "expected \"|X| |S|\" header");
      nx = nums[0];
      ns = nums[1];
      header = true;
      continue;
    }
    if (static_cast<int>(lines.size()) < ns) lines.push_back(std::move(nums));
  }
  if (!header) fail("parse-error", "missing \"|X| |S|\" header");
  if (static_cast<int>(lines.size()) != ns)
    fail("parse-error", "expected " + std::to_string(ns) + " set lines, got " +
                            std::to_string(lines.size()));

  SetCoverInstance inst;
  inst.universe_size = nx;
  for (auto& s : lines) {
    std::sort(s.begin(), s.end());
    inst.sets.push_back(std::move(s));
  }
  validate_instance(inst);
  return inst;
}

std::string write_set_cover(const SetCoverInstance& inst) {
  std::ostringstream out;
  out << inst.universe_size << ' ' << inst.sets.size() << '\n';
  for (const auto& s : inst.sets) {
    for (std::size_t i = 0; i < s.size(); ++i)
      out << s[i] << (i + 1 < s.size() ? ' ' : '\n');
    if (s.empty()) out << '\n';
  }
  return out.str();
}

// --- preprocessing ---

PreprocessResult preprocess(const SetCoverInstance& inst) {
  validate_instance(inst);
  std::vector<int> cov = coverage_counts(inst);
  for (int e = 0; e < inst.universe_size; ++e)
    if (cov[e] == 0)
      fail("infeasible-instance",
           "element " + std::to_string(e) + " is in no set");

  int ns = static_cast<int>(inst.sets.size());
  std::vector<char> elem_alive(inst.universe_size, 1);
  std::vector<char> set_alive(ns, 1);
  PreprocessResult out;

  for (;;) {
    int trigger = -1;
    for (int e = 0; e < inst.universe_size && trigger < 0; ++e) {
      if (!elem_alive[e]) continue;
      int c = 0;
      for (int s = 0; s < ns; ++s)
        if (set_alive[s] &&
            std::binary_search(inst.sets[s].begin(), inst.sets[s].end(), e))
          ++c;
      if (c == 1) trigger = e;
    }
    if (trigger < 0) break;
    int forced = -1;
    for (int s = 0; s < ns; ++s)
      if (set_alive[s] && std::binary_search(inst.sets[s].begin(),
                                             inst.sets[s].end(), trigger))
        forced = s;
    out.forced_sets.push_back(forced);
    set_alive[forced] = 0;
    for (int e : inst.sets[forced]) elem_alive[e] = 0;
  }

  std::vector<int> renumber(inst.universe_size, -1);
  int next = 0;
  for (int e = 0; e < inst.universe_size; ++e)
    if (elem_alive[e]) renumber[e] = next++;
  out.instance.universe_size = next;
  for (int s = 0; s < ns; ++s) {
    if (!set_alive[s]) continue;
    std::vector<int> mapped;
    for (int e : inst.sets[s])
      if (elem_alive[e]) mapped.push_back(renumber[e]);
    out.instance.sets.push_back(std::move(mapped));
  }
  return out;
}

// --- gadget constructions ---

namespace {

void require_preprocessed_nonempty(const SetCoverInstance& inst) {
  validate_instance(inst);
  if (inst.empty()) fail("empty-instance", "set cover instance is empty");
  std::vector<int> cov = coverage_counts(inst);
  for (int e = 0; e < inst.universe_size; ++e)
    if (cov[e] < 2)
      fail("invalid-parameters",
           "instance not preprocessed: element " + std::to_string(e) +
               " lies in fewer than two sets");
}

struct GadgetBuilder {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;

  int add(const std::string& label) {
    labels.push_back(label);
    return static_cast<int>(labels.size()) - 1;
  }

  void connect(int a, int b) { edges.push_back({a, b}); }
};

std::string sub2(const std::string& base, int i, int j) {
  return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// element memberships as (set, element) pairs in (i, j) order
std::vector<std::pair<int, int>> memberships(const SetCoverInstance& inst) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < inst.sets.size(); ++i)
    for (int j : inst.sets[i]) out.push_back({static_cast<int>(i), j});
  return out;
}

}  // namespace

ReductionOutput reduce_diam4(const SetCoverInstance& inst) {
  require_preprocessed_nonempty(inst);
  int ns = static_cast<int>(inst.sets.size());
  int nx = inst.universe_size;
  auto mem = memberships(inst);

  GadgetBuilder b;
  int u1 = b.add("u_1"), u2 = b.add("u_2"), u3 = b.add("u_3");
  std::vector<int> v(ns), c(ns), x(nx), cc(mem.size()), ccp(mem.size()),
      w(nx);
  for (int i = 0; i < ns; ++i) v[i] = b.add("v_" + std::to_string(i + 1));
  for (int i = 0; i < ns; ++i) c[i] = b.add("C_" + std::to_string(i + 1));
  for (std::size_t t = 0; t < mem.size(); ++t)
    cc[t] = b.add(sub2("c", mem[t].first + 1, mem[t].second + 1));
  for (int j = 0; j < nx; ++j) x[j] = b.add("x_" + std::to_string(j + 1));
  int up1 = b.add("u'_1"), up2 = b.add("u'_2"), up3 = b.add("u'_3");
  for (std::size_t t = 0; t < mem.size(); ++t)
    ccp[t] = b.add(sub2("c'", mem[t].first + 1, mem[t].second + 1));
  for (int j = 0; j < nx; ++j) w[j] = b.add("w'_" + std::to_string(j + 1));

  b.connect(u1, u2);
  b.connect(u1, u3);
  b.connect(u2, up1);
  b.connect(u3, up1);
  for (int i = 0; i < ns; ++i) {
    b.connect(u1, v[i]);
    b.connect(v[i], c[i]);
  }
  for (std::size_t t = 0; t < mem.size(); ++t) {
    b.connect(c[mem[t].first], cc[t]);
    b.connect(cc[t], x[mem[t].second]);
  }
  b.connect(up1, up2);
  b.connect(up2, up3);
  b.connect(up3, up1);
  for (std::size_t t = 0; t < mem.size(); ++t) {
    b.connect(up1, ccp[t]);
    b.connect(ccp[t], cc[t]);
  }
  for (int j = 0; j < nx; ++j) {
    b.connect(up1, w[j]);
    b.connect(w[j], x[j]);
  }
  for (int i = 0; i < ns; ++i) b.connect(up1, v[i]);

  ReductionOutput out;
  out.graph = Graph::from_edges(static_cast<int>(b.labels.size()), b.edges);
  out.offset = 2;
  out.labels = std::move(b.labels);
  out.variant = ReductionVariant::diam4;
  out.set_vertices = c;
  out.recommended_probe_a = u1;
  out.recommended_probe_b = up2;
  return out;
}

ReductionOutput reduce_bip6(const SetCoverInstance& inst) {
  require_preprocessed_nonempty(inst);
  int ns = static_cast<int>(inst.sets.size());
  int nx = inst.universe_size;
  auto mem = memberships(inst);

  GadgetBuilder b;
  int u1 = b.add("u_1"), u2 = b.add("u_2"), u3 = b.add("u_3"),
      u4 = b.add("u_4");
  std::vector<int> v(ns), c(ns), x(nx), cc(mem.size()), vp(ns), w(nx);
  for (int i = 0; i < ns; ++i) v[i] = b.add("v_" + std::to_string(i + 1));
  for (int i = 0; i < ns; ++i) c[i] = b.add("C_" + std::to_string(i + 1));
  for (std::size_t t = 0; t < mem.size(); ++t)
    cc[t] = b.add(sub2("c", mem[t].first + 1, mem[t].second + 1));
  for (int j = 0; j < nx; ++j) x[j] = b.add("x_" + std::to_string(j + 1));
  int up1 = b.add("u'_1"), up2 = b.add("u'_2"), up3 = b.add("u'_3"),
      up4 = b.add("u'_4");
  for (int i = 0; i < ns; ++i) vp[i] = b.add("v'_" + std::to_string(i + 1));
  for (int j = 0; j < nx; ++j) w[j] = b.add("w'_" + std::to_string(j + 1));
  int upp1 = b.add("u''_1");

  b.connect(u1, u2);
  b.connect(u2, u3);
  b.connect(u3, u4);
  b.connect(u4, u1);
  for (int i = 0; i < ns; ++i) {
    b.connect(u1, v[i]);
    b.connect(v[i], c[i]);
  }
  for (std::size_t t = 0; t < mem.size(); ++t) {
    b.connect(c[mem[t].first], cc[t]);
    b.connect(cc[t], x[mem[t].second]);
  }
  b.connect(up1, up2);
  b.connect(up2, up3);
  b.connect(up3, up4);
  b.connect(up4, up1);
  for (int i = 0; i < ns; ++i) {
    b.connect(up1, vp[i]);
    b.connect(vp[i], c[i]);
  }
  for (int j = 0; j < nx; ++j) {
    b.connect(up1, w[j]);
    b.connect(w[j], x[j]);
  }
  b.connect(u1, upp1);
  b.connect(upp1, up1);

  ReductionOutput out;
  out.graph = Graph::from_edges(static_cast<int>(b.labels.size()), b.edges);
  out.offset = 2;
  out.labels = std::move(b.labels);
  out.variant = ReductionVariant::bip6;
  out.set_vertices = c;
  out.recommended_probe_a = u3;
  out.recommended_probe_b = up3;
  return out;
}

ReductionOutput reduce_subcubic(const SetCoverInstance& inst) {
  require_preprocessed_nonempty(inst);
  int ns = static_cast<int>(inst.sets.size());
  int nx = inst.universe_size;
  auto mem = memberships(inst);

  int target = std::max(nx, ns);
  int depth = 0;
  while ((1 << depth) < target) ++depth;  // ceil(log2 target)

  GadgetBuilder b;
  int u1 = b.add("u_1"), u2 = b.add("u_2"), u3 = b.add("u_3"),
      u4 = b.add("u_4");
  int u = b.add("u");

  // V(B): root u, interior levels, then leaves v_i
  std::vector<int> v(ns);
  {
    int l = ns;
    std::vector<std::vector<int>> level(depth + 1);
    level[0] = {u};
    for (int t = 1; t < depth; ++t) {
      int cnt = (l + (1 << (depth - t)) - 1) >> (depth - t);
      for (int k = 0; k < cnt; ++k)
        level[t].push_back(
            b.add("B(u):" + std::to_string(t) + ":" + std::to_string(k)));
    }
    for (int i = 0; i < ns; ++i) v[i] = b.add("v_" + std::to_string(i + 1));
    level[depth] = v;
    for (int t = 1; t <= depth; ++t)
      for (std::size_t k = 0; k < level[t].size(); ++k)
        b.connect(level[t - 1][k >> 1], level[t][k]);
  }

  // path interiors P_i, then C_i
  std::vector<std::vector<int>> path_inner(ns);
  for (int i = 0; i < ns; ++i)
    for (int t = 1; t < depth; ++t)
      path_inner[i].push_back(
          b.add("P_" + std::to_string(i + 1) + ":" + std::to_string(t)));
  std::vector<int> c(ns);
  for (int i = 0; i < ns; ++i) c[i] = b.add("C_" + std::to_string(i + 1));
  for (int i = 0; i < ns; ++i) {
    int prev = v[i];
    for (int t : path_inner[i]) {
      b.connect(prev, t);
      prev = t;
    }
    b.connect(prev, c[i]);
  }

  // B(C_i) interiors, then the shared leaves c_{i,j}, then B(x_j) interiors,
  // then x_j; leaf blocks are wired after all ids exist
  std::vector<int> cc(mem.size());
  std::vector<std::vector<int>> set_leaves(ns);

  // interiors of B(C_i)
  std::vector<std::vector<std::vector<int>>> set_tree_levels(ns);
  for (int i = 0; i < ns; ++i) {
    int l = static_cast<int>(inst.sets[i].size());
    set_tree_levels[i].resize(depth + 1);
    for (int t = 1; t < depth && l > 0; ++t) {
      int cnt = (l + (1 << (depth - t)) - 1) >> (depth - t);
      for (int k = 0; k < cnt; ++k)
        set_tree_levels[i][t].push_back(
            b.add("B(C_" + std::to_string(i + 1) + "):" + std::to_string(t) +
                  ":" + std::to_string(k)));
    }
  }
  for (std::size_t t = 0; t < mem.size(); ++t) {
    cc[t] = b.add(sub2("c", mem[t].first + 1, mem[t].second + 1));
    set_leaves[mem[t].first].push_back(cc[t]);
  }

  // interiors of B(x_j)
  std::vector<std::vector<int>> elem_leaves(nx);
  for (std::size_t t = 0; t < mem.size(); ++t)
    elem_leaves[mem[t].second].push_back(cc[t]);
  std::vector<std::vector<std::vector<int>>> elem_tree_levels(nx);
  for (int j = 0; j < nx; ++j) {
    int l = static_cast<int>(elem_leaves[j].size());
    elem_tree_levels[j].resize(depth + 1);
    for (int t = 1; t < depth && l > 0; ++t) {
      int cnt = (l + (1 << (depth - t)) - 1) >> (depth - t);
      for (int k = 0; k < cnt; ++k)
        elem_tree_levels[j][t].push_back(
            b.add("B(x_" + std::to_string(j + 1) + "):" + std::to_string(t) +
                  ":" + std::to_string(k)));
    }
  }
  std::vector<int> x(nx);
  for (int j = 0; j < nx; ++j) x[j] = b.add("x_" + std::to_string(j + 1));

  // wire the set trees and element trees
  for (int i = 0; i < ns; ++i) {
    auto levels = set_tree_levels[i];
    levels[0] = {c[i]};
    levels[depth] = set_leaves[i];
    if (set_leaves[i].empty()) continue;
    for (int t = 1; t <= depth; ++t)
      for (std::size_t k = 0; k < levels[t].size(); ++k)
        b.connect(levels[t - 1][k >> 1], levels[t][k]);
  }
  for (int j = 0; j < nx; ++j) {
    auto levels = elem_tree_levels[j];
    levels[0] = {x[j]};
    levels[depth] = elem_leaves[j];
    if (elem_leaves[j].empty()) continue;
    for (int t = 1; t <= depth; ++t)
      for (std::size_t k = 0; k < levels[t].size(); ++k)
        b.connect(levels[t - 1][k >> 1], levels[t][k]);
  }

  b.connect(u1, u2);
  b.connect(u2, u3);
  b.connect(u3, u4);
  b.connect(u4, u1);
  b.connect(u1, u);

  ReductionOutput out;
  out.graph = Graph::from_edges(static_cast<int>(b.labels.size()), b.edges);
  out.offset = 1;
  out.labels = std::move(b.labels);
  out.variant = ReductionVariant::subcubic;
  out.set_vertices = c;
  out.recommended_probe_a = u2;
  out.recommended_probe_b = -1;
  return out;
}

// --- covering oracles ---

SetCoverSolution set_cover_exact(const SetCoverInstance& inst) {
  validate_instance(inst);
  if (static_cast<int>(inst.sets.size()) > 25)
    fail("size-limit", "exact set cover limited to 25 sets");
  if (inst.universe_size == 0) return {0, {}};
  std::vector<int> cov = coverage_counts(inst);
  for (int e = 0; e < inst.universe_size; ++e)
    if (cov[e] == 0)
      fail("infeasible-instance",
           "element " + std::to_string(e) + " is in no set");

  int words = (inst.universe_size + 63) / 64;
  internal::CoverSearch search;
  search.words = words;
  search.candidates = static_cast<int>(inst.sets.size());
  search.set_words.assign(inst.sets.size() * words, 0);
  for (std::size_t i = 0; i < inst.sets.size(); ++i)
    for (int e : inst.sets[i])
      search.set_words[i * words + (e >> 6)] |= std::uint64_t{1} << (e & 63);
  search.universe.assign(words, 0);
  for (int e = 0; e < inst.universe_size; ++e)
    search.universe[e >> 6] |= std::uint64_t{1} << (e & 63);

  auto res = search.run(1);
  if (!res.found)
    fail("infeasible-instance", "no cover exists");  // unreachable after check
  return {static_cast<int>(res.chosen.size()), res.chosen};
}

SetCoverSolution set_cover_greedy(const SetCoverInstance& inst) {
  validate_instance(inst);
  std::vector<int> cov = coverage_counts(inst);
  for (int e = 0; e < inst.universe_size; ++e)
    if (cov[e] == 0)
      fail("infeasible-instance",
           "element " + std::to_string(e) + " is in no set");

  std::vector<char> covered(inst.universe_size, 0);
  int left = inst.universe_size;
  SetCoverSolution sol;
  while (left > 0) {
    int pick = -1, gain = 0;
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      int g = 0;
      for (int e : inst.sets[i])
        if (!covered[e]) ++g;
      if (g > gain) {
        gain = g;
        pick = static_cast<int>(i);
      }
    }
    for (int e : inst.sets[pick])
      if (!covered[e]) {
        covered[e] = 1;
        --left;
      }
    sol.cover.push_back(pick);
  }
  std::sort(sol.cover.begin(), sol.cover.end());
  sol.size = static_cast<int>(sol.cover.size());
  return sol;
}

// --- end-to-end verification ---

ReductionReport verify_reduction(const SetCoverInstance& inst,
                                 ReductionVariant variant) {
  PreprocessResult pre = preprocess(inst);
  if (pre.instance.empty())
    fail("empty-instance",
         "instance reduces to the empty instance; the cover is exactly the "
         "forced sets");

  ReductionOutput gadget;
  switch (variant) {
    case ReductionVariant::diam4:
      gadget = reduce_diam4(pre.instance);
      break;
    case ReductionVariant::bip6:
      gadget = reduce_bip6(pre.instance);
      break;
    case ReductionVariant::subcubic:
      gadget = reduce_subcubic(pre.instance);
      break;
  }

  ReductionReport rep;
  rep.variant = variant;
  rep.forced_sets = pre.forced_sets;
  rep.offset = gadget.offset;

  SetCoverSolution sc = set_cover_exact(pre.instance);
  rep.min_set_cover = sc.size;
  rep.cover = sc.cover;

  SolveOptions opts;
  opts.max_n = gadget.graph.vertex_count();
  SolveResult dem = exact_min_dem(gadget.graph, opts);
  rep.min_dem = dem.size;
  rep.dem_probes = dem.probes;
  rep.size_match = rep.min_dem == rep.min_set_cover + rep.offset;

  std::ostringstream details;
  switch (variant) {
    case ReductionVariant::diam4: {
      int d = diameter(gadget.graph);
      rep.structure_ok = d == 4;
      details << "diameter=" << d;
      break;
    }
    case ReductionVariant::bip6: {
      int d = diameter(gadget.graph);
      bool bip = is_bipartite(gadget.graph);
      rep.structure_ok = bip && d == 6;
      details << "bipartite=" << (bip ? "yes" : "no") << " diameter=" << d;
      break;
    }
    case ReductionVariant::subcubic: {
      bool bip = is_bipartite(gadget.graph);
      int deg = max_degree(gadget.graph);
      rep.structure_ok = bip && deg <= 3;
      details << "bipartite=" << (bip ? "yes" : "no") << " max_degree=" << deg;
      break;
    }
  }

  // the prescribed forward-direction probe set must monitor everything
  std::vector<int> prescribed;
  for (int i : sc.cover) prescribed.push_back(gadget.set_vertices[i]);
  prescribed.push_back(gadget.recommended_probe_a);
  if (gadget.recommended_probe_b >= 0)
    prescribed.push_back(gadget.recommended_probe_b);
  bool forward = is_dem_set(gadget.graph, prescribed).ok;
  rep.structure_ok = rep.structure_ok && forward;
  details << " forward_set=" << (forward ? "ok" : "FAIL");
  rep.structure_details = details.str();
  return rep;
}

}  // namespace demkit
