// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_SCC_HPP
#define AFT_COMMON_SCC_HPP

#include <algorithm>
#include <vector>

namespace aft {

/// Iterative Tarjan SCC.  Returns the component id of every vertex and the
/// component count; ids carry no ordering guarantee.
inline std::vector<int> scc_components(int n, const std::vector<std::pair<int, int>>& edges,
                                       int& scc_count) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)].push_back(b);
  std::vector<int> idx(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1), stack;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  int counter = 0;
  scc_count = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (idx[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    idx[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto& out = adj[static_cast<std::size_t>(f.v)];
      if (f.child < out.size()) {
        int w = out[f.child++];
        if (idx[static_cast<std::size_t>(w)] == -1) {
          idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], idx[static_cast<std::size_t>(w)]);
        }
      } else {
        if (low[static_cast<std::size_t>(f.v)] == idx[static_cast<std::size_t>(f.v)]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
            comp[static_cast<std::size_t>(w)] = scc_count;
            if (w == f.v) break;
          }
          ++scc_count;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[static_cast<std::size_t>(call.back().v)] = std::min(
              low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
      }
    }
  }
  return comp;
}

/// Condensation with a deterministic topological renumbering: component k
/// precedes component k+1, ties broken by smallest member vertex.  Outputs
/// per-component member lists (ascending) and the condensation edges.
inline void scc_condense(int n, const std::vector<std::pair<int, int>>& edges,
                         std::vector<int>& comp_of, std::vector<std::vector<int>>& members,
                         std::vector<std::pair<int, int>>& comp_edges) {
  int nscc = 0;
  std::vector<int> comp = scc_components(n, edges, nscc);
  std::vector<std::vector<int>> mem(static_cast<std::size_t>(nscc));
  for (int v = 0; v < n; ++v) mem[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<std::pair<int, int>> ce;
  for (auto [a, b] : edges) {
    int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
    if (ca != cb) ce.emplace_back(ca, cb);
  }
  std::sort(ce.begin(), ce.end());
  ce.erase(std::unique(ce.begin(), ce.end()), ce.end());

  std::vector<int> indeg(static_cast<std::size_t>(nscc), 0);
  for (auto [a, b] : ce) ++indeg[static_cast<std::size_t>(b)];
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(nscc), 0);
  for (int step = 0; step < nscc; ++step) {
    int best = -1;
    for (int c = 0; c < nscc; ++c) {
      if (used[static_cast<std::size_t>(c)] || indeg[static_cast<std::size_t>(c)] != 0) continue;
      if (best == -1 ||
          mem[static_cast<std::size_t>(c)].front() < mem[static_cast<std::size_t>(best)].front())
        best = c;
    }
    used[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (auto [a, b] : ce)
      if (a == best) --indeg[static_cast<std::size_t>(b)];
  }
  std::vector<int> renum(static_cast<std::size_t>(nscc));
  for (int k = 0; k < nscc; ++k) renum[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

  comp_of.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    comp_of[static_cast<std::size_t>(v)] = renum[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  members.assign(static_cast<std::size_t>(nscc), {});
  for (int k = 0; k < nscc; ++k)
    members[static_cast<std::size_t>(k)] = mem[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
  comp_edges.clear();
  for (auto [a, b] : ce)
    comp_edges.emplace_back(renum[static_cast<std::size_t>(a)], renum[static_cast<std::size_t>(b)]);
  std::sort(comp_edges.begin(), comp_edges.end());
}

}  // namespace aft

#endif
