// Copyright 2026 the aftkit authors

#include "strat/poset.hpp"

#include <stdexcept>

#include "common/error.hpp"

namespace aft::strat {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq_[static_cast<std::size_t>(i) * n + i] = 1;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("poset edge index out of range");
    leq_[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq_[static_cast<std::size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq_[static_cast<std::size_t>(k) * n + j])
            leq_[static_cast<std::size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (leq(i, j) && leq(j, i))
        throw ValidationError("stratum order has a cycle through indices " +
                              std::to_string(j) + " and " + std::to_string(i));
  // Kahn linearization, smallest index first for determinism.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt(i, j)) ++indeg[static_cast<std::size_t>(j)];
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  for (int picked = 0; picked < n; ++picked) {
    int next = -1;
    for (int i = 0; i < n; ++i)
      if (!done[static_cast<std::size_t>(i)] && indeg[static_cast<std::size_t>(i)] == 0) {
        next = i;
        break;
      }
    if (next < 0) throw ValidationError("stratum order has a cycle");
    done[static_cast<std::size_t>(next)] = 1;
    topo_.push_back(next);
    for (int j = 0; j < n; ++j)
      if (lt(next, j)) --indeg[static_cast<std::size_t>(j)];
  }
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Poset(n, e);
}

Poset Poset::antichain(int n) { return Poset(n, {}); }

std::vector<int> Poset::below(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (lt(j, i)) out.push_back(j);
  return out;
}

}  // namespace aft::strat
