// Copyright 2026 the aftkit authors

#ifndef AFT_STRAT_POSET_HPP
#define AFT_STRAT_POSET_HPP

#include <string>
#include <vector>

namespace aft::strat {

/// Finite poset of stratum indices.  Stores the reflexive-transitive order
/// and a cached topological linearization; construction validates that the
/// closure of the given edges is antisymmetric.
class Poset {
public:
  Poset() = default;
  /// `edges` are covers or any generating relation i < j.
  Poset(int n, const std::vector<std::pair<int, int>>& edges);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return n_; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j]; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }

  const std::vector<int>& topo_order() const { return topo_; }
  /// Strict predecessors of i, ascending.
  std::vector<int> below(int i) const;

  /// True if `in_set(j)` holds for every j below any member.
  template <class Pred>
  bool downward_closed(Pred in_set) const {
    for (int i = 0; i < n_; ++i)
      if (in_set(i))
        for (int j = 0; j < n_; ++j)
          if (lt(j, i) && !in_set(j)) return false;
    return true;
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
  int n_ = 0;
  std::vector<char> leq_;  // row-major reflexive-transitive matrix
  std::vector<int> topo_;
};

}  // namespace aft::strat

#endif
