// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_ALPHABET_HPP
#define AFT_COMMON_ALPHABET_HPP

#include <map>
#include <string>
#include <vector>

#include "common/error.hpp"

namespace aft {

/// Ordered atom table.  Atom ids follow first occurrence, which fixes the
/// bitmask layout and every deterministic output order.
class Alphabet {
public:
  int intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  /// Id of a known atom; throws if the atom was never declared.
  int find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown atom '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

}  // namespace aft

#endif
