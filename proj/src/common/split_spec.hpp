// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_SPLIT_SPEC_HPP
#define AFT_COMMON_SPLIT_SPEC_HPP

#include <string>
#include <utility>
#include <vector>

namespace aft {

/// A user-declared stratification, as written: named strata with atom lists
/// and order constraints.  Engines validate and materialize it.
struct SplitSpec {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> atoms;
  std::vector<std::pair<std::string, std::string>> order;  // first < second
};

}  // namespace aft

#endif
