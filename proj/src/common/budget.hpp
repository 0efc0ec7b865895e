// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_BUDGET_HPP
#define AFT_COMMON_BUDGET_HPP

#include <cstdint>
#include <cstdlib>

namespace aft {

/// Hard resource limits for oracle-scale enumeration.  Exceeding a budget is
/// an error, never a silent truncation.
struct Budget {
  std::uint64_t max_universe = 1ull << 20;
  std::uint64_t max_steps = 1ull << 20;

  /// Default budget, honoring the AFTKIT_BUDGET environment variable.
  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("AFTKIT_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && v > 0) b.max_universe = v;
    }
    return b;
  }
};

/// Saturating multiply used for universe-size bookkeeping.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > ~0ull / b) return ~0ull;
  return a * b;
}

/// 2^n, saturating at 2^64-1.
inline std::uint64_t sat_pow2(std::uint64_t n) { return n >= 64 ? ~0ull : 1ull << n; }

}  // namespace aft

#endif
