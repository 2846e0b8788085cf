#pragma once

#include <cstddef>
#include <vector>

#include "profinito/presentation.hpp"
#include "profinito/toddcoxeter.hpp"

namespace profinito {

inline constexpr std::size_t kMaxLowIndex = 64;
inline constexpr std::size_t kDefaultLowIndex = 16;

struct LowIndexOptions {
  /// Prune every branch whose partial table already shows that the coset
  /// stabilizers differ, so only normal subgroups are reported.
  bool normal_only = false;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  std::size_t threads = 1;
};

/// One standardized coset table per conjugacy class of subgroups of index at
/// most `max_index`, each the lexicographically least table of its class.
/// Sorted by index, then entries. Throws LimitExceeded unless
/// 1 <= max_index <= kMaxLowIndex.
[[nodiscard]] std::vector<CosetTable> low_index_subgroups(GroupPresentation const& pres,
                                                          std::size_t max_index,
                                                          LowIndexOptions const& options = {});

/// True iff the coset action is regular, i.e. the stabilizer of coset 0 is
/// normal. Requires a complete table.
[[nodiscard]] bool is_normal(CosetTable const& t);

}  // namespace profinito
