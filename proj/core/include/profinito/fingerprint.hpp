#pragma once

// Truncated sets of finite quotients: every isomorphism type of quotient of
// order at most N, each with an explicit epimorphism as representative.

#include <cstddef>
#include <string>
#include <vector>

#include "profinito/finitegroups.hpp"
#include "profinito/presentation.hpp"
#include "profinito/toddcoxeter.hpp"

namespace profinito {

inline constexpr std::size_t kMaxFingerprintOrder = 64;

/// G/K realised as the regular action of G on the cosets of K.
class FiniteQuotient {
 public:
  /// Throws PreconditionError unless the table is complete, regular and
  /// satisfies the relators of `pres`.
  FiniteQuotient(GroupPresentation const& pres, CosetTable source_table);

  [[nodiscard]] std::size_t order() const noexcept { return source_table_.num_cosets(); }
  [[nodiscard]] PermGroup const& group() const noexcept { return group_; }
  /// Image of each presentation generator, in generator order.
  [[nodiscard]] std::vector<Permutation> const& gen_images() const noexcept { return group_.gens(); }
  [[nodiscard]] CosetTable const& source_table() const noexcept { return source_table_; }

 private:
  CosetTable source_table_;
  PermGroup group_;
};

struct FingerprintClass {
  IsoClassKey key;
  FiniteQuotient representative;
};

struct Fingerprint {
  GroupPresentation presentation;
  std::size_t max_order = 0;
  /// Sorted by key; pairwise non-isomorphic.
  std::vector<FingerprintClass> classes;
};

struct FingerprintOptions {
  std::size_t threads = 1;
};

/// Throws LimitExceeded for max_order outside [1, kMaxFingerprintOrder].
[[nodiscard]] Fingerprint compute_fingerprint(GroupPresentation const& pres, std::size_t max_order,
                                              FingerprintOptions const& options = {});

struct FingerprintDiff {
  std::vector<FingerprintClass> only_first;
  std::vector<FingerprintClass> only_second;
  std::size_t common_count = 0;
};

/// Matches classes across two fingerprints by certified isomorphism. Throws
/// PreconditionError when the max orders differ.
[[nodiscard]] FingerprintDiff diff_fingerprints(Fingerprint const& f, Fingerprint const& g);

/// Whether some class of `f` is isomorphic to `q`.
[[nodiscard]] bool contains_isomorphic(Fingerprint const& f, FiniteQuotient const& q);

}  // namespace profinito
