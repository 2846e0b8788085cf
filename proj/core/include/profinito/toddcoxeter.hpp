#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "profinito/finitegroups.hpp"
#include "profinito/presentation.hpp"

namespace profinito {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Action of the generators on the cosets of a subgroup. Cosets and letters
/// are 0-based here (coset 0 is the subgroup itself); letter 2g is generator
/// g and 2g+1 its inverse. Text dumps use 1-based coset numbers.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t num_generators, std::size_t num_cosets, std::vector<std::int32_t> entries,
             std::vector<Word> subgroup_gens = {});

  [[nodiscard]] std::size_t num_cosets() const noexcept { return num_cosets_; }
  [[nodiscard]] std::size_t num_generators() const noexcept { return num_generators_; }
  [[nodiscard]] std::size_t num_letters() const noexcept { return 2 * num_generators_; }
  [[nodiscard]] std::int32_t operator()(std::size_t coset, std::size_t letter) const {
    return entries_[coset * num_letters() + letter];
  }
  [[nodiscard]] std::vector<std::int32_t> const& entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<Word> const& subgroup_gens() const noexcept { return subgroup_gens_; }

  /// Every entry defined.
  [[nodiscard]] bool is_complete() const noexcept;

  /// table(c, x) = d implies table(d, x^-1) = c.
  [[nodiscard]] bool is_involution_consistent() const noexcept;

  /// Coset reached from `coset` along `w`, or nullopt at an undefined entry.
  [[nodiscard]] std::optional<std::size_t> trace(std::size_t coset, Word const& w) const;

  /// Every relator fixes every coset.
  [[nodiscard]] bool satisfies_relators(GroupPresentation const& pres) const;

  /// Every subgroup generator fixes coset 0.
  [[nodiscard]] bool satisfies_subgroup() const;

  /// Relabels cosets in breadth-first order from coset 0 over the fixed
  /// letter order. Requires a complete, connected table.
  [[nodiscard]] CosetTable standardized() const;

  friend bool operator==(CosetTable const& a, CosetTable const& b) {
    return a.num_generators_ == b.num_generators_ && a.num_cosets_ == b.num_cosets_ &&
           a.entries_ == b.entries_;
  }
  /// Index first, then the entries row by row.
  friend std::strong_ordering operator<=>(CosetTable const& a, CosetTable const& b);

 private:
  std::size_t num_generators_ = 0;
  std::size_t num_cosets_ = 0;
  std::vector<std::int32_t> entries_;
  std::vector<Word> subgroup_gens_;
};

/// One line per coset; tab-separated 1-based targets in letter order
/// (g0, g0^-1, g1, g1^-1, ...), "0" for undefined.
[[nodiscard]] std::string dump(CosetTable const& t);

/// Hasse-Lee-Trotter enumeration with union-find coincidence handling.
/// Returns the standardized table of the subgroup generated by `subgroup`.
/// Throws CapacityExceeded once more than `max_cosets` cosets have been
/// defined; that outcome does not imply infinite index.
[[nodiscard]] CosetTable coset_enumerate(GroupPresentation const& pres, std::vector<Word> const& subgroup,
                                         std::size_t max_cosets = kDefaultMaxCosets);

/// One permutation per generator, g -> (c -> table(c, g)). Throws
/// PreconditionError for incomplete tables.
[[nodiscard]] std::vector<Permutation> permutation_action(CosetTable const& t);

/// Builds the standardized table of a transitive action given by generator
/// images.
[[nodiscard]] CosetTable table_from_action(std::vector<Permutation> const& images);

}  // namespace profinito
