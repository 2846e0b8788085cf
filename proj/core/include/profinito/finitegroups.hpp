#pragma once

// Finite permutation groups small enough to list element by element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profinito/abelianization.hpp"
#include "profinito/presentation.hpp"

namespace profinito {

inline constexpr std::size_t kDefaultOrderCap = 100'000;
inline constexpr std::size_t kIsomorphismOrderCap = 4096;

/// Permutation of {0, ..., degree-1} stored as its image list. Products act
/// on the right: (p * q)(x) = q(p(x)), matching coset-table conventions.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  [[nodiscard]] static Permutation identity(std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  [[nodiscard]] std::vector<std::uint32_t> const& images() const noexcept { return images_; }
  [[nodiscard]] bool is_identity() const noexcept;

  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] Permutation pow(std::int64_t k) const;

  friend Permutation operator*(Permutation const& p, Permutation const& q);

  auto operator<=>(Permutation const&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

/// One-line notation with 1-based points, e.g. "[2 3 1]".
[[nodiscard]] std::string to_string(Permutation const& p);

/// Evaluates a word with generator g sent to images[g].
[[nodiscard]] Permutation evaluate(Word const& w, std::vector<Permutation> const& images,
                                   std::size_t degree);

class PermGroup {
 public:
  /// Throws PreconditionError if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> gens);

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::vector<Permutation> const& gens() const noexcept { return gens_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

/// All elements, sorted by one-line notation. Throws LimitExceeded once more
/// than `cap` elements are found.
[[nodiscard]] std::vector<Permutation> elements(PermGroup const& g, std::size_t cap = kDefaultOrderCap);

/// Group order, or nullopt as soon as it exceeds `bound`.
[[nodiscard]] std::optional<std::size_t> order_up_to(PermGroup const& g, std::size_t bound);

/// Multiplication table of a finite group on indices 0..order-1. Index 0 is
/// the identity; indices follow the sorted element list.
class CayleyTable {
 public:
  explicit CayleyTable(PermGroup const& g, std::size_t cap = kIsomorphismOrderCap);

  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return table_[static_cast<std::size_t>(x) * order() + y];
  }
  [[nodiscard]] std::uint32_t inv(std::uint32_t x) const { return inverse_[x]; }
  [[nodiscard]] std::uint32_t element_order(std::uint32_t x) const { return element_orders_[x]; }
  [[nodiscard]] std::uint32_t power(std::uint32_t x, std::int64_t k) const;
  [[nodiscard]] Permutation const& element(std::uint32_t x) const { return elements_[x]; }
  /// Indices of the group's generators.
  [[nodiscard]] std::vector<std::uint32_t> const& generators() const noexcept { return gen_index_; }
  [[nodiscard]] std::uint32_t index_of(Permutation const& p) const;

  /// Subgroup generated by `gens`, as a sorted index list.
  [[nodiscard]] std::vector<std::uint32_t> subgroup(std::vector<std::uint32_t> const& gens) const;

 private:
  std::vector<Permutation> elements_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_orders_;
  std::vector<std::uint32_t> gen_index_;
};

/// Isomorphism invariants used to screen and sort groups.
struct IsoClassKey {
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> element_order_histogram;
  AbelianInvariants abelian_invariants;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> conj_class_sizes;

  bool operator==(IsoClassKey const&) const = default;
};

/// Total order on keys: order, abelianization, center, derived subgroup,
/// class sizes, then the element-order histogram read from the largest
/// element order down (fewer elements of high order sorts first).
std::strong_ordering operator<=>(IsoClassKey const& a, IsoClassKey const& b);

[[nodiscard]] IsoClassKey iso_key(CayleyTable const& g);
[[nodiscard]] IsoClassKey iso_key(PermGroup const& g);

/// An explicit isomorphism g -> h as a map on CayleyTable indices, or
/// nullopt if none exists.
[[nodiscard]] std::optional<std::vector<std::uint32_t>> find_isomorphism(CayleyTable const& g,
                                                                        CayleyTable const& h);

/// Throws LimitExceeded if either order exceeds kIsomorphismOrderCap.
[[nodiscard]] bool are_isomorphic(PermGroup const& g, PermGroup const& h);
[[nodiscard]] bool are_isomorphic(CayleyTable const& g, CayleyTable const& h);

}  // namespace profinito
