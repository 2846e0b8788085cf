#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "profinito/presentation.hpp"

namespace profinito {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  BigInt const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] IntMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Diagonal of the Smith normal form of a relation matrix, read as a map
/// Z^rows -> Z^cols. `factors` holds every nonzero diagonal entry including
/// units, so factors.size() is the rank.
struct SmithForm {
  std::vector<BigInt> factors;
  std::size_t free_rank = 0;
};

/// Invariant factors d_1 | d_2 | ... with each d_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  auto operator<=>(AbelianInvariants const&) const = default;
};

/// Z^k x Z_d1 x ... as text: "Z^2", "Z x Z4", "Z6", "0" for the trivial group.
[[nodiscard]] std::string to_string(AbelianInvariants const& inv);

/// Smith normal form by elementary row and column operations. Pivots are the
/// smallest nonzero absolute value, ties broken by row-major position.
[[nodiscard]] SmithForm smith_normal_form(IntMatrix a);

/// Drops unit factors. Throws OverflowError if a factor exceeds int64.
[[nodiscard]] AbelianInvariants to_invariants(SmithForm const& snf);

/// Relators x generators matrix of exponent sums.
[[nodiscard]] IntMatrix relation_matrix(GroupPresentation const& pres);

/// Invariants of G/[G,G].
[[nodiscard]] AbelianInvariants abelianize(GroupPresentation const& pres);

}  // namespace profinito
