#include "profinito/abelianization.hpp"

#include <limits>
#include <optional>
#include <utility>

#include "profinito/errors.hpp"

namespace profinito {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void sub_row(IntMatrix& a, std::size_t i, std::size_t j, BigInt const& q, std::size_t from) {
  for (std::size_t c = from; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

void sub_col(IntMatrix& a, std::size_t i, std::size_t j, BigInt const& q, std::size_t from) {
  for (std::size_t r = from; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
}

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing submatrix, first in row-major order.
std::optional<Position> find_pivot(IntMatrix const& a, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      BigInt const v = abs(a(r, c));
      if (!best || v < best_abs) {
        best = Position{r, c};
        best_abs = v;
      }
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t / column t beyond the diagonal.
std::optional<Position> find_cross_pivot(IntMatrix const& a, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs = abs(a(t, t));
  for (std::size_t r = t + 1; r < a.rows(); ++r) {
    if (a(r, t) != 0 && abs(a(r, t)) < best_abs) {
      best = Position{r, t};
      best_abs = abs(a(r, t));
    }
  }
  for (std::size_t c = t + 1; c < a.cols(); ++c) {
    if (a(t, c) != 0 && abs(a(t, c)) < best_abs) {
      best = Position{t, c};
      best_abs = abs(a(t, c));
    }
  }
  return best;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw PreconditionError("matrix entry count does not match shape");
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm out;
  std::size_t const limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = find_pivot(a, t);
    if (!pivot) break;
    swap_rows(a, t, pivot->row);
    swap_cols(a, t, pivot->col);
    while (true) {
      // Clear column t and row t; remainders smaller than the pivot become
      // the next pivot.
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) != 0) sub_row(a, r, t, a(r, t) / a(t, t), t);
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) != 0) sub_col(a, c, t, a(t, c) / a(t, t), t);
      }
      if (auto next = find_cross_pivot(a, t)) {
        swap_rows(a, t, next->row);
        swap_cols(a, t, next->col);
        continue;
      }
      // Row and column clear. Enforce d_t | every trailing entry.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < a.rows() && !bad_row; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (!bad_row) break;
      for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(*bad_row, c);
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
    out.factors.push_back(a(t, t));
  }
  out.free_rank = a.cols() - out.factors.size();
  return out;
}

AbelianInvariants to_invariants(SmithForm const& snf) {
  AbelianInvariants inv;
  inv.free_rank = snf.free_rank;
  for (auto const& d : snf.factors) {
    if (d == 1) continue;
    if (d > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("invariant factor " + d.str() + " does not fit in 64 bits");
    }
    inv.torsion.push_back(static_cast<std::int64_t>(d));
  }
  return inv;
}

IntMatrix relation_matrix(GroupPresentation const& pres) {
  IntMatrix m(pres.relators().size(), pres.num_generators());
  for (std::size_t r = 0; r < pres.relators().size(); ++r) {
    for (auto const& s : pres.relators()[r].syllables()) m(r, s.generator) += s.exponent;
  }
  return m;
}

AbelianInvariants abelianize(GroupPresentation const& pres) {
  return to_invariants(smith_normal_form(relation_matrix(pres)));
}

std::string to_string(AbelianInvariants const& inv) {
  std::string out;
  if (inv.free_rank == 1) {
    out = "Z";
  } else if (inv.free_rank > 1) {
    out = "Z^" + std::to_string(inv.free_rank);
  }
  for (auto d : inv.torsion) {
    if (!out.empty()) out += " x ";
    out += "Z" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace profinito
