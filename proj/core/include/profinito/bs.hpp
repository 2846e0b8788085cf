#pragma once

// Baumslag-Solitar groups BS(m,n) = < a, t | t a^m t^-1 = a^n >: normal
// forms, residual finiteness, abelianization, and the profinite
// classification of the residually finite members with certificates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "profinito/abelianization.hpp"
#include "profinito/errors.hpp"
#include "profinito/fingerprint.hpp"
#include "profinito/presentation.hpp"

namespace profinito {

/// Raised when a classification is asked of a group outside the residually
/// finite family (m = 1 or m = +-n after normalization).
class NotResiduallyFinite : public Error {
 public:
  explicit NotResiduallyFinite(BSParams const& p)
      : Error(to_string(p) + " is not residually finite (BS(m,n) is residually finite iff, "
                             "normalized to 1 <= m <= |n|, m = 1 or m = |n|)"),
        params_(p) {}

  [[nodiscard]] BSParams const& params() const noexcept { return params_; }

 private:
  BSParams params_;
};

/// The representative of {(m,n), (n,m), (-m,-n), (-n,-m)} with 1 <= m <= |n|.
/// When several qualify, n >= 0 wins, then m <= n.
[[nodiscard]] BSParams canonicalize(BSParams const& p);

[[nodiscard]] bool is_residually_finite(BSParams const& p);

/// Z x Z_|m-n|, read as Z^2 when m = n.
[[nodiscard]] AbelianInvariants closed_form_abelianization(BSParams const& p);

/// Same canonical form. Throws NotResiduallyFinite outside the RF family.
[[nodiscard]] bool bs_isomorphic(BSParams const& p, BSParams const& q);

/// Isomorphic profinite completions. Within the RF family this coincides
/// with isomorphism. Throws NotResiduallyFinite outside it.
[[nodiscard]] bool profinitely_isomorphic(BSParams const& p, BSParams const& q);

/// Outcome of an exhaustive search for epimorphisms onto one finite group.
struct EpimorphismReport {
  std::size_t target_order = 0;
  std::uint64_t assignments_checked = 0;
  /// Assignments satisfying every relator.
  std::uint64_t homomorphisms = 0;
  /// Homomorphisms whose image is the whole group.
  std::uint64_t epimorphisms = 0;
};

/// Tries every assignment of the presentation's generators to elements of
/// `target`. Throws LimitExceeded when there are more than 2^32 assignments.
[[nodiscard]] EpimorphismReport search_epimorphisms(GroupPresentation const& pres, CayleyTable const& target);

struct AbelianWitness {
  AbelianInvariants first;
  AbelianInvariants second;
};

/// A finite quotient of exactly one of the two groups.
struct QuotientWitness {
  /// 0 if the quotient belongs to the first group, 1 for the second.
  std::size_t quotient_of = 0;
  IsoClassKey key;
  FiniteQuotient quotient;
  /// Exhaustive search showing the other group has no epimorphism onto it.
  EpimorphismReport non_lifting;
};

struct Inconclusive {
  std::size_t max_order = 0;
};

using Certificate = std::variant<AbelianWitness, QuotientWitness, Inconclusive>;

struct CertifyOptions {
  std::size_t threads = 1;
};

/// Certifies that two RF groups with different canonical forms have
/// different finite quotients: an abelianization mismatch if there is one,
/// otherwise the smallest separating quotient of order <= max_order (ordered
/// by order, then key), otherwise Inconclusive. Throws NotResiduallyFinite,
/// or PreconditionError if the groups are isomorphic.
[[nodiscard]] Certificate certify_distinction(BSParams const& p, BSParams const& q, std::size_t max_order,
                                              CertifyOptions const& options = {});

}  // namespace profinito
