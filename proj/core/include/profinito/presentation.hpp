#pragma once

// Finitely presented groups: words over a generating set, presentations,
// the text grammar `< gens | relators >`, and the Baumslag-Solitar family.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace profinito {

inline constexpr std::size_t kMaxGenerators = 64;
inline constexpr std::size_t kMaxRelatorSyllables = 10'000;

/// `generator^exponent`, with a 0-based generator index.
struct Syllable {
  std::size_t generator = 0;
  std::int64_t exponent = 0;

  auto operator<=>(Syllable const&) const = default;
};

/// A word in the free group. Construction does not reduce; use free_reduce().
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  [[nodiscard]] std::vector<Syllable> const& syllables() const noexcept { return syllables_; }
  [[nodiscard]] bool empty() const noexcept { return syllables_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return syllables_.size(); }

  /// Sum of |exponent| over all syllables, i.e. the length as a letter string.
  [[nodiscard]] std::int64_t length() const noexcept;

  /// Exponent sum of one generator.
  [[nodiscard]] std::int64_t exponent_sum(std::size_t generator) const noexcept;

  [[nodiscard]] Word inverse() const;

  /// Letters in the coset-table alphabet: generator g is letter 2g, its
  /// inverse is 2g+1.
  [[nodiscard]] std::vector<std::size_t> letters() const;

  auto operator<=>(Word const&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Freely reduced form: merges neighbouring syllables of the same generator
/// and drops zero exponents. Idempotent.
[[nodiscard]] Word free_reduce(Word const& w);

/// Free reduction followed by cancelling/merging the first and last
/// syllables. The result is a cyclic conjugate of free_reduce(w).
[[nodiscard]] Word cyclic_reduce(Word const& w);

/// Letter index of the inverse letter.
[[nodiscard]] constexpr std::size_t inverse_letter(std::size_t letter) noexcept {
  return letter ^ 1U;
}

class GroupPresentation {
 public:
  /// Validates names and generator indices, then freely and cyclically
  /// reduces each relator. Relators that reduce to the empty word are
  /// dropped and counted in dropped_relators().
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  [[nodiscard]] std::vector<std::string> const& generators() const noexcept { return generators_; }
  [[nodiscard]] std::vector<Word> const& relators() const noexcept { return relators_; }
  [[nodiscard]] std::size_t num_generators() const noexcept { return generators_.size(); }
  [[nodiscard]] std::size_t dropped_relators() const noexcept { return dropped_; }

  /// Index of a generator name, or num_generators() if absent.
  [[nodiscard]] std::size_t find_generator(std::string_view name) const noexcept;

  /// Structural equality (generator names and reduced relators).
  friend bool operator==(GroupPresentation const& a, GroupPresentation const& b) {
    return a.generators_ == b.generators_ && a.relators_ == b.relators_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::size_t dropped_ = 0;
};

/// Parameters of BS(m,n) = < a, t | t a^m t^-1 = a^n >.
class BSParams {
 public:
  /// Throws PreconditionError if m or n is zero.
  BSParams(std::int64_t m, std::int64_t n);

  [[nodiscard]] std::int64_t m() const noexcept { return m_; }
  [[nodiscard]] std::int64_t n() const noexcept { return n_; }

  auto operator<=>(BSParams const&) const = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

/// "BS(m,n)"
[[nodiscard]] std::string to_string(BSParams const& p);

/// Parses `< g1, g2 | w1, w2 >`. Throws ParseError with the byte offset of
/// the first problem.
[[nodiscard]] GroupPresentation parse_presentation(std::string_view text);

/// Parses one word over the generators of `pres` using the same word syntax
/// as parse_presentation. The empty string (or "1") is the empty word. The
/// result is freely reduced.
[[nodiscard]] Word parse_word(std::string_view text, GroupPresentation const& pres);

/// Generators [a, t], single relator t a^m t^-1 a^-n.
[[nodiscard]] GroupPresentation bs_presentation(BSParams const& p);

/// Canonical text form, e.g. "< a, t | t a^2 t^-1 a^-2 >".
[[nodiscard]] std::string to_string(GroupPresentation const& pres);

/// Word in canonical syllable notation, "1" for the empty word.
[[nodiscard]] std::string to_string(Word const& w, GroupPresentation const& pres);

}  // namespace profinito
