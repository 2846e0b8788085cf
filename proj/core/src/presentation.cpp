#include "profinito/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <set>
#include <utility>

#include "profinito/errors.hpp"

namespace profinito {

namespace {

constexpr std::int64_t kMaxExpandedLetters = 1'000'000;
constexpr std::int64_t kMaxExponent = 1'000'000'000;

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool valid_name(std::string_view s) {
  return !s.empty() && is_name_start(s.front()) && std::all_of(s.begin(), s.end(), is_name_char);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupPresentation presentation() {
    expect('<', "'<'");
    std::vector<std::string> gens;
    std::vector<std::size_t> gen_pos;
    skip_ws();
    if (peek() == '|') fail("generator name");
    while (true) {
      skip_ws();
      std::size_t const start = pos_;
      std::string name = identifier("generator name");
      for (auto const& g : gens) {
        if (g == name) throw ParseError(start, "duplicate generator '" + name + "'");
      }
      gens.push_back(std::move(name));
      gen_pos.push_back(start);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (gens.size() > kMaxGenerators) {
      throw ParseError(gen_pos[kMaxGenerators],
                       "more than " + std::to_string(kMaxGenerators) + " generators");
    }
    expect('|', "',' or '|'");
    gens_ = &gens;
    std::vector<Word> relators;
    skip_ws();
    if (peek() != '>') {
      while (true) {
        relators.push_back(word(",>"));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>', "',' or '>'");
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return GroupPresentation(std::move(gens), std::move(relators));
  }

  Word standalone_word(std::vector<std::string> const& gens) {
    gens_ = &gens;
    skip_ws();
    if (pos_ == text_.size()) return Word{};
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("end of input");
      return Word{};
    }
    Word w = word("");
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return w;
  }

 private:
  [[noreturn]] void fail(std::string const& expected) const {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(pos_, "expected " + expected + ", found " + found);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  void expect(char c, char const* what) {
    skip_ws();
    if (peek() != c) fail(what);
    ++pos_;
  }

  std::string identifier(char const* what) {
    if (!is_name_start(peek())) fail(what);
    std::size_t const start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Resolves a single name piece: a generator, or the uppercase shorthand
  // for the inverse of a generator that is not itself a declared name.
  std::optional<Syllable> resolve(std::string_view piece) const {
    auto const& gens = *gens_;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] == piece) return Syllable{i, 1};
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (upper(gens[i]) == piece && gens[i] != piece) return Syllable{i, -1};
    }
    return std::nullopt;
  }

  // Splits an identifier token into generator pieces by longest match.
  std::vector<Syllable> split(std::string_view token, std::size_t start) const {
    std::vector<Syllable> out;
    std::size_t i = 0;
    while (i < token.size()) {
      std::size_t best = 0;
      Syllable best_syl;
      for (std::size_t len = token.size() - i; len > 0; --len) {
        if (auto s = resolve(token.substr(i, len))) {
          best = len;
          best_syl = *s;
          break;
        }
      }
      if (best == 0) {
        throw ParseError(start + i, "unknown generator in '" + std::string(token) + "'");
      }
      out.push_back(best_syl);
      i += best;
    }
    return out;
  }

  std::int64_t exponent() {
    skip_ws();
    std::size_t const start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    std::size_t const digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])) != 0) ++end;
    if (end == digits) fail("integer exponent");
    std::int64_t value = 0;
    char const* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end) {
      throw ParseError(start, "exponent out of range");
    }
    if (value == 0) throw ParseError(start, "zero exponent");
    if (value > kMaxExponent || value < -kMaxExponent) {
      throw ParseError(start, "exponent out of range");
    }
    pos_ = end;
    return value;
  }

  Word word(std::string_view terminators) {
    std::vector<Syllable> syl;
    skip_ws();
    if (!is_name_start(peek())) fail("word");
    while (true) {
      skip_ws();
      char const c = peek();
      if (c == '\0' || terminators.find(c) != std::string_view::npos) break;
      std::size_t const start = pos_;
      std::string token = identifier("generator name");
      auto pieces = split(token, start);
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        std::int64_t const k = exponent();
        auto& last = pieces.back();
        last.exponent *= k;
      }
      syl.insert(syl.end(), pieces.begin(), pieces.end());
    }
    return Word(std::move(syl));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> const* gens_ = nullptr;
};

void append_syllable(std::string& out, Syllable const& s, GroupPresentation const& pres) {
  out += pres.generators()[s.generator];
  if (s.exponent != 1) {
    out += '^';
    out += std::to_string(s.exponent);
  }
}

}  // namespace

std::int64_t Word::length() const noexcept {
  std::int64_t total = 0;
  for (auto const& s : syllables_) total += s.exponent < 0 ? -s.exponent : s.exponent;
  return total;
}

std::int64_t Word::exponent_sum(std::size_t generator) const noexcept {
  std::int64_t total = 0;
  for (auto const& s : syllables_) {
    if (s.generator == generator) total += s.exponent;
  }
  return total;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.push_back({it->generator, -it->exponent});
  }
  return Word(std::move(out));
}

std::vector<std::size_t> Word::letters() const {
  if (length() > kMaxExpandedLetters) {
    throw LimitExceeded("word has more than " + std::to_string(kMaxExpandedLetters) + " letters");
  }
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (auto const& s : syllables_) {
    std::size_t const letter = 2 * s.generator + (s.exponent < 0 ? 1 : 0);
    std::int64_t const k = s.exponent < 0 ? -s.exponent : s.exponent;
    out.insert(out.end(), static_cast<std::size_t>(k), letter);
  }
  return out;
}

Word free_reduce(Word const& w) {
  // Stack-based: each incoming syllable merges with the top when the
  // generator matches; a zero result pops and may expose another match.
  std::vector<Syllable> stack;
  stack.reserve(w.size());
  for (auto const& s : w.syllables()) {
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(Word const& w) {
  std::vector<Syllable> syl = free_reduce(w).syllables();
  std::size_t first = 0;
  std::size_t last = syl.size();
  while (last - first >= 2 && syl[first].generator == syl[last - 1].generator) {
    std::int64_t const e = syl[first].exponent + syl[last - 1].exponent;
    if (e == 0) {
      ++first;
      --last;
    } else {
      syl[first].exponent = e;
      --last;
      break;
    }
  }
  return Word(std::vector<Syllable>(syl.begin() + static_cast<std::ptrdiff_t>(first),
                                    syl.begin() + static_cast<std::ptrdiff_t>(last)));
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw PreconditionError("a presentation needs at least one generator");
  if (generators_.size() > kMaxGenerators) {
    throw LimitExceeded("more than " + std::to_string(kMaxGenerators) + " generators");
  }
  std::set<std::string_view> seen;
  for (auto const& g : generators_) {
    if (!valid_name(g)) throw PreconditionError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw PreconditionError("duplicate generator '" + g + "'");
  }
  for (auto const& r : relators) {
    for (auto const& s : r.syllables()) {
      if (s.generator >= generators_.size()) {
        throw PreconditionError("relator uses generator index " + std::to_string(s.generator) +
                                " out of range");
      }
    }
    Word reduced = cyclic_reduce(r);
    if (reduced.size() > kMaxRelatorSyllables) {
      throw LimitExceeded("relator longer than " + std::to_string(kMaxRelatorSyllables) +
                          " syllables");
    }
    if (reduced.empty()) {
      ++dropped_;
    } else {
      relators_.push_back(std::move(reduced));
    }
  }
}

std::size_t GroupPresentation::find_generator(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return i;
  }
  return generators_.size();
}

BSParams::BSParams(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) throw PreconditionError("Baumslag-Solitar parameters must be nonzero");
}

std::string to_string(BSParams const& p) {
  return "BS(" + std::to_string(p.m()) + "," + std::to_string(p.n()) + ")";
}

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, GroupPresentation const& pres) {
  return free_reduce(Parser(text).standalone_word(pres.generators()));
}

GroupPresentation bs_presentation(BSParams const& p) {
  Word relator({{1, 1}, {0, p.m()}, {1, -1}, {0, -p.n()}});
  return GroupPresentation({"a", "t"}, {relator});
}

std::string to_string(Word const& w, GroupPresentation const& pres) {
  if (w.empty()) return "1";
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    append_syllable(out, s, pres);
  }
  return out;
}

std::string to_string(GroupPresentation const& pres) {
  std::string out = "< ";
  for (std::size_t i = 0; i < pres.num_generators(); ++i) {
    if (i > 0) out += ", ";
    out += pres.generators()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    out += i > 0 ? ", " : " ";
    out += to_string(pres.relators()[i], pres);
  }
  out += " >";
  return out;
}

}  // namespace profinito
