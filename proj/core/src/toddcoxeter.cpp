#include "profinito/toddcoxeter.hpp"

#include <algorithm>
#include <utility>

#include "profinito/errors.hpp"

namespace profinito {

// ---------------------------------------------------------------------------
// CosetTable
// ---------------------------------------------------------------------------

CosetTable::CosetTable(std::size_t num_generators, std::size_t num_cosets,
                       std::vector<std::int32_t> entries, std::vector<Word> subgroup_gens)
    : num_generators_(num_generators),
      num_cosets_(num_cosets),
      entries_(std::move(entries)),
      subgroup_gens_(std::move(subgroup_gens)) {
  if (entries_.size() != num_cosets_ * num_letters()) {
    throw PreconditionError("coset table entry count does not match its shape");
  }
  for (auto e : entries_) {
    if (e != kUndefined && (e < 0 || static_cast<std::size_t>(e) >= num_cosets_)) {
      throw PreconditionError("coset table entry out of range");
    }
  }
}

bool CosetTable::is_complete() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(), [](auto e) { return e == kUndefined; });
}

bool CosetTable::is_involution_consistent() const noexcept {
  for (std::size_t c = 0; c < num_cosets_; ++c) {
    for (std::size_t x = 0; x < num_letters(); ++x) {
      auto const d = (*this)(c, x);
      if (d == kUndefined) continue;
      if ((*this)(static_cast<std::size_t>(d), inverse_letter(x)) != static_cast<std::int32_t>(c)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> CosetTable::trace(std::size_t coset, Word const& w) const {
  std::size_t c = coset;
  for (auto x : w.letters()) {
    auto const d = (*this)(c, x);
    if (d == kUndefined) return std::nullopt;
    c = static_cast<std::size_t>(d);
  }
  return c;
}

bool CosetTable::satisfies_relators(GroupPresentation const& pres) const {
  if (pres.num_generators() != num_generators_) return false;
  for (auto const& r : pres.relators()) {
    for (std::size_t c = 0; c < num_cosets_; ++c) {
      if (trace(c, r) != c) return false;
    }
  }
  return true;
}

bool CosetTable::satisfies_subgroup() const {
  return std::all_of(subgroup_gens_.begin(), subgroup_gens_.end(),
                     [&](Word const& w) { return num_cosets_ > 0 && trace(0, w) == 0U; });
}

CosetTable CosetTable::standardized() const {
  std::size_t const letters = num_letters();
  std::vector<std::int32_t> relabel(num_cosets_, kUndefined);
  std::vector<std::size_t> order{0};
  relabel[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t x = 0; x < letters; ++x) {
      auto const d = (*this)(order[head], x);
      if (d == kUndefined) throw PreconditionError("cannot standardize an incomplete coset table");
      if (relabel[static_cast<std::size_t>(d)] == kUndefined) {
        relabel[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(static_cast<std::size_t>(d));
      }
    }
  }
  if (order.size() != num_cosets_) throw PreconditionError("coset table is not connected");
  std::vector<std::int32_t> out(entries_.size());
  for (std::size_t c = 0; c < num_cosets_; ++c) {
    for (std::size_t x = 0; x < letters; ++x) {
      out[c * letters + x] = relabel[static_cast<std::size_t>((*this)(order[c], x))];
    }
  }
  return CosetTable(num_generators_, num_cosets_, std::move(out), subgroup_gens_);
}

std::strong_ordering operator<=>(CosetTable const& a, CosetTable const& b) {
  if (auto c = a.num_cosets_ <=> b.num_cosets_; c != 0) return c;
  if (auto c = a.num_generators_ <=> b.num_generators_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::string dump(CosetTable const& t) {
  std::string out;
  for (std::size_t c = 0; c < t.num_cosets(); ++c) {
    for (std::size_t x = 0; x < t.num_letters(); ++x) {
      if (x > 0) out += '\t';
      out += std::to_string(t(c, x) + 1);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

class Enumerator {
 public:
  Enumerator(GroupPresentation const& pres, std::size_t max_cosets)
      : letters_(2 * pres.num_generators()), max_cosets_(max_cosets) {
    for (auto const& r : pres.relators()) relators_.push_back(r.letters());
    new_coset();
  }

  void scan_and_fill(std::size_t coset, std::vector<std::size_t> const& w) {
    if (w.empty()) return;
    std::size_t f = coset;
    std::size_t b = coset;
    std::size_t i = 0;
    std::size_t j = w.size();  // unscanned letters are w[i, j)
    while (true) {
      while (i < j && at(f, w[i]) != CosetTable::kUndefined) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_letter(w[j - 1])) != CosetTable::kUndefined) {
        b = static_cast<std::size_t>(at(b, inverse_letter(w[--j])));
      }
      if (i == j) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      set(f, w[i], new_coset());
    }
  }

  CosetTable run(std::vector<Word> const& subgroup) {
    for (auto const& w : subgroup) {
      scan_and_fill(0, w.letters());
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (auto const& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < letters_ && alive(c); ++x) {
        if (at(c, x) == CosetTable::kUndefined) set(c, x, new_coset());
      }
    }
    return compact(subgroup);
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * letters_ + x]; }

  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_coset() {
    if (parent_.size() >= max_cosets_) throw CapacityExceeded(parent_.size() + 1, max_cosets_);
    std::size_t const c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + letters_, CosetTable::kUndefined);
    return c;
  }

  void set(std::size_t c, std::size_t x, std::size_t d) {
    at(c, x) = static_cast<std::int32_t>(d);
    at(d, inverse_letter(x)) = static_cast<std::int32_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t const next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l) {
    std::size_t const a = rep(k);
    std::size_t const b = rep(l);
    if (a == b) return;
    std::size_t const lo = std::min(a, b);
    std::size_t const hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      std::size_t const dead = queue_[head];
      for (std::size_t x = 0; x < letters_; ++x) {
        auto const target = at(dead, x);
        if (target == CosetTable::kUndefined) continue;
        std::size_t const d = static_cast<std::size_t>(target);
        std::size_t const xi = inverse_letter(x);
        if (at(d, xi) == static_cast<std::int32_t>(dead)) at(d, xi) = CosetTable::kUndefined;
        std::size_t const mu = rep(dead);
        std::size_t const nu = rep(d);
        if (at(mu, x) != CosetTable::kUndefined) {
          merge(nu, static_cast<std::size_t>(at(mu, x)));
        } else if (at(nu, xi) != CosetTable::kUndefined) {
          merge(mu, static_cast<std::size_t>(at(nu, xi)));
        } else {
          at(mu, x) = static_cast<std::int32_t>(nu);
          at(nu, xi) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  CosetTable compact(std::vector<Word> const& subgroup) {
    std::vector<std::int32_t> index(parent_.size(), CosetTable::kUndefined);
    std::size_t live = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) index[c] = static_cast<std::int32_t>(live++);
    }
    std::vector<std::int32_t> entries;
    entries.reserve(live * letters_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < letters_; ++x) {
        entries.push_back(index[rep(static_cast<std::size_t>(at(c, x)))]);
      }
    }
    return CosetTable(letters_ / 2, live, std::move(entries), subgroup).standardized();
  }

  std::size_t letters_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
};

}  // namespace

CosetTable coset_enumerate(GroupPresentation const& pres, std::vector<Word> const& subgroup,
                           std::size_t max_cosets) {
  if (max_cosets == 0) throw PreconditionError("max_cosets must be positive");
  for (auto const& w : subgroup) {
    for (auto const& s : w.syllables()) {
      if (s.generator >= pres.num_generators()) {
        throw PreconditionError("subgroup word uses a generator outside the presentation");
      }
    }
  }
  return Enumerator(pres, max_cosets).run(subgroup);
}

std::vector<Permutation> permutation_action(CosetTable const& t) {
  if (!t.is_complete()) throw PreconditionError("permutation_action needs a complete coset table");
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < t.num_generators(); ++g) {
    std::vector<std::uint32_t> im(t.num_cosets());
    for (std::size_t c = 0; c < t.num_cosets(); ++c) im[c] = static_cast<std::uint32_t>(t(c, 2 * g));
    out.emplace_back(std::move(im));
  }
  return out;
}

CosetTable table_from_action(std::vector<Permutation> const& images) {
  if (images.empty()) throw PreconditionError("need at least one generator image");
  std::size_t const n = images.front().degree();
  std::size_t const letters = 2 * images.size();
  std::vector<std::int32_t> entries(n * letters);
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].degree() != n) throw PreconditionError("generator images have different degrees");
    auto const inv = images[g].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      entries[c * letters + 2 * g] = static_cast<std::int32_t>(images[g][c]);
      entries[c * letters + 2 * g + 1] = static_cast<std::int32_t>(inv[c]);
    }
  }
  return CosetTable(images.size(), n, std::move(entries)).standardized();
}

}  // namespace profinito
