#include "profinito/finitegroups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "profinito/errors.hpp"

namespace profinito {

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw PreconditionError("image list is not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation acc = identity(degree());
  while (e > 0) {
    if ((e & 1U) != 0) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) throw PreconditionError("permutation degrees differ");
  std::vector<std::uint32_t> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = q.images_[p.images_[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

std::string to_string(Permutation const& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out + "]";
}

Permutation evaluate(Word const& w, std::vector<Permutation> const& images, std::size_t degree) {
  Permutation acc = Permutation::identity(degree);
  for (auto const& s : w.syllables()) acc = acc * images.at(s.generator).pow(s.exponent);
  return acc;
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree == 0) throw PreconditionError("permutation group degree must be positive");
  for (auto const& g : gens_) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
  }
}

namespace {

// BFS closure; stops with nullopt once the set grows past `bound`.
std::optional<std::set<Permutation>> closure(PermGroup const& g, std::size_t bound) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(g.degree())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& s : g.gens()) {
      Permutation next = queue[head] * s;
      if (seen.insert(next).second) {
        if (seen.size() > bound) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<Permutation> elements(PermGroup const& g, std::size_t cap) {
  auto all = closure(g, cap);
  if (!all) throw LimitExceeded("group order exceeds cap " + std::to_string(cap));
  return {all->begin(), all->end()};
}

std::optional<std::size_t> order_up_to(PermGroup const& g, std::size_t bound) {
  auto all = closure(g, bound);
  if (!all) return std::nullopt;
  return all->size();
}

// ---------------------------------------------------------------------------
// CayleyTable
// ---------------------------------------------------------------------------

CayleyTable::CayleyTable(PermGroup const& g, std::size_t cap) : elements_(elements(g, cap)) {
  std::size_t const n = elements_.size();
  for (std::uint32_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  for (auto const& s : g.gens()) gen_index_.push_back(index_of(s));

  // Right multiplication by generators, then a BFS spanning tree expresses
  // every y as parent(y) * gen so mul(x, y) = mul(mul(x, parent), gen).
  std::size_t const k = gen_index_.size();
  std::vector<std::uint32_t> by_gen(n * k);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < k; ++j) by_gen[x * k + j] = index_of(elements_[x] * g.gens()[j]);
  }
  std::vector<std::uint32_t> order_bfs{0};
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::size_t> via(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order_bfs.size(); ++head) {
    std::uint32_t const y = order_bfs[head];
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t const z = by_gen[y * k + j];
      if (!seen[z]) {
        seen[z] = true;
        parent[z] = y;
        via[z] = j;
        order_bfs.push_back(z);
      }
    }
  }
  table_.assign(n * n, 0);
  for (std::uint32_t x = 0; x < n; ++x) table_[x * n] = x;
  for (std::size_t h = 1; h < order_bfs.size(); ++h) {
    std::uint32_t const y = order_bfs[h];
    for (std::uint32_t x = 0; x < n; ++x) {
      table_[x * n + y] = by_gen[table_[x * n + parent[y]] * k + via[y]];
    }
  }

  inverse_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (mul(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    }
  }
  element_orders_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t o = 1;
    for (std::uint32_t p = x; p != 0; p = mul(p, x)) ++o;
    element_orders_[x] = o;
  }
}

std::uint32_t CayleyTable::index_of(Permutation const& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw PreconditionError("permutation is not an element of the group");
  return it->second;
}

std::uint32_t CayleyTable::power(std::uint32_t x, std::int64_t k) const {
  std::int64_t const o = element_orders_[x];
  std::int64_t e = ((k % o) + o) % o;
  std::uint32_t acc = 0;
  while (e-- > 0) acc = mul(acc, x);
  return acc;
}

std::vector<std::uint32_t> CayleyTable::subgroup(std::vector<std::uint32_t> const& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::uint32_t> out{0};
  in[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto s : gens) {
      std::uint32_t const z = mul(out[head], s);
      if (!in[z]) {
        in[z] = true;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> prime_factors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Invariant factors of G/N for a normal subgroup N given as a membership mask.
AbelianInvariants quotient_invariants(CayleyTable const& g, std::vector<bool> const& in_n,
                                      std::size_t n_order) {
  std::size_t const q = g.order() / n_order;
  std::vector<std::vector<std::size_t>> exponents;  // per prime, descending
  for (auto p : prime_factors(q)) {
    // c_k = log_p |A[p^k]|, counted through elements of G with x^(p^k) in N.
    std::vector<std::size_t> c{0};
    std::size_t p_part = 1;
    std::size_t tmp = q;
    while (tmp % p == 0) {
      tmp /= p;
      p_part *= p;
    }
    std::int64_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (in_n[g.power(x, pk)]) ++count;
      }
      std::size_t size = count / n_order;
      std::size_t log = 0;
      while (size > 1) {
        size /= p;
        ++log;
      }
      c.push_back(log);
      std::size_t full = 1;
      for (std::size_t i = 0; i < log; ++i) full *= p;
      if (full == p_part) break;
    }
    // r_k = number of cyclic p-factors of order >= p^k.
    std::vector<std::size_t> ex;
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::size_t const r_k = c[k] - c[k - 1];
      std::size_t const r_next = k + 1 < c.size() ? c[k + 1] - c[k] : 0;
      for (std::size_t i = 0; i < r_k - r_next; ++i) ex.push_back(k);
    }
    std::sort(ex.rbegin(), ex.rend());
    std::vector<std::size_t> as_powers;
    for (auto e : ex) {
      std::size_t v = 1;
      for (std::size_t i = 0; i < e; ++i) v *= p;
      as_powers.push_back(v);
    }
    exponents.push_back(std::move(as_powers));
  }
  std::size_t width = 0;
  for (auto const& e : exponents) width = std::max(width, e.size());
  AbelianInvariants inv;
  for (std::size_t j = 0; j < width; ++j) {
    std::int64_t d = 1;
    for (auto const& e : exponents) {
      if (j < e.size()) d *= static_cast<std::int64_t>(e[j]);
    }
    inv.torsion.push_back(d);
  }
  std::reverse(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

}  // namespace

IsoClassKey iso_key(CayleyTable const& g) {
  std::size_t const n = g.order();
  IsoClassKey key;
  key.order = n;
  for (std::uint32_t x = 0; x < n; ++x) ++key.element_order_histogram[g.element_order(x)];

  for (std::uint32_t x = 0; x < n; ++x) {
    bool central = true;
    for (auto s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) ++key.center_order;
  }

  std::vector<bool> is_comm(n, false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t const c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  }
  auto derived = g.subgroup(comms);
  key.derived_order = derived.size();
  std::vector<bool> in_derived(n, false);
  for (auto x : derived) in_derived[x] = true;
  key.abelian_invariants = quotient_invariants(g, in_derived, derived.size());

  std::vector<bool> done(n, false);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<std::uint32_t> orbit{x};
    done[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto s : g.generators()) {
        std::uint32_t const y = g.mul(g.mul(g.inv(s), orbit[head]), s);
        if (!done[y]) {
          done[y] = true;
          orbit.push_back(y);
        }
      }
    }
    key.conj_class_sizes.push_back(orbit.size());
  }
  std::sort(key.conj_class_sizes.begin(), key.conj_class_sizes.end());
  return key;
}

IsoClassKey iso_key(PermGroup const& g) { return iso_key(CayleyTable(g, kDefaultOrderCap)); }

std::strong_ordering operator<=>(IsoClassKey const& a, IsoClassKey const& b) {
  if (auto c = a.order <=> b.order; c != 0) return c;
  if (auto c = a.abelian_invariants <=> b.abelian_invariants; c != 0) return c;
  if (auto c = a.center_order <=> b.center_order; c != 0) return c;
  if (auto c = a.derived_order <=> b.derived_order; c != 0) return c;
  if (auto c = a.conj_class_sizes <=> b.conj_class_sizes; c != 0) return c;
  auto ia = a.element_order_histogram.rbegin();
  auto ib = b.element_order_histogram.rbegin();
  for (; ia != a.element_order_histogram.rend() && ib != b.element_order_histogram.rend(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  bool const a_done = ia == a.element_order_histogram.rend();
  bool const b_done = ib == b.element_order_histogram.rend();
  if (a_done == b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kUnset = -1;

class IsoSearch {
 public:
  IsoSearch(CayleyTable const& g, CayleyTable const& h) : g_(g), h_(h) {
    std::size_t const n = g.order();
    // Greedy generating sequence, highest element order first.
    std::vector<std::uint32_t> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0U);
    std::stable_sort(by_order.begin(), by_order.end(), [&](auto x, auto y) {
      return g.element_order(x) > g.element_order(y);
    });
    std::size_t covered = 1;
    std::vector<bool> in_sub(n, false);
    in_sub[0] = true;
    for (auto x : by_order) {
      if (covered == n) break;
      if (in_sub[x]) continue;
      gens_.push_back(x);
      auto sub = g.subgroup(gens_);
      covered = sub.size();
      for (auto y : sub) in_sub[y] = true;
    }
    for (auto x : gens_) {
      std::vector<std::uint32_t> cands;
      for (std::uint32_t y = 0; y < h.order(); ++y) {
        if (h.element_order(y) == g.element_order(x)) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
  }

  std::optional<std::vector<std::uint32_t>> run() {
    std::vector<std::int64_t> fwd(g_.order(), kUnset);
    std::vector<std::int64_t> back(h_.order(), kUnset);
    fwd[0] = 0;
    back[0] = 0;
    images_.assign(gens_.size(), 0);
    if (!extend(0, fwd, back)) return std::nullopt;
    std::vector<std::uint32_t> out(result_.begin(), result_.end());
    return out;
  }

 private:
  bool extend(std::size_t level, std::vector<std::int64_t> const& fwd,
              std::vector<std::int64_t> const& back) {
    if (level == gens_.size()) {
      result_.assign(fwd.begin(), fwd.end());
      return true;
    }
    for (auto cand : candidates_[level]) {
      if (back[cand] != kUnset) continue;
      images_[level] = cand;
      auto f = fwd;
      auto b = back;
      if (close(level, f, b) && extend(level + 1, f, b)) return true;
    }
    return false;
  }

  // Extends the map over the subgroup generated by gens_[0..level], checking
  // phi(u * s) = phi(u) * phi(s) on every edge and injectivity.
  bool close(std::size_t level, std::vector<std::int64_t>& fwd, std::vector<std::int64_t>& back) {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < g_.order(); ++x) {
      if (fwd[x] != kUnset) queue.push_back(x);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t const u = queue[head];
      for (std::size_t j = 0; j <= level; ++j) {
        std::uint32_t const v = g_.mul(u, gens_[j]);
        std::uint32_t const w = h_.mul(static_cast<std::uint32_t>(fwd[u]), images_[j]);
        if (fwd[v] == kUnset) {
          if (back[w] != kUnset) return false;
          fwd[v] = w;
          back[w] = v;
          queue.push_back(v);
        } else if (fwd[v] != w) {
          return false;
        }
      }
    }
    return true;
  }

  CayleyTable const& g_;
  CayleyTable const& h_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> images_;
  std::vector<std::int64_t> result_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(CayleyTable const& g, CayleyTable const& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (iso_key(g) != iso_key(h)) return std::nullopt;
  return IsoSearch(g, h).run();
}

bool are_isomorphic(CayleyTable const& g, CayleyTable const& h) {
  return find_isomorphism(g, h).has_value();
}

bool are_isomorphic(PermGroup const& g, PermGroup const& h) {
  return are_isomorphic(CayleyTable(g, kIsomorphismOrderCap), CayleyTable(h, kIsomorphismOrderCap));
}

}  // namespace profinito
