#include "profinito/lowindex.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "profinito/errors.hpp"
#include "profinito/finitegroups.hpp"

namespace profinito {

namespace {

using Cell = std::int8_t;
constexpr Cell kFree = -1;

// Partial coset table. Every cell before `cursor` (row-major) is defined,
// so cosets first appear in increasing order and the table is standardized.
struct Node {
  std::vector<Cell> table;
  std::size_t num_cosets = 1;
  std::size_t cursor = 0;
};

enum class Compare { kLess, kEqual, kGreater, kUnknown };

class Search {
 public:
  Search(GroupPresentation const& pres, std::size_t max_index, bool normal_only)
      : letters_(2 * pres.num_generators()), max_index_(max_index), normal_only_(normal_only) {
    for (auto const& r : pres.relators()) relators_.push_back(r.letters());
  }

  Node root() const {
    Node n;
    n.table.assign(max_index_ * letters_, kFree);
    return n;
  }

  // Either records `node` as a result or pushes its viable children.
  void expand(Node const& node, std::vector<Node>& children, std::vector<CosetTable>& found) const {
    Node base = node;
    std::size_t const end = base.num_cosets * letters_;
    while (base.cursor < end && base.table[base.cursor] != kFree) ++base.cursor;
    if (base.cursor == end) {
      if (accept(base)) found.push_back(to_table(base));
      return;
    }
    std::size_t const c = base.cursor / letters_;
    std::size_t const x = base.cursor % letters_;
    std::size_t const xi = inverse_letter(x);
    for (std::size_t d = 0; d < base.num_cosets; ++d) {
      if (at(base, d, xi) != kFree) continue;
      Node child = base;
      if (define(child, c, x, d)) children.push_back(std::move(child));
    }
    if (base.num_cosets < max_index_) {
      Node child = base;
      std::size_t const d = child.num_cosets++;
      if (define(child, c, x, d)) children.push_back(std::move(child));
    }
  }

  void depth_first(Node const& node, std::vector<CosetTable>& found) const {
    std::vector<Node> children;
    expand(node, children, found);
    for (auto const& child : children) depth_first(child, found);
  }

 private:
  Cell& at(Node& n, std::size_t c, std::size_t x) const { return n.table[c * letters_ + x]; }
  Cell at(Node const& n, std::size_t c, std::size_t x) const { return n.table[c * letters_ + x]; }

  bool define(Node& n, std::size_t c, std::size_t x, std::size_t d) const {
    at(n, c, x) = static_cast<Cell>(d);
    at(n, d, inverse_letter(x)) = static_cast<Cell>(c);
    std::vector<std::size_t> pending{c};
    while (!pending.empty()) {
      std::size_t const e = pending.back();
      pending.pop_back();
      for (auto const& r : relators_) {
        for (std::size_t k = 0; k < r.size(); ++k) {
          if (!scan(n, e, r, k, pending)) return false;
        }
      }
    }
    return prune_ok(n);
  }

  // Traces the rotation of `r` starting at offset k around coset e. Fills a
  // single-letter gap; returns false on a contradiction.
  bool scan(Node& n, std::size_t e, std::vector<std::size_t> const& r, std::size_t k,
            std::vector<std::size_t>& pending) const {
    std::size_t const len = r.size();
    auto letter = [&](std::size_t i) { return r[(k + i) % len]; };
    std::size_t f = e;
    std::size_t i = 0;
    while (i < len && at(n, f, letter(i)) != kFree) f = static_cast<std::size_t>(at(n, f, letter(i++)));
    if (i == len) return f == e;
    std::size_t b = e;
    std::size_t j = len;
    while (j > i && at(n, b, inverse_letter(letter(j - 1))) != kFree) {
      b = static_cast<std::size_t>(at(n, b, inverse_letter(letter(j - 1))));
      --j;
    }
    if (j == i) return f == b;
    if (j == i + 1) {
      std::size_t const y = letter(i);
      if (at(n, b, inverse_letter(y)) != kFree) return false;
      at(n, f, y) = static_cast<Cell>(b);
      at(n, b, inverse_letter(y)) = static_cast<Cell>(f);
      pending.push_back(f);
    }
    return true;
  }

  // Relabels the table breadth-first from coset `start` and compares it to
  // the table itself in row-major order, up to the first undefined cell.
  Compare relabel_compare(Node const& n, std::size_t start) const {
    std::vector<int> to_new(n.num_cosets, -1);
    std::vector<std::size_t> to_old{start};
    to_new[start] = 0;
    for (std::size_t row = 0; row < to_old.size(); ++row) {
      for (std::size_t x = 0; x < letters_; ++x) {
        Cell const image = at(n, to_old[row], x);
        Cell const orig = at(n, row, x);
        if (image == kFree || orig == kFree) return Compare::kUnknown;
        auto& label = to_new[static_cast<std::size_t>(image)];
        if (label < 0) {
          label = static_cast<int>(to_old.size());
          to_old.push_back(static_cast<std::size_t>(image));
        }
        if (label < orig) return Compare::kLess;
        if (label > orig) return Compare::kGreater;
      }
    }
    return Compare::kEqual;
  }

  // First-in-class pruning; in normal-only mode every relabeling must agree.
  bool prune_ok(Node const& n) const {
    for (std::size_t b = 1; b < n.num_cosets; ++b) {
      Compare const cmp = relabel_compare(n, b);
      if (cmp == Compare::kLess) return false;
      if (normal_only_ && cmp == Compare::kGreater) return false;
    }
    return true;
  }

  bool accept(Node const& n) const {
    for (auto const& r : relators_) {
      for (std::size_t c = 0; c < n.num_cosets; ++c) {
        std::size_t e = c;
        for (auto x : r) e = static_cast<std::size_t>(at(n, e, x));
        if (e != c) return false;
      }
    }
    return prune_ok(n);
  }

  CosetTable to_table(Node const& n) const {
    std::vector<std::int32_t> entries(n.table.begin(),
                                      n.table.begin() + static_cast<std::ptrdiff_t>(n.num_cosets * letters_));
    return CosetTable(letters_ / 2, n.num_cosets, std::move(entries));
  }

  std::size_t letters_;
  std::size_t max_index_;
  bool normal_only_;
  std::vector<std::vector<std::size_t>> relators_;
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(GroupPresentation const& pres, std::size_t max_index,
                                            LowIndexOptions const& options) {
  if (max_index < 1 || max_index > kMaxLowIndex) {
    throw LimitExceeded("max_index must lie in [1, " + std::to_string(kMaxLowIndex) + "], got " +
                        std::to_string(max_index));
  }
  Search const search(pres, max_index, options.normal_only);
  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max<std::size_t>(threads, 1);

  std::vector<CosetTable> found;
  if (threads == 1) {
    search.depth_first(search.root(), found);
  } else {
    // Split the tree breadth-first into enough independent branches.
    std::vector<Node> frontier{search.root()};
    while (!frontier.empty() && frontier.size() < 16 * threads) {
      std::vector<Node> next;
      for (auto const& node : frontier) search.expand(node, next, found);
      frontier = std::move(next);
    }
    std::atomic<std::size_t> cursor{0};
    std::mutex merge;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        std::vector<CosetTable> local;
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
          search.depth_first(frontier[i], local);
        }
        std::lock_guard lock(merge);
        found.insert(found.end(), std::make_move_iterator(local.begin()),
                     std::make_move_iterator(local.end()));
      });
    }
    for (auto& t : workers) t.join();
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_normal(CosetTable const& t) {
  auto const perms = permutation_action(t);
  auto const order = order_up_to(PermGroup(t.num_cosets(), perms), t.num_cosets());
  return order.has_value() && *order == t.num_cosets();
}

}  // namespace profinito
