#include "profinito/fingerprint.hpp"

#include <algorithm>
#include <utility>

#include "profinito/errors.hpp"
#include "profinito/lowindex.hpp"

namespace profinito {

namespace {

PermGroup regular_group(GroupPresentation const& pres, CosetTable const& t) {
  if (!t.is_complete()) throw PreconditionError("quotient table is incomplete");
  if (!t.satisfies_relators(pres)) throw PreconditionError("quotient table violates a relator");
  if (!is_normal(t)) throw PreconditionError("quotient table is not a regular action");
  return PermGroup(t.num_cosets(), permutation_action(t));
}

bool same_class(FingerprintClass const& a, FingerprintClass const& b) {
  if (a.key != b.key) return false;
  return are_isomorphic(a.representative.group(), b.representative.group());
}

}  // namespace

FiniteQuotient::FiniteQuotient(GroupPresentation const& pres, CosetTable source_table)
    : source_table_(std::move(source_table)), group_(regular_group(pres, source_table_)) {}

Fingerprint compute_fingerprint(GroupPresentation const& pres, std::size_t max_order,
                                FingerprintOptions const& options) {
  if (max_order < 1 || max_order > kMaxFingerprintOrder) {
    throw LimitExceeded("fingerprint order must lie in [1, " + std::to_string(kMaxFingerprintOrder) +
                        "], got " + std::to_string(max_order));
  }
  LowIndexOptions lio;
  lio.normal_only = true;
  lio.threads = options.threads;
  auto tables = low_index_subgroups(pres, max_order, lio);

  Fingerprint fp{pres, max_order, {}};
  for (auto& t : tables) {
    if (!is_normal(t)) continue;
    FiniteQuotient q(pres, std::move(t));
    FingerprintClass candidate{iso_key(q.group()), std::move(q)};
    bool const seen = std::any_of(fp.classes.begin(), fp.classes.end(),
                                  [&](auto const& c) { return same_class(c, candidate); });
    if (!seen) fp.classes.push_back(std::move(candidate));
  }
  // Tables arrive sorted, so representatives among equal keys keep a
  // deterministic order.
  std::stable_sort(fp.classes.begin(), fp.classes.end(),
                   [](auto const& a, auto const& b) { return a.key < b.key; });
  return fp;
}

bool contains_isomorphic(Fingerprint const& f, FiniteQuotient const& q) {
  IsoClassKey const key = iso_key(q.group());
  return std::any_of(f.classes.begin(), f.classes.end(), [&](auto const& c) {
    return c.key == key && are_isomorphic(c.representative.group(), q.group());
  });
}

FingerprintDiff diff_fingerprints(Fingerprint const& f, Fingerprint const& g) {
  if (f.max_order != g.max_order) {
    throw PreconditionError("fingerprints truncated at different orders (" + std::to_string(f.max_order) +
                            " vs " + std::to_string(g.max_order) + ")");
  }
  FingerprintDiff diff;
  std::vector<bool> matched(g.classes.size(), false);
  for (auto const& c : f.classes) {
    bool found = false;
    for (std::size_t j = 0; j < g.classes.size(); ++j) {
      if (!matched[j] && same_class(c, g.classes[j])) {
        matched[j] = true;
        found = true;
        break;
      }
    }
    if (found) {
      ++diff.common_count;
    } else {
      diff.only_first.push_back(c);
    }
  }
  for (std::size_t j = 0; j < g.classes.size(); ++j) {
    if (!matched[j]) diff.only_second.push_back(g.classes[j]);
  }
  return diff;
}

}  // namespace profinito
