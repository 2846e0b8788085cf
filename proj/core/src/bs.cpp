#include "profinito/bs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>

namespace profinito {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void require_rf(BSParams const& p) {
  if (!is_residually_finite(p)) throw NotResiduallyFinite(p);
}

}  // namespace

BSParams canonicalize(BSParams const& p) {
  std::array<BSParams, 4> const orbit{BSParams(p.m(), p.n()), BSParams(p.n(), p.m()),
                                      BSParams(-p.m(), -p.n()), BSParams(-p.n(), -p.m())};
  std::optional<BSParams> best;
  auto rank = [](BSParams const& q) {
    // Lower is preferred: n >= 0 first, then m <= n.
    return std::array<int, 2>{q.n() >= 0 ? 0 : 1, q.m() <= q.n() ? 0 : 1};
  };
  for (auto const& q : orbit) {
    if (q.m() < 1 || q.m() > abs64(q.n())) continue;
    if (!best || rank(q) < rank(*best) || (rank(q) == rank(*best) && q < *best)) best = q;
  }
  // The orbit always contains a pair with 1 <= m <= |n|.
  return *best;
}

bool is_residually_finite(BSParams const& p) {
  BSParams const c = canonicalize(p);
  return c.m() == 1 || c.m() == abs64(c.n());
}

AbelianInvariants closed_form_abelianization(BSParams const& p) {
  std::int64_t const d = abs64(p.m() - p.n());
  if (d == 0) return {2, {}};
  if (d == 1) return {1, {}};
  return {1, {d}};
}

bool bs_isomorphic(BSParams const& p, BSParams const& q) {
  require_rf(p);
  require_rf(q);
  return canonicalize(p) == canonicalize(q);
}

bool profinitely_isomorphic(BSParams const& p, BSParams const& q) { return bs_isomorphic(p, q); }

EpimorphismReport search_epimorphisms(GroupPresentation const& pres, CayleyTable const& target) {
  std::size_t const k = pres.num_generators();
  std::size_t const n = target.order();
  EpimorphismReport report;
  report.target_order = n;
  double const total = std::pow(static_cast<double>(n), static_cast<double>(k));
  if (total > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
    throw LimitExceeded("too many generator assignments to search exhaustively");
  }
  std::vector<std::uint32_t> images(k, 0);
  while (true) {
    ++report.assignments_checked;
    bool ok = true;
    for (auto const& r : pres.relators()) {
      std::uint32_t acc = 0;
      for (auto const& s : r.syllables()) acc = target.mul(acc, target.power(images[s.generator], s.exponent));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++report.homomorphisms;
      if (target.subgroup(images).size() == n) ++report.epimorphisms;
    }
    // Odometer over n^k assignments.
    std::size_t i = 0;
    while (i < k && ++images[i] == n) images[i++] = 0;
    if (i == k) break;
  }
  return report;
}

Certificate certify_distinction(BSParams const& p, BSParams const& q, std::size_t max_order,
                                CertifyOptions const& options) {
  require_rf(p);
  require_rf(q);
  if (profinitely_isomorphic(p, q)) {
    throw PreconditionError(to_string(p) + " and " + to_string(q) + " are isomorphic; nothing to separate");
  }
  GroupPresentation const gp = bs_presentation(p);
  GroupPresentation const gq = bs_presentation(q);
  AbelianInvariants const ap = abelianize(gp);
  AbelianInvariants const aq = abelianize(gq);
  if (ap != aq) return AbelianWitness{ap, aq};

  Fingerprint fp{gp, 0, {}};
  Fingerprint fq{gq, 0, {}};
  if (options.threads > 1) {
    FingerprintOptions half{std::max<std::size_t>(options.threads / 2, 1)};
    auto pending = std::async(std::launch::async, [&] { return compute_fingerprint(gp, max_order, half); });
    fq = compute_fingerprint(gq, max_order, half);
    fp = pending.get();
  } else {
    fp = compute_fingerprint(gp, max_order);
    fq = compute_fingerprint(gq, max_order);
  }
  FingerprintDiff const diff = diff_fingerprints(fp, fq);

  FingerprintClass const* best = nullptr;
  std::size_t side = 0;
  for (auto const& c : diff.only_first) {
    if (best == nullptr || c.key < best->key) {
      best = &c;
      side = 0;
    }
  }
  for (auto const& c : diff.only_second) {
    if (best == nullptr || c.key < best->key) {
      best = &c;
      side = 1;
    }
  }
  if (best == nullptr) return Inconclusive{max_order};

  CayleyTable const target(best->representative.group());
  EpimorphismReport const report = search_epimorphisms(side == 0 ? gq : gp, target);
  if (report.epimorphisms != 0) {
    throw Error("internal inconsistency: separating quotient lifts to the other group");
  }
  return QuotientWitness{side, best->key, best->representative, report};
}

}  // namespace profinito
