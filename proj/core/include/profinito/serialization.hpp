#pragma once

// Stable JSON documents. Permutations use 1-based one-line image notation.
//
//   fingerprint: { "presentation": str, "max_order": int,
//                  "classes": [ { "order": int, "key": {...},
//                                 "generator_images": [[int,...],...] } ] }
//   key:         { "order", "element_order_histogram": [[order,count],...],
//                  "abelian_invariants": {"free_rank", "torsion"},
//                  "center_order", "derived_order", "conj_class_sizes" }

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profinito/abelianization.hpp"
#include "profinito/bs.hpp"
#include "profinito/fingerprint.hpp"
#include "profinito/finitegroups.hpp"
#include "profinito/toddcoxeter.hpp"

namespace profinito {

[[nodiscard]] std::string to_json(AbelianInvariants const& inv);
[[nodiscard]] std::string to_json(IsoClassKey const& key);
[[nodiscard]] std::string to_json(Fingerprint const& fp);

/// Coset enumeration report: { "presentation", "subgroup": [str], "index",
/// "table": [[int,...],...] } with 1-based entries in letter order.
[[nodiscard]] std::string coset_report_json(GroupPresentation const& pres, CosetTable const& t);

/// Low-index report: { "presentation", "max_index", "count",
/// "subgroups": [ { "index", "normal", "generator_images" } ] }.
[[nodiscard]] std::string low_index_report_json(GroupPresentation const& pres, std::size_t max_index,
                                                std::vector<CosetTable> const& tables);

/// Comparison report: { "groups": [str, str], "canonical": [str, str],
/// "profinitely_isomorphic": bool, "certificate": null | {...} }.
/// Certificate kinds: "abelian" {first, second}; "quotient" {quotient_of,
/// order, key, generator_images, non_lifting}; "inconclusive" {max_order}.
[[nodiscard]] std::string compare_report_json(BSParams const& p, BSParams const& q, bool isomorphic,
                                              std::optional<Certificate> const& certificate);

/// Parses documents written by to_json. Representatives are rebuilt from
/// their generator images; throws ParseError on malformed input.
[[nodiscard]] AbelianInvariants abelian_invariants_from_json(std::string_view text);
[[nodiscard]] IsoClassKey iso_key_from_json(std::string_view text);
[[nodiscard]] Fingerprint fingerprint_from_json(std::string_view text);

}  // namespace profinito
