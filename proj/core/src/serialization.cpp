#include "profinito/serialization.hpp"

#include <utility>

#include "json.hpp"
#include "profinito/errors.hpp"
#include "profinito/lowindex.hpp"

namespace profinito {

namespace {

using nlohmann::json;

std::string render(json const& j) { return j.dump(2) + "\n"; }

json perm_json(Permutation const& p) {
  json out = json::array();
  for (auto x : p.images()) out.push_back(x + 1);
  return out;
}

json images_json(std::vector<Permutation> const& images) {
  json out = json::array();
  for (auto const& p : images) out.push_back(perm_json(p));
  return out;
}

json inv_json(AbelianInvariants const& inv) {
  return json{{"free_rank", inv.free_rank}, {"torsion", inv.torsion}, {"text", to_string(inv)}};
}

json key_json(IsoClassKey const& key) {
  json hist = json::array();
  for (auto const& [order, count] : key.element_order_histogram) hist.push_back({order, count});
  return json{{"order", key.order},
              {"element_order_histogram", hist},
              {"abelian_invariants", inv_json(key.abelian_invariants)},
              {"center_order", key.center_order},
              {"derived_order", key.derived_order},
              {"conj_class_sizes", key.conj_class_sizes}};
}

json fingerprint_json(Fingerprint const& fp) {
  json classes = json::array();
  for (auto const& c : fp.classes) {
    classes.push_back({{"order", c.key.order},
                       {"key", key_json(c.key)},
                       {"generator_images", images_json(c.representative.gen_images())}});
  }
  return json{{"presentation", to_string(fp.presentation)}, {"max_order", fp.max_order}, {"classes", classes}};
}

json report_json(EpimorphismReport const& r) {
  return json{{"target_order", r.target_order},
              {"assignments_checked", r.assignments_checked},
              {"homomorphisms", r.homomorphisms},
              {"epimorphisms", r.epimorphisms}};
}

json certificate_json(Certificate const& cert, BSParams const& p, BSParams const& q) {
  if (auto const* a = std::get_if<AbelianWitness>(&cert)) {
    return json{{"kind", "abelian"}, {"first", inv_json(a->first)}, {"second", inv_json(a->second)}};
  }
  if (auto const* w = std::get_if<QuotientWitness>(&cert)) {
    BSParams const& owner = w->quotient_of == 0 ? p : q;
    BSParams const& other = w->quotient_of == 0 ? q : p;
    json non_lifting = report_json(w->non_lifting);
    non_lifting["group"] = to_string(other);
    return json{{"kind", "quotient"},
                {"quotient_of", to_string(owner)},
                {"order", w->key.order},
                {"key", key_json(w->key)},
                {"generator_images", images_json(w->quotient.gen_images())},
                {"non_lifting", non_lifting}};
  }
  return json{{"kind", "inconclusive"}, {"max_order", std::get<Inconclusive>(cert).max_order}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(e.byte, e.what());
  }
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (json::exception const& e) {
    throw ParseError(0, std::string("malformed document: ") + e.what());
  }
}

AbelianInvariants inv_from(json const& j) {
  AbelianInvariants inv;
  inv.free_rank = j.at("free_rank").get<std::size_t>();
  inv.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
  return inv;
}

IsoClassKey key_from(json const& j) {
  IsoClassKey key;
  key.order = j.at("order").get<std::size_t>();
  for (auto const& pair : j.at("element_order_histogram")) {
    key.element_order_histogram[pair.at(0).get<std::uint32_t>()] = pair.at(1).get<std::size_t>();
  }
  key.abelian_invariants = inv_from(j.at("abelian_invariants"));
  key.center_order = j.at("center_order").get<std::size_t>();
  key.derived_order = j.at("derived_order").get<std::size_t>();
  key.conj_class_sizes = j.at("conj_class_sizes").get<std::vector<std::size_t>>();
  return key;
}

Permutation perm_from(json const& j) {
  std::vector<std::uint32_t> im;
  for (auto const& v : j) {
    auto const x = v.get<std::uint32_t>();
    if (x == 0) throw ParseError(0, "permutation points are 1-based");
    im.push_back(x - 1);
  }
  try {
    return Permutation(std::move(im));
  } catch (PreconditionError const& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

std::string to_json(AbelianInvariants const& inv) { return render(inv_json(inv)); }
std::string to_json(IsoClassKey const& key) { return render(key_json(key)); }
std::string to_json(Fingerprint const& fp) { return render(fingerprint_json(fp)); }

std::string coset_report_json(GroupPresentation const& pres, CosetTable const& t) {
  json subgroup = json::array();
  for (auto const& w : t.subgroup_gens()) subgroup.push_back(to_string(w, pres));
  json rows = json::array();
  for (std::size_t c = 0; c < t.num_cosets(); ++c) {
    json row = json::array();
    for (std::size_t x = 0; x < t.num_letters(); ++x) row.push_back(t(c, x) + 1);
    rows.push_back(row);
  }
  return render(json{{"presentation", to_string(pres)},
                     {"subgroup", subgroup},
                     {"index", t.num_cosets()},
                     {"table", rows}});
}

std::string low_index_report_json(GroupPresentation const& pres, std::size_t max_index,
                                  std::vector<CosetTable> const& tables) {
  json subs = json::array();
  for (auto const& t : tables) {
    subs.push_back({{"index", t.num_cosets()},
                    {"normal", is_normal(t)},
                    {"generator_images", images_json(permutation_action(t))}});
  }
  return render(json{{"presentation", to_string(pres)},
                     {"max_index", max_index},
                     {"count", tables.size()},
                     {"subgroups", subs}});
}

std::string compare_report_json(BSParams const& p, BSParams const& q, bool isomorphic,
                                std::optional<Certificate> const& certificate) {
  json out{{"groups", {to_string(p), to_string(q)}},
           {"canonical", {to_string(canonicalize(p)), to_string(canonicalize(q))}},
           {"profinitely_isomorphic", isomorphic},
           {"certificate", nullptr}};
  if (certificate) out["certificate"] = certificate_json(*certificate, p, q);
  return render(out);
}

AbelianInvariants abelian_invariants_from_json(std::string_view text) {
  json const j = parse(text);
  return guarded([&] { return inv_from(j); });
}

IsoClassKey iso_key_from_json(std::string_view text) {
  json const j = parse(text);
  return guarded([&] { return key_from(j); });
}

Fingerprint fingerprint_from_json(std::string_view text) {
  json const j = parse(text);
  return guarded([&] {
    GroupPresentation pres = parse_presentation(j.at("presentation").get<std::string>());
    Fingerprint fp{pres, j.at("max_order").get<std::size_t>(), {}};
    for (auto const& c : j.at("classes")) {
      std::vector<Permutation> images;
      for (auto const& p : c.at("generator_images")) images.push_back(perm_from(p));
      if (images.size() != pres.num_generators()) {
        throw ParseError(0, "generator image count does not match the presentation");
      }
      FiniteQuotient quotient = [&] {
        try {
          return FiniteQuotient(pres, table_from_action(images));
        } catch (PreconditionError const& e) {
          throw ParseError(0, std::string("invalid quotient: ") + e.what());
        }
      }();
      IsoClassKey key = key_from(c.at("key"));
      if (key != iso_key(quotient.group())) throw ParseError(0, "stored key does not match its quotient");
      fp.classes.push_back({std::move(key), std::move(quotient)});
    }
    return fp;
  });
}

}  // namespace profinito
