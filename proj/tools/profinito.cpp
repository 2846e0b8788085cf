// profinito: command-line front end.
//
// Exit codes: 0 ok, 1 distinct but no certificate within --max-order,
// 2 parse or usage error, 3 overflow, 4 not residually finite, 5 capacity or
// size limit exceeded.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "profinito/abelianization.hpp"
#include "profinito/bs.hpp"
#include "profinito/errors.hpp"
#include "profinito/fingerprint.hpp"
#include "profinito/lowindex.hpp"
#include "profinito/serialization.hpp"
#include "profinito/toddcoxeter.hpp"

namespace {

using namespace profinito;

enum Exit : int {
  kOk = 0,
  kInconclusive = 1,
  kParse = 2,
  kOverflow = 3,
  kNotRF = 4,
  kLimit = 5,
};

struct GroupArgs {
  std::vector<std::int64_t> bs;
  std::string pres;
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  auto* bs = cmd->add_option("--bs", g.bs, "Baumslag-Solitar group BS(M,N)")
                 ->expected(2)
                 ->type_name("M N");
  auto* pres = cmd->add_option("--pres", g.pres, "presentation \"< gens | relators >\"");
  bs->excludes(pres);
  pres->excludes(bs);
}

BSParams bs_params(std::vector<std::int64_t> const& v, std::size_t at) {
  if (v.size() < at + 2) throw ParseError(0, "--bs takes two integers M N");
  return BSParams(v[at], v[at + 1]);
}

GroupPresentation group(GroupArgs const& g) {
  if (!g.bs.empty()) {
    if (g.bs.size() != 2) throw ParseError(0, "--bs takes two integers M N");
    return bs_presentation(bs_params(g.bs, 0));
  }
  if (g.pres.empty()) throw ParseError(0, "one of --bs or --pres is required");
  return parse_presentation(g.pres);
}

std::size_t resolve_threads(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (char const* env = std::getenv("PROFINITO_THREADS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (std::exception const&) {
      throw ParseError(0, "PROFINITO_THREADS must be a non-negative integer");
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string images_text(GroupPresentation const& pres, std::vector<Permutation> const& images) {
  std::ostringstream out;
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (g > 0) out << "  ";
    out << pres.generators()[g] << " -> " << to_string(images[g]);
  }
  return out.str();
}

std::string key_text(IsoClassKey const& k) {
  std::ostringstream out;
  out << "order " << k.order << ", abelianization " << to_string(k.abelian_invariants) << ", center "
      << k.center_order << ", derived " << k.derived_order << ", classes";
  for (auto s : k.conj_class_sizes) out << ' ' << s;
  return out.str();
}

int cmd_abelianize(GroupArgs const& g, bool json) {
  auto const inv = abelianize(group(g));
  std::cout << (json ? to_json(inv) : to_string(inv) + "\n");
  return kOk;
}

int cmd_compare(std::vector<std::int64_t> const& bs, std::size_t max_order, std::size_t threads, bool json) {
  if (bs.size() != 4) throw ParseError(0, "compare takes --bs M N twice");
  BSParams const p = bs_params(bs, 0);
  BSParams const q = bs_params(bs, 2);
  bool const iso = profinitely_isomorphic(p, q);
  std::optional<Certificate> cert;
  if (!iso) cert = certify_distinction(p, q, max_order, {threads});
  int const code = cert && std::holds_alternative<Inconclusive>(*cert) ? kInconclusive : kOk;

  if (json) {
    std::cout << compare_report_json(p, q, iso, cert);
    return code;
  }
  std::cout << to_string(p) << " vs " << to_string(q) << "\n";
  std::cout << "canonical forms: " << to_string(canonicalize(p)) << ", " << to_string(canonicalize(q)) << "\n";
  std::cout << "profinitely isomorphic: " << (iso ? "yes (isomorphic groups)" : "no") << "\n";
  if (!cert) return code;
  if (auto const* a = std::get_if<AbelianWitness>(&*cert)) {
    std::cout << "certificate: abelianizations differ: " << to_string(a->first) << " vs " << to_string(a->second)
              << "\n";
  } else if (auto const* w = std::get_if<QuotientWitness>(&*cert)) {
    BSParams const& owner = w->quotient_of == 0 ? p : q;
    BSParams const& other = w->quotient_of == 0 ? q : p;
    std::cout << "certificate: quotient of order " << w->key.order << " of " << to_string(owner)
              << ", not a quotient of " << to_string(other) << "\n";
    std::cout << "  " << key_text(w->key) << "\n";
    std::cout << "  " << images_text(bs_presentation(owner), w->quotient.gen_images()) << "\n";
    std::cout << "  non-lifting: " << w->non_lifting.assignments_checked << " assignments checked, "
              << w->non_lifting.homomorphisms << " homomorphisms, " << w->non_lifting.epimorphisms
              << " epimorphisms\n";
  } else {
    std::cout << "certificate: inconclusive up to order " << std::get<Inconclusive>(*cert).max_order << "\n";
  }
  return code;
}

int cmd_fingerprint(GroupArgs const& g, std::size_t max_order, std::size_t threads, bool json) {
  auto const fp = compute_fingerprint(group(g), max_order, {threads});
  if (json) {
    std::cout << to_json(fp);
    return kOk;
  }
  std::cout << to_string(fp.presentation) << ": " << fp.classes.size() << " quotient classes of order <= "
            << max_order << "\n";
  for (auto const& c : fp.classes) {
    std::cout << key_text(c.key) << "\n  " << images_text(fp.presentation, c.representative.gen_images()) << "\n";
  }
  return kOk;
}

int cmd_lowindex(GroupArgs const& g, std::size_t max_index, std::size_t threads, bool json) {
  auto const pres = group(g);
  LowIndexOptions opts;
  opts.threads = threads;
  auto const tables = low_index_subgroups(pres, max_index, opts);
  if (json) {
    std::cout << low_index_report_json(pres, max_index, tables);
    return kOk;
  }
  std::cout << tables.size() << " subgroup classes of index <= " << max_index << "\n";
  for (auto const& t : tables) {
    std::cout << "index " << t.num_cosets() << (is_normal(t) ? " normal" : "") << "  "
              << images_text(pres, permutation_action(t)) << "\n";
  }
  return kOk;
}

int cmd_coset(GroupArgs const& g, std::string const& subgroup, std::size_t max_cosets, bool json) {
  auto const pres = group(g);
  std::vector<Word> gens;
  std::size_t start = 0;
  while (start <= subgroup.size()) {
    std::size_t const end = std::min(subgroup.find(';', start), subgroup.size());
    std::string const piece = subgroup.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      try {
        gens.push_back(parse_word(piece, pres));
      } catch (ParseError const& e) {
        throw ParseError(start + e.position(), std::string("in --subgroup: ") + e.what());
      }
    }
    start = end + 1;
  }
  auto const t = coset_enumerate(pres, gens, max_cosets);
  if (json) {
    std::cout << coset_report_json(pres, t);
    return kOk;
  }
  std::cout << "index " << t.num_cosets() << "\n" << dump(t);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profinite rigidity toolkit for Baumslag-Solitar groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> threads_flag;
  app.add_option("--threads", threads_flag, "worker threads (default: PROFINITO_THREADS or all cores)");

  bool json = false;
  GroupArgs group_args;
  std::size_t max_order = 12;
  std::size_t max_index = kDefaultLowIndex;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::string subgroup;
  std::vector<std::int64_t> compare_bs;

  auto* ab = app.add_subcommand("abelianize", "invariant factors of G/G'");
  add_group_options(ab, group_args);
  ab->add_flag("--json", json);

  auto* cmp = app.add_subcommand("compare", "decide profinite isomorphism of two BS groups");
  cmp->add_option("--bs", compare_bs, "BS(M,N); give twice")
      ->expected(2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->type_name("M N")
      ->required();
  cmp->add_option("--max-order", max_order, "largest quotient order searched for a witness")
      ->check(CLI::Range(std::size_t{1}, kMaxFingerprintOrder));
  cmp->add_flag("--json", json);

  auto* fp = app.add_subcommand("fingerprint", "finite quotients up to isomorphism");
  add_group_options(fp, group_args);
  fp->add_option("--max-order", max_order)->check(CLI::Range(std::size_t{1}, kMaxFingerprintOrder));
  fp->add_flag("--json", json);

  auto* li = app.add_subcommand("lowindex", "subgroups of small index up to conjugacy");
  add_group_options(li, group_args);
  li->add_option("--max-index", max_index)->check(CLI::Range(std::size_t{1}, kMaxLowIndex));
  li->add_flag("--json", json);

  auto* cs = app.add_subcommand("coset", "Todd-Coxeter coset enumeration");
  add_group_options(cs, group_args);
  cs->add_option("--subgroup", subgroup, "subgroup generators \"w1; w2\"");
  cs->add_option("--max-cosets", max_cosets)->check(CLI::PositiveNumber);
  cs->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kParse;
  }

  try {
    std::size_t const threads = resolve_threads(threads_flag);
    if (ab->parsed()) return cmd_abelianize(group_args, json);
    if (cmp->parsed()) return cmd_compare(compare_bs, max_order, threads, json);
    if (fp->parsed()) return cmd_fingerprint(group_args, max_order, threads, json);
    if (li->parsed()) return cmd_lowindex(group_args, max_index, threads, json);
    return cmd_coset(group_args, subgroup, max_cosets, json);
  } catch (ParseError const& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kParse;
  } catch (PreconditionError const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (OverflowError const& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (NotResiduallyFinite const& e) {
    std::cerr << e.what() << "\n";
    return kNotRF;
  } catch (LimitExceeded const& e) {
    std::cerr << e.what() << "\n";
    return kLimit;
  }
}
