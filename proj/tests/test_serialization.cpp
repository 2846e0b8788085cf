#include "doctest.h"
#include "json.hpp"
#include "profinito/errors.hpp"
#include "profinito/lowindex.hpp"
#include "profinito/serialization.hpp"

using namespace profinito;
using nlohmann::json;

TEST_CASE("abelian invariants round-trip") {
  for (auto const& inv : {AbelianInvariants{2, {}}, AbelianInvariants{1, {4}}, AbelianInvariants{0, {2, 6, 12}},
                          AbelianInvariants{0, {}}}) {
    CHECK(abelian_invariants_from_json(to_json(inv)) == inv);
  }
  auto const j = json::parse(to_json(AbelianInvariants{1, {4}}));
  CHECK(j["text"] == "Z x Z4");
  CHECK(j["free_rank"] == 1);
}

TEST_CASE("iso key round-trip") {
  auto const fp = compute_fingerprint(bs_presentation(BSParams(2, 2)), 8);
  for (auto const& c : fp.classes) CHECK(iso_key_from_json(to_json(c.key)) == c.key);
}

TEST_CASE("fingerprint round-trip") {
  auto const fp = compute_fingerprint(bs_presentation(BSParams(3, 3)), 6);
  auto const text = to_json(fp);
  auto const back = fingerprint_from_json(text);
  CHECK(back.presentation == fp.presentation);
  CHECK(back.max_order == fp.max_order);
  REQUIRE(back.classes.size() == fp.classes.size());
  for (std::size_t i = 0; i < fp.classes.size(); ++i) {
    CHECK(back.classes[i].key == fp.classes[i].key);
    CHECK(back.classes[i].representative.gen_images() == fp.classes[i].representative.gen_images());
  }
  CHECK(to_json(back) == text);

  auto const j = json::parse(text);
  CHECK(j["presentation"] == "< a, t | t a^3 t^-1 a^-3 >");
  CHECK(j["classes"].size() == fp.classes.size());
  bool has_s3 = false;
  for (auto const& c : j["classes"]) has_s3 = has_s3 || (c["order"] == 6 && c["key"]["center_order"] == 1);
  CHECK(has_s3);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS((void)abelian_invariants_from_json("{"), ParseError);
  CHECK_THROWS_AS((void)abelian_invariants_from_json(R"({"free_rank": "x"})"), ParseError);
  CHECK_THROWS_AS((void)iso_key_from_json("[]"), ParseError);
  CHECK_THROWS_AS((void)fingerprint_from_json(R"({"presentation": "< a |", "max_order": 2, "classes": []})"),
                  ParseError);

  // A stored key that disagrees with the stored generator images.
  auto j = json::parse(to_json(compute_fingerprint(parse_presentation("< a | >"), 3)));
  j["classes"][2]["key"]["center_order"] = 1;
  CHECK_THROWS_AS((void)fingerprint_from_json(j.dump()), ParseError);

  // Images that do not satisfy the relators.
  auto k = json::parse(to_json(compute_fingerprint(parse_presentation("< a | a^2 >"), 2)));
  k["presentation"] = "< a | a^3 >";
  CHECK_THROWS_AS((void)fingerprint_from_json(k.dump()), ParseError);
}

TEST_CASE("report documents") {
  auto const pres = parse_presentation("< a | a^5 >");
  auto const coset = json::parse(coset_report_json(pres, coset_enumerate(pres, {})));
  CHECK(coset["index"] == 5);
  CHECK(coset["table"].size() == 5);
  CHECK(coset["table"][0] == json::array({2, 3}));

  auto const bs = bs_presentation(BSParams(2, 2));
  auto const low = json::parse(low_index_report_json(bs, 2, low_index_subgroups(bs, 2)));
  CHECK(low["count"] == 4);
  CHECK(low["subgroups"][0]["index"] == 1);
  CHECK(low["subgroups"][1]["normal"] == true);

  auto const cmp = json::parse(compare_report_json(BSParams(2, 2), BSParams(2, -2), false,
                                                   certify_distinction(BSParams(2, 2), BSParams(2, -2), 8)));
  CHECK(cmp["profinitely_isomorphic"] == false);
  CHECK(cmp["certificate"]["kind"] == "abelian");
  CHECK(cmp["certificate"]["second"]["text"] == "Z x Z4");

  auto const same = json::parse(compare_report_json(BSParams(1, 2), BSParams(2, 1), true, std::nullopt));
  CHECK(same["certificate"].is_null());
  CHECK(same["canonical"][1] == "BS(1,2)");
}
