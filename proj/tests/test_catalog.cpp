#include "doctest.h"

#include "minlog/catalog.hpp"
#include "minlog/formula.hpp"
#include "minlog/kripke.hpp"

#include <set>

using namespace minlog;

TEST_CASE("principle keys, aliases and displays are addressable and unique") {
  const auto& all = principles();
  CHECK(all.size() >= 30);

  std::set<std::string> names;
  for (const Principle& p : all) {
    CHECK(names.insert(p.key).second);
    for (const std::string& a : p.aliases) CHECK(names.insert(a).second);
    REQUIRE(p.schema.body != nullptr);
    CHECK_FALSE(p.schema.variables.empty());
    CHECK(p.schema.variables.size() <= 4);
    CHECK_FALSE(p.implicational_forms.empty());
  }

  CHECK(find_principle("DGP") == find_principle("11"));
  CHECK(find_principle("PP") == find_principle("10"));
  CHECK(find_principle("WT") == find_principle("13imp"));
  CHECK(find_principle("DGPimp") == find_principle("11imp"));
  CHECK(find_principle("DM1p") == find_principle("DM1'"));
  CHECK(find_principle("excluded middle") == find_principle("LEM"));
  CHECK(find_principle("nonsense") == nullptr);
}

TEST_CASE("table columns name the eight classified principles") {
  CHECK(table_principle_keys() ==
        std::vector<std::string>{"DNE", "EFQ", "LEM", "DGP", "PP", "WLEM", "WT", "DGPimp"});
  for (const std::string& k : table_principle_keys()) {
    const Principle* p = find_principle(k);
    REQUIRE(p != nullptr);
    CHECK_FALSE(p->provable_in_minimal);
  }
}

TEST_CASE("schema bodies read back as written") {
  CHECK(to_string(find_principle("DNE")->schema) == "~~phi -> phi");
  CHECK(to_string(find_principle("EFQ")->schema) == "bot -> phi");
  CHECK(to_string(find_principle("LEM")->schema) == "phi | ~phi");
  CHECK(to_string(find_principle("PP")->schema) == "((phi -> psi) -> phi) -> phi");
  CHECK(to_string(find_principle("WT")->schema) == "~psi -> ~~(psi -> theta)");
  CHECK(to_string(find_principle("DGPimp")->schema) == "~(phi -> psi) -> ~~(psi -> phi)");
  CHECK(to_string(find_principle("13")->schema) == "psi | (psi -> theta)");
  CHECK(find_principle("13")->schema.variables == std::vector<std::string>{"psi", "theta"});
}

TEST_CASE("implication-only forms match the rewrite of each schema") {
  auto forms = [](const char* key) {
    std::vector<std::string> out;
    for (const Schema& s : find_principle(key)->implicational_forms) out.push_back(to_string(s));
    return out;
  };

  CHECK(forms("LEM") == std::vector<std::string>{"~phi -> ~~~phi"});
  CHECK(forms("WLEM") == std::vector<std::string>{"~~phi -> ~~~~phi"});
  CHECK(forms("DGP") == std::vector<std::string>{"~(phi -> psi) -> ~~(psi -> phi)"});
  CHECK(forms("PP") == std::vector<std::string>{"((phi -> psi) -> phi) -> phi"});
  CHECK(forms("2") == std::vector<std::string>{"phi -> ~phi -> psi"});
  CHECK(forms("13") == std::vector<std::string>{"~psi -> ~~(psi -> theta)"});
  CHECK(forms("9") ==
        std::vector<std::string>{"~(phi -> psi) -> phi", "~(phi -> psi) -> ~psi"});
  CHECK(forms("DM2").size() == 3);

  // the translation of WT's schema is WT itself: already implication-only
  CHECK(forms("WT") == std::vector<std::string>{to_string(find_principle("WT")->schema)});

  for (const Principle& p : principles())
    for (const Schema& s : p.implicational_forms) {
      const ImplicationalTranslation again = translate_implicational(desugar(s.body));
      REQUIRE(again.result.size() == 1);
      CHECK(equal(again.result[0], desugar(s.body)));
    }
}

TEST_CASE("exactly the outright-derivable principles are flagged provable") {
  std::set<std::string> expected = {"DM2",   "LEMimp",   "WLEMimp", "3imp",  "4imp",
                                    "9impB", "14imp",    "DM1imp",  "DM2imp", "DM1pimp",
                                    "DM2pimpC", "17c",   "18c",     "6neg",  "EFQF"};
  std::set<std::string> got;
  for (const Principle& p : principles())
    if (p.provable_in_minimal) got.insert(p.key);
  CHECK(got == expected);
  for (const std::string& key : expected) CHECK(find_principle(key)->group == "provable");
}

TEST_CASE("the eleven reference structures") {
  const auto& all = models();
  REQUIRE(all.size() == 11);

  std::set<std::string> keys;
  for (const NamedModel& m : all) CHECK(keys.insert(m.key).second);

  CHECK(find_model("W2'") != nullptr);
  CHECK(find_model("W₂′") == find_model("W2'")); // display lookup
  CHECK(find_model("W9") == nullptr);

  CHECK(find_model("W1")->structure.size() == 1);
  CHECK(find_model("W1")->structure.abnormal_mask() == 0);
  CHECK(find_model("W1bot")->structure == lobotomy(find_model("W1")->structure));
  CHECK(find_model("W2bot")->structure == lobotomy(find_model("W2")->structure));
  CHECK(find_model("W3bot")->structure == lobotomy(find_model("W3")->structure));
  CHECK(find_model("W4bot")->structure == lobotomy(find_model("W4")->structure));

  const Structure& w2p = find_model("W2'")->structure;
  CHECK(w2p.abnormal_mask() == 0b10);
  CHECK(w2p.leq(0, 1));

  const Structure& w3 = find_model("W3")->structure;
  CHECK_FALSE(is_v_free(w3));
  CHECK(w3.abnormal_mask() == 0);
  CHECK(find_model("W3'")->structure.abnormal_mask() == 0b110);

  const Structure& w4 = find_model("W4")->structure;
  CHECK(w4.size() == 4);
  CHECK(w4.leq(0, 3));
  CHECK_FALSE(w4.leq(1, 2));

  const Structure& w5 = find_model("W5")->structure;
  CHECK(w5.size() == 3);
  CHECK(is_v_free(w5));
  CHECK(w5.abnormal_mask() == 0);
  CHECK(w5.leq(0, 2));

  CHECK(table_model_keys().size() == 10);
  for (const std::string& k : table_model_keys()) CHECK(find_model(k) != nullptr);
}
