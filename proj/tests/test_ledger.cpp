#include "doctest.h"

#include "minlog/catalog.hpp"
#include "minlog/ledger.hpp"

#include <set>

using namespace minlog;

TEST_CASE("ledger entries are well formed") {
  const auto& all = ledger();
  CHECK(all.size() >= 100);

  std::set<std::string> names;
  for (const LedgerEntry& e : all) {
    CHECK(names.insert(e.name).second);
    REQUIRE(e.goal != nullptr);
    for (const auto& a : e.assumptions) REQUIRE(a != nullptr);
    if (e.expected) {
      CHECK(e.countermodel.empty());
    } else {
      REQUIRE_FALSE(e.countermodel.empty());
      CHECK(find_model(e.countermodel) != nullptr);
    }
  }

  CHECK(find_ledger_entry("PP=>DGP") != nullptr);
  CHECK(find_ledger_entry("PP=>DGP")->expected);
  CHECK(find_ledger_entry("nothing=>nowhere") == nullptr);

  const LedgerEntry* wlem_dgp = find_ledger_entry("WLEM!=>DGP");
  REQUIRE(wlem_dgp != nullptr);
  CHECK_FALSE(wlem_dgp->expected);
  CHECK(wlem_dgp->countermodel == "W4");
}

TEST_CASE("the hierarchy group holds exactly the ten diagram arrows") {
  std::set<std::string> arrows;
  for (const LedgerEntry& e : ledger())
    if (e.group == "hierarchy") {
      CHECK(e.expected);
      arrows.insert(e.name);
    }
  CHECK(arrows == std::set<std::string>{"DNE=>PP", "DNE=>EFQ", "PP=>LEM", "PP=>DGP", "PP=>WT",
                                        "LEM=>WLEM", "DGP=>WLEM", "DGP=>DGPimp", "EFQ=>WT",
                                        "WT=>DGPimp"});
}

TEST_CASE("every recorded claim checks out") {
  LedgerReport report = check_ledger(true);
  CHECK(report.pass);
  CHECK(report.checks.size() == ledger().size());

  for (const LedgerCheck& c : report.checks) {
    INFO("entry ", c.entry->name);
    CHECK(c.pass());
    CHECK(c.outcome != ProofOutcome::BudgetExceeded);
    CHECK((c.outcome == ProofOutcome::Derivable) == c.entry->expected);
  }
}

TEST_CASE("equivalence cycles close within each group") {
  // spot joints: each of these pairs closes a loop used to place a principle
  for (const char* name : {"DNE=>9", "9=>DNE", "PP=>13", "13=>1", "1=>PP", "DGP=>15", "15=>DGP",
                           "WLEM=>14", "14=>WLEM", "LEM=>SmL", "SmL=>WLEM"}) {
    const LedgerEntry* e = find_ledger_entry(name);
    REQUIRE(e != nullptr);
    CHECK(e->expected);
  }
}

TEST_CASE("separations name refuting models from the classification table") {
  for (const char* name :
       {"EFQ!=>LEM", "LEM!=>EFQ", "PP!=>DNE", "LEM!=>PP", "DGP!=>PP", "WLEM!=>DGP", "EFQ!=>WLEM",
        "DGPimp!=>WT", "WT!=>EFQ", "LEM!=>WT"}) {
    const LedgerEntry* e = find_ledger_entry(name);
    REQUIRE(e != nullptr);
    CHECK_FALSE(e->expected);
  }
}
